"""Ray enumeration and exact polytope volumes."""

from fractions import Fraction

import pytest

from fanoalpha.polyhedra import extreme_rays_nonneg, polytope_volume, vertices_nonneg


class TestExtremeRays:
    def test_orthant_unchanged_by_valid_inequality(self):
        rays = extreme_rays_nonneg([(1, 1)], 2)
        assert rays == [(0, 1), (1, 0)]

    def test_halved_quadrant(self):
        # x >= y cuts the quadrant at the diagonal
        rays = extreme_rays_nonneg([(1, -1)], 2)
        assert rays == [(1, 0), (1, 1)]

    def test_three_dimensional_cut(self):
        rays = extreme_rays_nonneg([(1, 1, -1)], 3)
        assert set(rays) == {(1, 0, 0), (0, 1, 0), (1, 0, 1), (0, 1, 1)}


class TestVerticesNonneg:
    def test_polar_of_two_pure_powers(self):
        vertices, recession = vertices_nonneg([((2, 0), 1), ((0, 3), 1)], 2)
        assert vertices == [(Fraction(1, 2), Fraction(1, 3))]
        assert set(recession) == {(1, 0), (0, 1)}

    def test_simplex_vertices(self):
        # u1 + u2 >= 1 in the quadrant: vertices of the region's polar
        vertices, _ = vertices_nonneg([((1, 0), 1), ((0, 1), 1)], 2)
        assert vertices == [(Fraction(1), Fraction(1))]

    def test_mixed_generators(self):
        vertices, _ = vertices_nonneg([((2, 1), 1), ((1, 3), 1)], 2)
        assert sorted(vertices) == [
            (Fraction(0), Fraction(1)),
            (Fraction(2, 5), Fraction(1, 5)),
            (Fraction(1), Fraction(0)),
        ]


class TestPolytopeVolume:
    def test_unit_square(self):
        square = [((1, 0), 1), ((-1, 0), 0), ((0, 1), 1), ((0, -1), 0)]
        assert polytope_volume(square, 2) == 1

    def test_shifted_square(self):
        square = [((1, 0), 2), ((-1, 0), -1), ((0, 1), 1), ((0, -1), 0)]
        assert polytope_volume(square, 2) == 1

    def test_triangle(self):
        triangle = [((1, 1), 1), ((-1, 0), 0), ((0, -1), 0)]
        assert polytope_volume(triangle, 2) == Fraction(1, 2)

    def test_empty(self):
        region = [((1,), 0), ((-1,), -1)]
        assert polytope_volume(region, 1) == 0

    def test_lower_dimensional(self):
        region = [((1, 0), 0), ((-1, 0), 0), ((0, 1), 5), ((0, -1), 0)]
        assert polytope_volume(region, 2) == 0

    def test_duplicate_constraints_not_double_counted(self):
        square = [
            ((1, 0), 1),
            ((2, 0), 2),
            ((-1, 0), 0),
            ((0, 1), 1),
            ((0, -1), 0),
        ]
        assert polytope_volume(square, 2) == 1

    def test_simplex_3d(self):
        simplex = [
            ((1, 1, 1), 1),
            ((-1, 0, 0), 0),
            ((0, -1, 0), 0),
            ((0, 0, -1), 0),
        ]
        assert polytope_volume(simplex, 3) == Fraction(1, 6)

    def test_rational_box_4d(self):
        constraints = []
        sides = [Fraction(1, 2), Fraction(2, 3), Fraction(3), Fraction(5, 7)]
        for axis, side in enumerate(sides):
            row_pos = tuple(1 if j == axis else 0 for j in range(4))
            row_neg = tuple(-1 if j == axis else 0 for j in range(4))
            constraints.append((row_pos, side))
            constraints.append((row_neg, 0))
        expected = Fraction(1, 2) * Fraction(2, 3) * 3 * Fraction(5, 7)
        assert polytope_volume(constraints, 4) == expected

    def test_unbounded_raises(self):
        with pytest.raises(ValueError, match="unbounded"):
            polytope_volume([((1, 0), 1), ((0, 1), 1)], 2)

    def test_infeasible_constant(self):
        assert polytope_volume([((0, 0), -1), ((1, 0), 1)], 2) == 0

"""Monomial thresholds, Newton polyhedra, lengths, and multiplicities."""

import itertools
import json
import random
import warnings
from fractions import Fraction

import pytest

from fanoalpha.monomial_lct import (
    MonomialIdeal,
    MonomialValuation,
    covolume,
    dfem_check,
    is_integrally_closed,
    lct_monomial,
    lct_power,
    lct_via_facets,
    lct_via_lp,
    length_quotient,
    multiplicity,
    newton_polyhedron,
    power_colengths,
    random_antichain_ideal,
    random_m_primary_ideal,
    reduce_to_antichain,
)


def axis_ideal(num_vars: int, k: int) -> MonomialIdeal:
    """(x_1, ..., x_k) inside a polynomial ring with num_vars variables."""
    gens = [tuple(1 if j == i else 0 for j in range(num_vars)) for i in range(k)]
    return MonomialIdeal(num_vars, gens)


def max_ideal_power(num_vars: int, m: int) -> MonomialIdeal:
    """(x_1, ..., x_d)^m: all exponent vectors of total degree m."""
    gens = [
        g
        for g in itertools.product(range(m + 1), repeat=num_vars)
        if sum(g) == m
    ]
    return MonomialIdeal(num_vars, gens)


class TestMonomialIdeal:
    def test_antichain_reduction(self):
        ideal = MonomialIdeal(2, [(1, 0), (2, 1), (0, 2)])
        assert ideal.generators == ((0, 2), (1, 0))

    def test_reduction_warning_on_json_load(self):
        with pytest.warns(UserWarning, match="antichain"):
            MonomialIdeal.from_json({"vars": 2, "generators": [[1, 0], [2, 1]]})

    def test_json_roundtrip(self):
        ideal = MonomialIdeal(3, [(2, 0, 1), (0, 3, 0), (1, 1, 1)])
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            loaded = MonomialIdeal.from_json(json.loads(json.dumps(ideal.to_json())))
        assert loaded == ideal

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            MonomialIdeal(2, [])
        with pytest.raises(ValueError):
            MonomialIdeal(2, [(1, 0, 0)])
        with pytest.raises(ValueError):
            MonomialIdeal(2, [(-1, 0)])
        with pytest.raises(ValueError, match="'vars'"):
            MonomialIdeal.from_json({"vars": "2", "generators": [[1, 0]]})

    def test_m_primary_detection(self):
        assert MonomialIdeal(2, [(2, 0), (0, 3)]).is_m_primary()
        assert not MonomialIdeal(2, [(1, 1)]).is_m_primary()
        assert not axis_ideal(3, 2).is_m_primary()
        assert MonomialIdeal(2, [(2, 0), (1, 1), (0, 2)]).pure_power_exponents() == (2, 2)

    def test_reduce_to_antichain(self):
        assert reduce_to_antichain([(1, 2), (1, 2), (2, 2), (0, 5)]) == ((0, 5), (1, 2))


class TestNewtonPolyhedron:
    def test_axis_ideal_simplex(self):
        polyhedron = newton_polyhedron(MonomialIdeal(2, [(1, 0), (0, 1)]))
        assert [(f.normal, f.offset) for f in polyhedron.facets] == [((1, 1), 1)]

    def test_two_pure_powers(self):
        polyhedron = newton_polyhedron(MonomialIdeal(2, [(2, 0), (0, 3)]))
        assert [(f.normal, f.offset) for f in polyhedron.facets] == [((3, 2), 6)]

    def test_mixed_generators(self):
        # hull of (2,1) and (1,3) plus the orthant: worked out by hand from
        # the polar region {w >= 0 : 2w1 + w2 >= 1, w1 + 3w2 >= 1}, whose
        # vertices are (1,0), (0,1) and (2/5, 1/5)
        polyhedron = newton_polyhedron(MonomialIdeal(2, [(2, 1), (1, 3)]))
        assert sorted((f.normal, f.offset) for f in polyhedron.facets) == [
            ((0, 1), 1),
            ((1, 0), 1),
            ((2, 1), 5),
        ]

    def test_vertices_are_extreme_generators(self):
        polyhedron = newton_polyhedron(MonomialIdeal(2, [(2, 0), (1, 1), (0, 2)]))
        assert polyhedron.vertices == ((0, 2), (2, 0))
        polyhedron = newton_polyhedron(MonomialIdeal(2, [(3, 0), (1, 1), (0, 3)]))
        assert polyhedron.vertices == ((0, 3), (1, 1), (3, 0))

    def test_generators_inside_every_facet_tight(self):
        rng = random.Random(11)
        for _ in range(50):
            ideal = random_antichain_ideal(rng, rng.randint(1, 4), 6, 6)
            polyhedron = newton_polyhedron(ideal)
            for g in ideal.generators:
                assert polyhedron.contains(g)
            for facet in polyhedron.facets:
                assert any(
                    sum(w * e for w, e in zip(facet.normal, g)) == facet.offset
                    for g in ideal.generators
                )

    def test_membership(self):
        polyhedron = newton_polyhedron(MonomialIdeal(2, [(2, 0), (0, 3)]))
        assert polyhedron.contains((2, 0))
        assert polyhedron.contains((Fraction(1), Fraction(3, 2)))
        assert not polyhedron.contains((1, 1))
        assert not polyhedron.contains((-1, 5))

    def test_desk_scale_guard(self):
        with pytest.raises(ValueError, match="variables"):
            newton_polyhedron(MonomialIdeal(9, [tuple([1] * 9)]))


class TestLct:
    def test_axis_ideals(self):
        for num_vars in range(1, 5):
            for k in range(1, num_vars + 1):
                assert lct_monomial(axis_ideal(num_vars, k)) == k

    def test_pure_powers(self):
        assert lct_monomial(MonomialIdeal(2, [(2, 0), (0, 3)])) == Fraction(5, 6)

    def test_high_powers_match_bound_shape(self):
        # (x_1^(n+1), ..., x_k^(n+1)) has threshold k/(n+1)
        for n in range(1, 6):
            for k in range(1, min(n, 4) + 1):
                gens = [
                    tuple(n + 1 if j == i else 0 for j in range(n)) for i in range(k)
                ]
                ideal = MonomialIdeal(n, gens)
                assert lct_monomial(ideal) == Fraction(k, n + 1)

    def test_unit_and_zero_ideals_rejected(self):
        with pytest.raises(ValueError, match="unit ideal"):
            lct_monomial(MonomialIdeal(2, [(0, 0)]))
        with pytest.raises(ValueError):
            MonomialIdeal(2, [])  # the zero ideal cannot even be constructed

    def test_routes_agree_random_sweep(self):
        rng = random.Random(20240)
        for _ in range(200):
            ideal = random_antichain_ideal(rng, rng.randint(1, 4), 6, 6)
            assert lct_via_lp(ideal) == lct_via_facets(ideal), ideal

    def test_scaling_rule(self):
        assert lct_power(MonomialIdeal(2, [(1, 0), (0, 1)]), 2) == 1
        assert lct_power(MonomialIdeal(2, [(2, 0), (0, 3)]), 1) == Fraction(5, 6)
        for n in range(2, 6):
            for k in range(1, n + 1):
                assert lct_power(axis_ideal(n, k), n + 1) == Fraction(k, n + 1)

    def test_scaling_rule_random(self):
        rng = random.Random(77)
        for _ in range(40):
            ideal = random_antichain_ideal(rng, rng.randint(1, 3), 5, 5)
            a = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            assert lct_power(ideal, a) * a == lct_monomial(ideal)

    def test_nonpositive_power_rejected(self):
        with pytest.raises(ValueError):
            lct_power(axis_ideal(2, 2), 0)
        with pytest.raises(ValueError):
            lct_power(axis_ideal(2, 2), Fraction(-1, 2))

    def test_valuation_cross_check(self):
        # the threshold is the infimum of (weight sum)/(order) over monomial
        # valuations; random weights can only sit above the facet optimum,
        # and a facet normal attains it
        rng = random.Random(4242)
        for _ in range(20):
            ideal = random_antichain_ideal(rng, rng.randint(1, 3), 5, 4)
            value = lct_monomial(ideal)
            best = None
            for _ in range(50):
                weights = [rng.randint(0, 6) for _ in range(ideal.num_vars)]
                if all(w == 0 for w in weights):
                    continue
                bound = MonomialValuation(weights).lct_bound(ideal)
                if bound is not None:
                    best = bound if best is None else min(best, bound)
                    assert bound >= value
            for facet in newton_polyhedron(ideal).facets:
                attained = MonomialValuation(facet.normal).lct_bound(ideal)
                assert attained == Fraction(sum(facet.normal), facet.offset)
            assert any(
                MonomialValuation(f.normal).lct_bound(ideal) == value
                for f in newton_polyhedron(ideal).facets
            )

    def test_valuation_validation(self):
        with pytest.raises(ValueError):
            MonomialValuation((0, 0))
        with pytest.raises(ValueError):
            MonomialValuation((-1, 2))
        assert MonomialValuation((1, 2)).log_discrepancy == 3
        assert MonomialValuation((0, 1)).lct_bound(MonomialIdeal(2, [(1, 0)])) is None


class TestLengthQuotient:
    def test_examples(self):
        assert length_quotient(MonomialIdeal(2, [(2, 0), (0, 3)])) == 6
        assert length_quotient(MonomialIdeal(2, [(1, 0), (0, 1)])) == 1
        assert length_quotient(max_ideal_power(2, 2)) == 3

    def test_rejects_non_m_primary(self):
        with pytest.raises(ValueError, match="m-primary"):
            length_quotient(MonomialIdeal(2, [(1, 1)]))

    def test_complete_intersection_box(self):
        for a in range(1, 5):
            for b in range(1, 5):
                ideal = MonomialIdeal(2, [(a, 0), (0, b)])
                assert length_quotient(ideal) == a * b


class TestMultiplicity:
    def test_examples(self):
        assert multiplicity(MonomialIdeal(2, [(2, 0), (0, 3)])) == 6
        assert multiplicity(max_ideal_power(2, 2)) == 4
        for d in range(1, 5):
            assert multiplicity(axis_ideal(d, d)) == 1

    def test_complete_intersections_match_length(self):
        for d in (1, 2, 3):
            for exps in itertools.combinations_with_replacement(range(1, 6), d):
                gens = [
                    tuple(exps[i] if j == i else 0 for j in range(d)) for i in range(d)
                ]
                ideal = MonomialIdeal(d, gens)
                expected = 1
                for e in exps:
                    expected *= e
                assert multiplicity(ideal) == expected
                assert length_quotient(ideal) == expected

    def test_max_ideal_powers(self):
        for m in range(1, 6):
            assert multiplicity(max_ideal_power(2, m)) == m * m
        for m in range(1, 4):
            assert multiplicity(max_ideal_power(3, m)) == m**3

    def test_length_vs_multiplicity_discriminates(self):
        ideal = max_ideal_power(2, 2)
        assert multiplicity(ideal) == 4
        assert length_quotient(ideal) == 3

    def test_covolume_route_agrees_with_limit_route(self):
        # run both routes on ideals where the covolume route is justified
        cases = [
            MonomialIdeal(2, [(2, 0), (0, 3)]),
            MonomialIdeal(2, [(3, 0), (1, 1), (0, 3)]),
            max_ideal_power(2, 3),
            max_ideal_power(3, 2),
            MonomialIdeal(3, [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 1)]),
        ]
        for ideal in cases:
            d = ideal.num_vars
            expected = multiplicity(ideal)
            colengths = [Fraction(v) for v in power_colengths(ideal, d * ideal.max_exponent + d)]
            diffs = colengths
            for _ in range(d):
                diffs = [b - a for a, b in zip(diffs, diffs[1:])]
            assert diffs[-1] == diffs[-2] == expected, ideal

    def test_limit_route_on_non_integrally_closed(self):
        ideal = MonomialIdeal(2, [(4, 0), (0, 4), (3, 1), (1, 3)])
        assert not is_integrally_closed(ideal)
        assert len(ideal.generators) > 2
        # limit route fires; the value still matches the covolume because
        # multiplicity only sees the integral closure
        assert multiplicity(ideal) == 16
        assert 2 * covolume(ideal) == 16

    def test_rejects_non_m_primary(self):
        with pytest.raises(ValueError, match="m-primary"):
            multiplicity(MonomialIdeal(2, [(1, 1)]))


class TestIntegralClosure:
    def test_powers_of_max_ideal_closed(self):
        for m in range(1, 5):
            assert is_integrally_closed(max_ideal_power(2, m))

    def test_non_closed_example(self):
        # (x^2, y^2) misses the lattice point (1,1) of its polyhedron
        assert not is_integrally_closed(MonomialIdeal(2, [(2, 0), (0, 2)]))
        assert is_integrally_closed(MonomialIdeal(2, [(2, 0), (1, 1), (0, 2)]))


class TestCovolume:
    def test_simplex_cases(self):
        assert covolume(MonomialIdeal(2, [(2, 0), (0, 3)])) == 3
        assert covolume(MonomialIdeal(1, [(5,)])) == 5
        assert covolume(axis_ideal(3, 3)) == Fraction(1, 6)

    def test_two_facet_region(self):
        # complement of the hull of (3,0), (1,1), (0,3): quadrilateral of area 3
        assert covolume(MonomialIdeal(2, [(3, 0), (1, 1), (0, 3)])) == 3


class TestDfem:
    def test_examples(self):
        cert = dfem_check(MonomialIdeal(2, [(1, 0), (0, 1)]))
        assert cert.satisfied and cert.lhs == 4 and cert.rhs == 4

        cert = dfem_check(MonomialIdeal(2, [(2, 0), (0, 3)]))
        assert cert.satisfied and cert.lhs == Fraction(25, 6) and cert.rhs == 4

        cert = dfem_check(max_ideal_power(2, 2))
        assert cert.satisfied and cert.lhs == 4 and cert.rhs == 4

    def test_equality_at_max_ideal_powers(self):
        for d, m in [(1, 3), (2, 2), (2, 4), (3, 2)]:
            cert = dfem_check(max_ideal_power(d, m))
            assert cert.lhs == cert.rhs == d**d

    def test_random_sweep(self):
        rng = random.Random(90210)
        for _ in range(60):
            d = rng.randint(1, 3)
            ideal = random_m_primary_ideal(rng, d, 6, rng.randint(0, 3))
            cert = dfem_check(ideal)
            assert cert.satisfied, ideal
            assert cert.lhs >= cert.rhs

    def test_rejects_non_m_primary(self):
        with pytest.raises(ValueError, match="m-primary"):
            dfem_check(MonomialIdeal(2, [(1, 1)]))

"""Exact polyhedral primitives: ray enumeration and polytope volume.

All cones handled here live inside the nonnegative orthant, which keeps
the double-description step simple: the orthant's unit rays are a valid
starting description, and every intermediate cone is pointed, so the
combinatorial adjacency test (no third ray's tight set contains the
intersection of two tight sets) is sound.

Volumes are computed by the classical recursive boundary decomposition:
d * vol(P) equals the sum over facets of (signed offset) * (facet volume),
and projecting each facet out along one coordinate of its normal turns
the Euclidean facet volume into a rational quantity.  Everything stays in
Fraction arithmetic throughout.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .exact_math import RationalLike, as_rational

IntVector = tuple[int, ...]
FracVector = tuple[Fraction, ...]


def _primitive(vector: Sequence[Fraction]) -> IntVector:
    """Scale a nonzero rational vector by a positive rational to coprime ints."""
    denom_lcm = 1
    for v in vector:
        denom_lcm = denom_lcm * v.denominator // gcd(denom_lcm, v.denominator)
    ints = [int(v * denom_lcm) for v in vector]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(v // g for v in ints)


def _dot(a: Sequence[Fraction], b: Sequence[int]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def extreme_rays_nonneg(
    constraints: Sequence[Sequence[RationalLike]], dim: int
) -> list[IntVector]:
    """Extreme rays of {x >= 0 : a.x >= 0 for each constraint row a}.

    Incremental double description starting from the orthant.  Rays are
    returned as primitive integer vectors in sorted order.
    """
    rows: list[FracVector] = [
        tuple(Fraction(1 if j == i else 0) for j in range(dim)) for i in range(dim)
    ]
    extra_rows = [tuple(as_rational(v) for v in row) for row in constraints]

    def zero_set(ray: IntVector, processed: int) -> frozenset[int]:
        tight = {i for i in range(dim) if ray[i] == 0}
        for idx in range(processed):
            if _dot(extra_rows[idx], ray) == 0:
                tight.add(dim + idx)
        return frozenset(tight)

    rays: list[IntVector] = [
        tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)
    ]
    for processed, row in enumerate(extra_rows):
        values = {ray: _dot(row, ray) for ray in rays}
        keep = [ray for ray in rays if values[ray] >= 0]
        negative = [ray for ray in rays if values[ray] < 0]
        if not negative:
            rays = keep
            continue
        tight_sets = {ray: zero_set(ray, processed) for ray in rays}
        new_rays: dict[IntVector, None] = {ray: None for ray in keep}
        for plus in rays:
            if values[plus] <= 0:
                continue
            for minus in negative:
                common = tight_sets[plus] & tight_sets[minus]
                adjacent = not any(
                    other not in (plus, minus) and common <= tight_sets[other]
                    for other in rays
                )
                if not adjacent:
                    continue
                combo = tuple(
                    values[plus] * m - values[minus] * p for p, m in zip(plus, minus)
                )
                new_rays[_primitive(combo)] = None
        rays = list(new_rays)
    return sorted(rays)


def vertices_nonneg(
    inequalities: Sequence[tuple[Sequence[RationalLike], RationalLike]], dim: int
) -> tuple[list[FracVector], list[IntVector]]:
    """Vertices and recession rays of {x >= 0 : a.x >= c for each (a, c)}.

    Works by enumerating extreme rays of the homogenization in one more
    dimension; rays with positive last coordinate dehomogenize to
    vertices, the rest are recession directions.
    """
    lifted = [
        tuple(as_rational(v) for v in a) + (-as_rational(c),) for a, c in inequalities
    ]
    vertices: list[FracVector] = []
    recession: list[IntVector] = []
    for ray in extreme_rays_nonneg(lifted, dim + 1):
        t = ray[-1]
        if t > 0:
            vertices.append(tuple(Fraction(v, t) for v in ray[:-1]))
        else:
            recession.append(ray[:-1])
    return vertices, recession


def _canonical_leq(
    constraints: Sequence[tuple[Sequence[Fraction], Fraction]]
) -> list[tuple[IntVector, Fraction]] | None:
    """Normalize a.x <= b constraints to primitive normals, dropping repeats.

    Returns None when a constant constraint is already infeasible.  For
    parallel constraints with the same direction only the tightest bound
    is kept, which protects the recursive volume formula from counting
    one supporting hyperplane twice.
    """
    tightest: dict[IntVector, Fraction] = {}
    for a, b in constraints:
        if all(v == 0 for v in a):
            if b < 0:
                return None
            continue
        denom_lcm = 1
        for v in a:
            denom_lcm = denom_lcm * v.denominator // gcd(denom_lcm, v.denominator)
        ints = [int(v * denom_lcm) for v in a]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        key = tuple(v // g for v in ints)
        bound = b * denom_lcm / g
        if key not in tightest or bound < tightest[key]:
            tightest[key] = bound
    return sorted(tightest.items())


def polytope_volume(
    constraints: Sequence[tuple[Sequence[RationalLike], RationalLike]], dim: int
) -> Fraction:
    """Exact volume of the polytope {x in R^dim : a.x <= b for each (a, b)}.

    Raises ValueError if the region is unbounded.  Empty and lower
    dimensional regions have volume zero.
    """
    normalized = [
        (tuple(as_rational(v) for v in a), as_rational(b)) for a, b in constraints
    ]
    return _volume(normalized, dim)


def _volume(constraints: list[tuple[FracVector, Fraction]], dim: int) -> Fraction:
    canon = _canonical_leq(constraints)
    if canon is None:
        return Fraction(0)
    if dim == 0:
        return Fraction(1)
    if dim == 1:
        upper = None
        lower = None
        for (a,), b in canon:
            bound = b / a
            if a > 0:
                upper = bound if upper is None else min(upper, bound)
            else:
                lower = bound if lower is None else max(lower, bound)
        if upper is None or lower is None:
            raise ValueError("unbounded region has no finite volume")
        return max(Fraction(0), upper - lower)
    if not canon:
        raise ValueError("unbounded region has no finite volume")
    total = Fraction(0)
    for idx, (normal, offset) in enumerate(canon):
        pivot = next(j for j, v in enumerate(normal) if v != 0)
        projected: list[tuple[FracVector, Fraction]] = []
        for jdx, (other, other_b) in enumerate(canon):
            if jdx == idx:
                continue
            factor = Fraction(other[pivot], normal[pivot])
            new_a = tuple(
                other[j] - factor * normal[j] for j in range(dim) if j != pivot
            )
            projected.append((new_a, other_b - factor * offset))
        total += (offset / abs(normal[pivot])) * _volume(projected, dim - 1)
    return total / dim

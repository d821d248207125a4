"""Log canonical thresholds and multiplicities of monomial ideals.

The ambient ring is a polynomial ring (smooth affine space) in ``d``
variables.  A monomial ideal is stored as its minimal generating set of
exponent vectors, reduced to an antichain: no generator dominates another
componentwise.

The Newton polyhedron of an ideal is the convex hull of its exponent
vectors plus the nonnegative orthant.  Its facets with positive offset
correspond, by blocking duality, to the vertices of the polar region
{w >= 0 : <w, g> >= 1 for every generator g}, which are enumerated
exactly by double description.  The log canonical threshold is computed
two independent ways that must agree:

* an exact linear program: the smallest t with t*(1,...,1) inside the
  polyhedron, using only the generator description;
* the minimum of <w, (1,...,1)> / c over the facet inequalities
  <w, u> >= c.

Multiplicities use two routes as well: d! times the covolume of the
staircase region under the Newton polyhedron (valid for complete
intersections and integrally closed ideals, since multiplicity is
invariant under integral closure), and the Hilbert-Samuel limit
extracted from exact colengths of powers by finite differences.
"""

from __future__ import annotations

import itertools
import math
import random
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from .exact_lp import solve_min
from .exact_math import RationalLike, as_rational, format_rational
from .polyhedra import polytope_volume, vertices_nonneg

Exponent = tuple[int, ...]

MAX_VARS = 8
MAX_GENERATORS = 64


def reduce_to_antichain(vectors: Iterable[Sequence[int]]) -> tuple[Exponent, ...]:
    """Minimal elements of a set of exponent vectors, sorted and deduplicated."""
    unique = sorted({tuple(v) for v in vectors})
    minimal = [
        v
        for v in unique
        if not any(w != v and all(a <= b for a, b in zip(w, v)) for w in unique)
    ]
    return tuple(minimal)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its antichain of generator exponents."""

    num_vars: int
    generators: tuple[Exponent, ...]

    def __init__(self, num_vars: int, generators: Iterable[Sequence[int]]) -> None:
        if not isinstance(num_vars, int) or num_vars < 1:
            raise ValueError(f"num_vars must be a positive integer, got {num_vars!r}")
        raw = [tuple(g) for g in generators]
        if not raw:
            raise ValueError("a monomial ideal needs at least one generator")
        for g in raw:
            if len(g) != num_vars:
                raise ValueError(f"generator {g} does not have {num_vars} entries")
            if any(not isinstance(e, int) or isinstance(e, bool) or e < 0 for e in g):
                raise ValueError(f"generator {g} must consist of nonnegative integers")
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "generators", reduce_to_antichain(raw))

    @property
    def is_unit(self) -> bool:
        return self.generators == ((0,) * self.num_vars,)

    def is_m_primary(self) -> bool:
        """True iff every coordinate axis carries a pure-power generator."""
        return self.pure_power_exponents() is not None

    def pure_power_exponents(self) -> Optional[tuple[int, ...]]:
        """Per-axis pure-power exponents (a_1, ..., a_d), or None if some axis has none."""
        powers = []
        for axis in range(self.num_vars):
            exps = [
                g[axis]
                for g in self.generators
                if g[axis] > 0 and all(e == 0 for j, e in enumerate(g) if j != axis)
            ]
            if not exps:
                return None
            powers.append(min(exps))
        return tuple(powers)

    @property
    def max_exponent(self) -> int:
        return max(max(g) for g in self.generators)

    def contains_exponent(self, point: Sequence[int]) -> bool:
        return any(all(p >= e for p, e in zip(point, g)) for g in self.generators)

    def to_json(self) -> dict:
        return {"vars": self.num_vars, "generators": [list(g) for g in self.generators]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "MonomialIdeal":
        if not isinstance(obj, Mapping):
            raise ValueError("monomial ideal must be a JSON object")
        if "vars" not in obj:
            raise ValueError("monomial ideal missing field 'vars'")
        if "generators" not in obj:
            raise ValueError("monomial ideal missing field 'generators'")
        num_vars = obj["vars"]
        if not isinstance(num_vars, int) or isinstance(num_vars, bool):
            raise ValueError(f"field 'vars': expected integer, got {num_vars!r}")
        raw = obj["generators"]
        if not isinstance(raw, list):
            raise ValueError("field 'generators': expected a list of exponent vectors")
        try:
            ideal = cls(num_vars, [tuple(g) for g in raw])
        except TypeError:
            raise ValueError("field 'generators': expected a list of exponent vectors") from None
        if set(ideal.generators) != {tuple(g) for g in raw}:
            warnings.warn(
                "generator list was not an antichain; reduced to "
                f"{[list(g) for g in ideal.generators]}",
                stacklevel=2,
            )
        return ideal

    def __str__(self) -> str:
        def monomial(g: Exponent) -> str:
            if all(e == 0 for e in g):
                return "1"
            factors = []
            for i, e in enumerate(g):
                if e == 1:
                    factors.append(f"x{i + 1}")
                elif e > 1:
                    factors.append(f"x{i + 1}^{e}")
            return "*".join(factors)

        return "(" + ", ".join(monomial(g) for g in self.generators) + ")"


@dataclass(frozen=True)
class Facet:
    """Facet inequality <normal, u> >= offset with primitive integer data."""

    normal: tuple[int, ...]
    offset: int

    def __str__(self) -> str:
        terms = []
        for i, w in enumerate(self.normal):
            if w == 1:
                terms.append(f"u{i + 1}")
            elif w > 1:
                terms.append(f"{w}*u{i + 1}")
        return " + ".join(terms) + f" >= {self.offset}"


@dataclass(frozen=True)
class NewtonPolyhedron:
    """conv(generators) + nonnegative orthant, in facet and vertex form.

    ``facets`` lists only the inequalities with positive offset; the
    coordinate bounds u_i >= 0 are implicit.
    """

    num_vars: int
    vertices: tuple[Exponent, ...]
    facets: tuple[Facet, ...]

    def contains(self, point: Sequence[RationalLike]) -> bool:
        coords = [as_rational(p) for p in point]
        if len(coords) != self.num_vars:
            raise ValueError(f"point {point!r} does not have {self.num_vars} entries")
        if any(c < 0 for c in coords):
            return False
        return all(
            sum(w * c for w, c in zip(f.normal, coords)) >= f.offset for f in self.facets
        )


def _rank(rows: list[list[Fraction]]) -> int:
    matrix = [row[:] for row in rows]
    rank = 0
    cols = len(matrix[0]) if matrix else 0
    for col in range(cols):
        pivot_row = next((i for i in range(rank, len(matrix)) if matrix[i][col] != 0), -1)
        if pivot_row < 0:
            continue
        matrix[rank], matrix[pivot_row] = matrix[pivot_row], matrix[rank]
        inv = matrix[rank][col]
        matrix[rank] = [v / inv for v in matrix[rank]]
        for i in range(len(matrix)):
            if i != rank and matrix[i][col] != 0:
                factor = matrix[i][col]
                matrix[i] = [v - factor * w for v, w in zip(matrix[i], matrix[rank])]
        rank += 1
        if rank == len(matrix):
            break
    return rank


def newton_polyhedron(ideal: MonomialIdeal) -> NewtonPolyhedron:
    """Exact facet and vertex description of the Newton polyhedron."""
    d = ideal.num_vars
    if d > MAX_VARS:
        raise ValueError(f"supported up to {MAX_VARS} variables, got {d}")
    if len(ideal.generators) > MAX_GENERATORS:
        raise ValueError(f"supported up to {MAX_GENERATORS} generators")

    facets: list[Facet] = []
    if not ideal.is_unit:
        polar_vertices, _ = vertices_nonneg(
            [(g, 1) for g in ideal.generators], d
        )
        for w in polar_vertices:
            denom_lcm = 1
            for v in w:
                denom_lcm = denom_lcm * v.denominator // math.gcd(denom_lcm, v.denominator)
            normal = tuple(int(v * denom_lcm) for v in w)
            offset = denom_lcm
            g = offset
            for v in normal:
                g = math.gcd(g, v)
            facets.append(Facet(tuple(v // g for v in normal), offset // g))
    facets.sort(key=lambda f: (f.normal, f.offset))

    for facet in facets:
        values = [sum(w * e for w, e in zip(facet.normal, g)) for g in ideal.generators]
        if any(v < facet.offset for v in values):
            raise RuntimeError(f"facet {facet} violated by a generator")
        if all(v > facet.offset for v in values):
            raise RuntimeError(f"facet {facet} is tight at no generator")

    vertices = []
    for g in ideal.generators:
        tight_rows: list[list[Fraction]] = [
            [Fraction(w) for w in facet.normal]
            for facet in facets
            if sum(w * e for w, e in zip(facet.normal, g)) == facet.offset
        ]
        for axis in range(d):
            if g[axis] == 0:
                tight_rows.append(
                    [Fraction(1 if j == axis else 0) for j in range(d)]
                )
        if tight_rows and _rank(tight_rows) == d:
            vertices.append(g)
    if ideal.is_unit:
        vertices = [(0,) * d]
    return NewtonPolyhedron(num_vars=d, vertices=tuple(vertices), facets=tuple(facets))


@dataclass(frozen=True)
class MonomialValuation:
    """Monomial valuation with nonnegative integer weights, not all zero.

    On smooth affine space its log discrepancy is the weight sum, and its
    value on a monomial ideal is the minimum weighted degree of a
    generator.
    """

    weights: tuple[int, ...]

    def __init__(self, weights: Sequence[int]) -> None:
        w = tuple(weights)
        if not w or all(v == 0 for v in w) or any(v < 0 for v in w):
            raise ValueError(f"weights must be nonnegative and not all zero, got {w!r}")
        object.__setattr__(self, "weights", w)

    @property
    def log_discrepancy(self) -> int:
        return sum(self.weights)

    def order(self, ideal: MonomialIdeal) -> int:
        if len(self.weights) != ideal.num_vars:
            raise ValueError("valuation and ideal disagree on the number of variables")
        return min(sum(w * e for w, e in zip(self.weights, g)) for g in ideal.generators)

    def lct_bound(self, ideal: MonomialIdeal) -> Optional[Fraction]:
        """A_X / ord on the ideal; None when the valuation does not see it."""
        order = self.order(ideal)
        if order == 0:
            return None
        return Fraction(self.log_discrepancy, order)


def _require_proper(ideal: MonomialIdeal) -> None:
    if ideal.is_unit:
        raise ValueError(
            "unit ideal: Newton polyhedron is the whole orthant and the threshold is undefined"
        )


def lct_via_facets(ideal: MonomialIdeal) -> Fraction:
    """min over facet inequalities <w, u> >= c of <w, (1,...,1)> / c."""
    _require_proper(ideal)
    polyhedron = newton_polyhedron(ideal)
    return min(Fraction(sum(f.normal), f.offset) for f in polyhedron.facets)


def lct_via_lp(ideal: MonomialIdeal) -> Fraction:
    """1 / min{t : t*(1,...,1) in the Newton polyhedron}, by exact simplex.

    Membership of t*(1,...,1) is encoded directly from the generator
    description: t = sum of a convex combination of generators plus
    nonnegative slack in each coordinate.
    """
    _require_proper(ideal)
    d = ideal.num_vars
    gens = ideal.generators
    num_vars = 1 + len(gens) + d
    rows = []
    rhs = []
    for axis in range(d):
        row = [Fraction(1)]
        row += [Fraction(-g[axis]) for g in gens]
        row += [Fraction(-1 if j == axis else 0) for j in range(d)]
        rows.append(row)
        rhs.append(Fraction(0))
    rows.append([Fraction(0)] + [Fraction(1)] * len(gens) + [Fraction(0)] * d)
    rhs.append(Fraction(1))
    cost = [Fraction(1)] + [Fraction(0)] * (len(gens) + d)
    value, _ = solve_min(cost, rows, rhs)
    if value <= 0:
        raise ValueError("ideal has threshold infinity (no facet separates the origin)")
    return 1 / value


def lct_monomial(ideal: MonomialIdeal) -> Fraction:
    """Exact log canonical threshold of a proper nonzero monomial ideal.

    Both computation routes are run and must agree; a mismatch indicates
    an internal error and raises.
    """
    via_lp = lct_via_lp(ideal)
    via_facets = lct_via_facets(ideal)
    if via_lp != via_facets:
        raise RuntimeError(
            f"lct routes disagree on {ideal}: LP gives {via_lp}, facets give {via_facets}"
        )
    return via_facets


def lct_power(ideal: MonomialIdeal, a: RationalLike) -> Fraction:
    """lct of the formal a-th power: lct(I^a) = lct(I) / a for a > 0."""
    scale = as_rational(a)
    if scale <= 0:
        raise ValueError(f"power must be positive, got {scale}")
    return lct_monomial(ideal) / scale


def length_quotient(ideal: MonomialIdeal) -> int:
    """Colength of an m-primary monomial ideal: monomials outside the staircase."""
    powers = ideal.pure_power_exponents()
    if powers is None:
        raise ValueError(f"ideal {ideal} is not m-primary: colength is infinite")
    count = 0
    for point in itertools.product(*(range(a) for a in powers)):
        if not ideal.contains_exponent(point):
            count += 1
    return count


def power_colengths(ideal: MonomialIdeal, t_max: int) -> list[int]:
    """Exact colengths of R / I^t for t = 0..t_max, by staircase counting.

    The staircase of I^t is built layer by layer: a monomial lies in
    I * J exactly when subtracting some generator of I lands it in J.
    Lattice boxes are represented as boolean arrays; counts are exact
    integers.
    """
    powers = ideal.pure_power_exponents()
    if powers is None:
        raise ValueError(f"ideal {ideal} is not m-primary: colengths are infinite")
    if t_max < 0:
        raise ValueError(f"t_max must be nonnegative, got {t_max}")
    if t_max == 0:
        return [0]
    box = tuple(a * t_max for a in powers)
    staircase = np.zeros(box, dtype=bool)
    for g in ideal.generators:
        staircase[tuple(slice(e, None) for e in g)] = True
    colengths = [0]
    for t in range(1, t_max + 1):
        if t > 1:
            layered = np.zeros(box, dtype=bool)
            for g in ideal.generators:
                source = tuple(slice(0, b - e) for e, b in zip(g, box))
                target = tuple(slice(e, None) for e in g)
                layered[target] |= staircase[source]
            staircase = layered
        region = tuple(slice(0, a * t) for a in powers)
        inside = int(np.count_nonzero(staircase[region]))
        total = math.prod(a * t for a in powers)
        colengths.append(total - inside)
    return colengths


def covolume(ideal: MonomialIdeal) -> Fraction:
    """Volume of the orthant region under the Newton polyhedron.

    The region {u >= 0 : u not in the polyhedron} is star shaped from the
    origin and bounded (m-primary case), so its volume is the sum of the
    cones from the origin over the positive-offset facets; coordinate
    patches of the boundary pass through the origin and contribute
    nothing.
    """
    if ideal.pure_power_exponents() is None:
        raise ValueError(f"ideal {ideal} is not m-primary: covolume is infinite")
    polyhedron = newton_polyhedron(ideal)
    d = ideal.num_vars
    total = Fraction(0)
    facet_list = list(polyhedron.facets)
    for facet in facet_list:
        pivot = next(j for j, w in enumerate(facet.normal) if w != 0)
        ambient: list[tuple[tuple[Fraction, ...], Fraction]] = []
        for other in facet_list:
            if other is facet:
                continue
            ambient.append(
                (tuple(Fraction(-w) for w in other.normal), Fraction(-other.offset))
            )
        for axis in range(d):
            ambient.append(
                (tuple(Fraction(-1 if j == axis else 0) for j in range(d)), Fraction(0))
            )
        projected = []
        for row, bound in ambient:
            factor = row[pivot] / facet.normal[pivot]
            new_row = tuple(
                row[j] - factor * facet.normal[j] for j in range(d) if j != pivot
            )
            projected.append((new_row, bound - factor * facet.offset))
        slab = polytope_volume(projected, d - 1)
        total += Fraction(facet.offset, d * abs(facet.normal[pivot])) * slab
    return total


def is_integrally_closed(ideal: MonomialIdeal) -> bool:
    """m-primary test: every lattice point of the Newton polyhedron is in the ideal.

    Points with any coordinate at or above the pure-power exponent of its
    axis dominate that pure power, so only the finite box below the pure
    powers needs inspection.
    """
    powers = ideal.pure_power_exponents()
    if powers is None:
        raise ValueError(f"ideal {ideal} is not m-primary")
    polyhedron = newton_polyhedron(ideal)
    for point in itertools.product(*(range(a) for a in powers)):
        if polyhedron.contains(point) and not ideal.contains_exponent(point):
            return False
    return True


def multiplicity(ideal: MonomialIdeal) -> int:
    """Hilbert-Samuel multiplicity of an m-primary monomial ideal.

    Complete intersections (exactly d generators, necessarily pure
    powers) and integrally closed ideals use d! times the covolume;
    multiplicity is invariant under integral closure, and for integrally
    closed monomial ideals the colength asymptotics are governed by the
    lattice points under the dilated Newton polyhedron.  All other ideals
    take the limit route: exact colengths of powers up to the generous
    cutoff d*(max exponent) + d, with the leading coefficient extracted
    by d-th finite differences, which must have stabilized.
    """
    powers = ideal.pure_power_exponents()
    if powers is None:
        raise ValueError(f"ideal {ideal} is not m-primary: multiplicity is undefined")
    d = ideal.num_vars
    if len(ideal.generators) <= d or is_integrally_closed(ideal):
        value = math.factorial(d) * covolume(ideal)
        if value.denominator != 1:
            raise RuntimeError(f"covolume route produced a non-integer multiplicity {value}")
        return int(value)
    t_max = d * ideal.max_exponent + d
    diffs = [Fraction(v) for v in power_colengths(ideal, t_max)]
    for _ in range(d):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    if len(diffs) < 2 or diffs[-1] != diffs[-2]:
        raise RuntimeError(
            f"finite differences did not stabilize for {ideal}; raise the cutoff"
        )
    value = diffs[-1]
    if value.denominator != 1 or value <= 0:
        raise RuntimeError(f"limit route produced an invalid multiplicity {value}")
    return int(value)


@dataclass(frozen=True)
class DfemCertificate:
    """Witness data for the threshold-multiplicity inequality lct^d * e >= d^d."""

    satisfied: bool
    lct: Fraction
    multiplicity: int
    lhs: Fraction
    rhs: int

    def to_json(self) -> dict:
        return {
            "satisfied": self.satisfied,
            "lct": format_rational(self.lct),
            "multiplicity": self.multiplicity,
            "lhs": format_rational(self.lhs),
            "rhs": str(self.rhs),
        }


def dfem_check(ideal: MonomialIdeal) -> DfemCertificate:
    """de Fernex-Ein-Mustata inequality for an m-primary ideal in d variables.

    Returns both sides of lct(I)^d * e(I) >= d^d as exact rationals; the
    inequality holds on every valid input, with equality for powers of
    the maximal ideal.
    """
    if ideal.pure_power_exponents() is None:
        raise ValueError(f"ideal {ideal} is not m-primary")
    d = ideal.num_vars
    lct = lct_monomial(ideal)
    mult = multiplicity(ideal)
    lhs = lct**d * mult
    rhs = d**d
    return DfemCertificate(
        satisfied=lhs >= rhs, lct=lct, multiplicity=mult, lhs=lhs, rhs=rhs
    )


def random_antichain_ideal(
    rng: random.Random, num_vars: int, max_exponent: int, max_generators: int
) -> MonomialIdeal:
    """Random proper monomial ideal for agreement sweeps (seeded by caller)."""
    count = rng.randint(1, max_generators)
    gens = []
    for _ in range(count):
        vector = [0] * num_vars
        while all(v == 0 for v in vector):
            vector = [rng.randint(0, max_exponent) for _ in range(num_vars)]
        gens.append(tuple(vector))
    return MonomialIdeal(num_vars, gens)


def random_m_primary_ideal(
    rng: random.Random, num_vars: int, max_exponent: int, extra_generators: int
) -> MonomialIdeal:
    """Random m-primary ideal: one pure power per axis plus extra generators."""
    gens = []
    for axis in range(num_vars):
        power = rng.randint(1, max_exponent)
        gens.append(tuple(power if j == axis else 0 for j in range(num_vars)))
    for _ in range(extra_generators):
        vector = [0] * num_vars
        while all(v == 0 for v in vector):
            vector = [rng.randint(0, max_exponent) for _ in range(num_vars)]
        gens.append(tuple(vector))
    return MonomialIdeal(num_vars, gens)

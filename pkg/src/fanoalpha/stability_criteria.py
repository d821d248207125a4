"""Stability and characterization criteria with inequality certificates.

Each criterion returns a verdict together with a trace of exact rational
inequality evaluations.  A trace line is a statement of fact and must be
true; this is enforced at construction, so a verdict can never carry a
false certificate.  Hypotheses the arithmetic cannot check (smoothness,
K-semistability, Picard rank, Q-factoriality) are caller assertions and
are recorded explicitly in the assumptions list, never silently assumed.

Verdict vocabulary: a check that passes without forcing a conclusion is
``inconclusive`` (the trace still certifies the inequalities that hold);
``inconsistent_input`` flags data that contradicts a theorem the caller's
assertions make applicable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .exact_math import RationalLike, as_rational, format_rational


class Verdict(str, enum.Enum):
    K_STABLE = "k_stable"
    K_SEMISTABLE = "k_semistable"
    IS_PROJECTIVE_SPACE = "is_projective_space"
    NOT_K_SEMISTABLE = "not_k_semistable"
    INCONCLUSIVE = "inconclusive"
    INCONSISTENT_INPUT = "inconsistent_input"


_RELATIONS = {
    "<=": lambda a, b: a <= b,
    "<": lambda a, b: a < b,
    "=": lambda a, b: a == b,
    ">=": lambda a, b: a >= b,
    ">": lambda a, b: a > b,
}


@dataclass(frozen=True)
class TraceLine:
    """One exact inequality fact; constructing a false line is an error."""

    lhs: Fraction
    rel: str
    rhs: Fraction

    def __init__(self, lhs: RationalLike, rel: str, rhs: RationalLike) -> None:
        lhs_val, rhs_val = as_rational(lhs), as_rational(rhs)
        if rel not in _RELATIONS:
            raise ValueError(f"unknown relation {rel!r}")
        if not _RELATIONS[rel](lhs_val, rhs_val):
            raise ValueError(f"trace line is false: {lhs_val} {rel} {rhs_val}")
        object.__setattr__(self, "lhs", lhs_val)
        object.__setattr__(self, "rel", rel)
        object.__setattr__(self, "rhs", rhs_val)

    def holds(self) -> bool:
        return _RELATIONS[self.rel](self.lhs, self.rhs)

    def to_json(self) -> dict:
        return {
            "lhs": format_rational(self.lhs),
            "rel": self.rel,
            "rhs": format_rational(self.rhs),
        }

    def __str__(self) -> str:
        return f"{self.lhs} {self.rel} {self.rhs}"


@dataclass(frozen=True)
class CriterionVerdict:
    verdict: Verdict
    criterion: str
    assumptions: tuple[str, ...]
    trace: tuple[TraceLine, ...]

    @property
    def is_failure(self) -> bool:
        return self.verdict in (Verdict.NOT_K_SEMISTABLE, Verdict.INCONSISTENT_INPUT)

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "criterion": self.criterion,
            "assumptions": list(self.assumptions),
            "trace": [line.to_json() for line in self.trace],
        }


def _strict_rel(lhs: Fraction, rhs: Fraction) -> str:
    if lhs < rhs:
        return "<"
    if lhs == rhs:
        return "="
    return ">"


def _compare(lhs: RationalLike, rhs: RationalLike) -> TraceLine:
    lhs_val, rhs_val = as_rational(lhs), as_rational(rhs)
    return TraceLine(lhs_val, _strict_rel(lhs_val, rhs_val), rhs_val)


def fujita_volume_test(n: int, vol: RationalLike, smooth: bool) -> CriterionVerdict:
    """Fujita's volume bound: a K-semistable n-fold has vol <= (n+1)^n.

    A larger volume contradicts the asserted K-semistability; equality on
    a smooth variety identifies projective n-space.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"dimension n must be a positive integer, got {n!r}")
    volume = as_rational(vol)
    if volume <= 0:
        raise ValueError(f"volume must be positive, got {volume}")
    bound = Fraction((n + 1) ** n)
    assumptions = ["K-semistability asserted by caller"]
    line = _compare(volume, bound)
    if volume > bound:
        return CriterionVerdict(Verdict.NOT_K_SEMISTABLE, "fujita_volume", tuple(assumptions), (line,))
    if volume == bound:
        if smooth:
            assumptions.append("smoothness asserted by caller")
            return CriterionVerdict(
                Verdict.IS_PROJECTIVE_SPACE, "fujita_volume", tuple(assumptions), (line,)
            )
        assumptions.append("smoothness not asserted; equality case needs it")
        return CriterionVerdict(Verdict.INCONCLUSIVE, "fujita_volume", tuple(assumptions), (line,))
    return CriterionVerdict(Verdict.INCONCLUSIVE, "fujita_volume", tuple(assumptions), (line,))


def top_alpha_volume_bound(n: int, vol: RationalLike, alpha_n: RationalLike) -> CriterionVerdict:
    """Lower bound for the top-codimension alpha: alpha_n >= n / vol^(1/n).

    Evaluated in powered form alpha_n^n * vol >= n^n to stay in rational
    arithmetic.  Violation on a smooth Fano is inconsistent data.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"dimension n must be a positive integer, got {n!r}")
    volume, alpha = as_rational(vol), as_rational(alpha_n)
    if volume <= 0 or alpha <= 0:
        raise ValueError("volume and alpha must both be positive")
    lhs = alpha**n * volume
    rhs = Fraction(n**n)
    assumptions = ["smooth Fano asserted by caller (the bound needs smoothness)"]
    line = _compare(lhs, rhs)
    if lhs < rhs:
        return CriterionVerdict(
            Verdict.INCONSISTENT_INPUT, "top_alpha_volume_bound", tuple(assumptions), (line,)
        )
    return CriterionVerdict(
        Verdict.INCONCLUSIVE, "top_alpha_volume_bound", tuple(assumptions), (line,)
    )


def projective_space_from_top_alpha(
    n: int, alpha_n: RationalLike, smooth: bool, k_semistable: bool
) -> CriterionVerdict:
    """alpha_n <= n/(n+1) on a smooth K-semistable n-fold forces P^n."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"dimension n must be a positive integer, got {n!r}")
    alpha = as_rational(alpha_n)
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    threshold = Fraction(n, n + 1)
    assumptions = []
    if smooth:
        assumptions.append("smoothness asserted by caller")
    else:
        assumptions.append("smoothness not asserted")
    if k_semistable:
        assumptions.append("K-semistability asserted by caller")
    else:
        assumptions.append("K-semistability not asserted")
    if alpha > threshold:
        return CriterionVerdict(
            Verdict.INCONCLUSIVE,
            "projective_space_from_top_alpha",
            tuple(assumptions),
            (TraceLine(alpha, ">", threshold),),
        )
    line = TraceLine(alpha, "<=", threshold)
    if smooth and k_semistable:
        return CriterionVerdict(
            Verdict.IS_PROJECTIVE_SPACE,
            "projective_space_from_top_alpha",
            tuple(assumptions),
            (line,),
        )
    return CriterionVerdict(
        Verdict.INCONCLUSIVE, "projective_space_from_top_alpha", tuple(assumptions), (line,)
    )


def stability_from_alpha_pair(
    n: int, alpha1: RationalLike, alpha2: RationalLike
) -> CriterionVerdict:
    """Stability from the first two alpha invariants on a Picard-rank-1 variety.

    Requires alpha2 > (n-1)/(n+1); then with
    S = 1/((n+1) alpha1) + (n-1)/((n+1) alpha2), S < 1 certifies
    K-stability and S = 1 certifies K-semistability.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"dimension n must be a positive integer, got {n!r}")
    a1, a2 = as_rational(alpha1), as_rational(alpha2)
    if a1 <= 0 or a2 <= 0:
        raise ValueError("alpha invariants must be positive")
    assumptions = ["Q-factorial with Picard number 1 asserted by caller"]
    gate = Fraction(n - 1, n + 1)
    if a2 <= gate:
        return CriterionVerdict(
            Verdict.INCONCLUSIVE,
            "alpha_pair_stability",
            tuple(assumptions),
            (_compare(a2, gate),),
        )
    combined = 1 / ((n + 1) * a1) + Fraction(n - 1) / ((n + 1) * a2)
    trace = (TraceLine(a2, ">", gate), _compare(combined, 1))
    if combined < 1:
        verdict = Verdict.K_STABLE
    elif combined == 1:
        verdict = Verdict.K_SEMISTABLE
    else:
        verdict = Verdict.INCONCLUSIVE
    return CriterionVerdict(verdict, "alpha_pair_stability", tuple(assumptions), trace)


def divisibility_test(
    n: int, k: int, l: RationalLike, smooth: bool, k_semistable: bool
) -> CriterionVerdict:
    """Cycle-divisibility characterization of projective space.

    If the k-th power of the anticanonical class is l times an integral
    cycle with l >= (n+1)^k, and k divides n, then on a smooth
    K-semistable variety the volume is squeezed to exactly (n+1)^n and
    the volume characterization applies.  When k does not divide n the
    question is open and no verdict is extrapolated.
    """
    if not isinstance(n, int) or not isinstance(k, int) or not 1 <= k <= n:
        raise ValueError(f"need integers 1 <= k <= n, got k={k!r}, n={n!r}")
    factor = as_rational(l)
    if factor <= 0:
        raise ValueError(f"l must be positive, got {factor}")
    threshold = Fraction((n + 1) ** k)
    assumptions = []
    if factor < threshold:
        return CriterionVerdict(
            Verdict.INCONCLUSIVE,
            "cycle_divisibility",
            ("divisibility factor below threshold",),
            (TraceLine(factor, "<", threshold),),
        )
    trace = [TraceLine(factor, ">=", threshold)]
    if n % k != 0:
        assumptions.append(
            "open question: codimension does not divide dimension, no characterization known"
        )
        return CriterionVerdict(
            Verdict.INCONCLUSIVE, "cycle_divisibility", tuple(assumptions), tuple(trace)
        )
    if not smooth or not k_semistable:
        if not smooth:
            assumptions.append("smoothness not asserted")
        if not k_semistable:
            assumptions.append("K-semistability not asserted")
        return CriterionVerdict(
            Verdict.INCONCLUSIVE, "cycle_divisibility", tuple(assumptions), tuple(trace)
        )
    assumptions.append("smoothness asserted by caller")
    assumptions.append("K-semistability asserted by caller")
    implied_volume = factor ** (n // k)
    trace.append(TraceLine(implied_volume, ">=", Fraction((n + 1) ** n)))
    chained = fujita_volume_test(n, Fraction((n + 1) ** n), smooth=True)
    trace.extend(chained.trace)
    return CriterionVerdict(
        chained.verdict, "cycle_divisibility", tuple(assumptions), tuple(trace)
    )


BoundPair = Union[Sequence[RationalLike], tuple[RationalLike, RationalLike]]


def _bound_pair(value) -> tuple[Fraction, Fraction]:
    if hasattr(value, "lower") and hasattr(value, "upper"):
        return as_rational(value.lower), as_rational(value.upper)
    lower, upper = value
    return as_rational(lower), as_rational(upper)


def alpha_monotonicity_check(bounds: Mapping[int, BoundPair]) -> CriterionVerdict:
    """Alpha invariants increase with the codimension; bounds must respect that.

    Checks 0 < lower <= upper per codimension and that both lower and
    upper bounds are non-decreasing in k.  Any violation is reported with
    the offending pair in the trace.
    """
    if not bounds:
        raise ValueError("no bounds supplied")
    items: list[tuple[int, Fraction, Fraction]] = []
    for key in sorted(bounds):
        if not isinstance(key, int) or key < 1:
            raise ValueError(f"codimension keys must be positive integers, got {key!r}")
        lower, upper = _bound_pair(bounds[key])
        items.append((key, lower, upper))
    trace = []
    for k, lower, upper in items:
        if lower <= 0:
            return CriterionVerdict(
                Verdict.INCONSISTENT_INPUT,
                "alpha_monotonicity",
                (f"bound for k={k} has nonpositive lower value",),
                (TraceLine(lower, "<=", 0),),
            )
        if upper < lower:
            return CriterionVerdict(
                Verdict.INCONSISTENT_INPUT,
                "alpha_monotonicity",
                (f"bound for k={k} has upper < lower",),
                (TraceLine(upper, "<", lower),),
            )
        trace.append(TraceLine(lower, "<=", upper))
    for (k1, lo1, up1), (k2, lo2, up2) in zip(items, items[1:]):
        if lo2 < lo1:
            return CriterionVerdict(
                Verdict.INCONSISTENT_INPUT,
                "alpha_monotonicity",
                (f"lower bounds decrease from k={k1} to k={k2}",),
                (TraceLine(lo2, "<", lo1),),
            )
        if up2 < up1:
            return CriterionVerdict(
                Verdict.INCONSISTENT_INPUT,
                "alpha_monotonicity",
                (f"upper bounds decrease from k={k1} to k={k2}",),
                (TraceLine(up2, "<", up1),),
            )
        trace.append(TraceLine(lo1, "<=", lo2))
        trace.append(TraceLine(up1, "<=", up2))
    return CriterionVerdict(
        Verdict.INCONCLUSIVE, "alpha_monotonicity", (), tuple(trace)
    )


def alpha_lower_bound_consistency(record) -> CriterionVerdict:
    """Recorded alpha bounds must respect k/(n+1) on a K-semistable record.

    Any upper bound below k/(n+1) contradicts the lower-bound theorem.
    An exact value equal to k/(n+1) that is marked realized, on a smooth
    record that is not projective space by the volume characterization,
    is flagged (never hard-failed: realization subtleties stay open).
    """
    if record.k_semistable is not True:
        raise ValueError("consistency check requires a record asserting K-semistability")
    n = record.n
    looks_projective = record.smooth and record.vol == Fraction((n + 1) ** n)
    assumptions = ["record asserts K-semistability"]
    trace = []
    for k in sorted(record.alpha_bounds):
        bound = record.alpha_bounds[k]
        target = Fraction(k, n + 1)
        upper = as_rational(bound.upper)
        if upper < target:
            return CriterionVerdict(
                Verdict.INCONSISTENT_INPUT,
                "alpha_lower_bound_consistency",
                tuple(assumptions + [f"upper bound for k={k} is below k/(n+1)"]),
                (TraceLine(upper, "<", target),),
            )
        trace.append(_compare(upper, target))
        if (
            bound.exact
            and upper == target
            and getattr(bound, "realized", None)
            and record.smooth
            and not looks_projective
        ):
            assumptions.append(
                f"flagged: exact realized alpha for k={k} equals k/(n+1) on a smooth "
                "record that is not projective space by volume; contradicts the "
                "equality characterization, check the input"
            )
    return CriterionVerdict(
        Verdict.INCONCLUSIVE,
        "alpha_lower_bound_consistency",
        tuple(assumptions),
        tuple(trace),
    )

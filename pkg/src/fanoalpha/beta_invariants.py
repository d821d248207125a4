"""Beta invariants and the codimension-k lower bound machinery.

beta(Z) = lct(X, Z) * vol(-K) - integral_0^infty vol(sigma*(-K) - x*F) dx.

The volume function vol(sigma*(-K) - x*F) is never computed from variety
geometry here; callers supply it as a piecewise-polynomial VolumeProfile.
A profile flagged ``exact`` asserts that the volume vanishes beyond its
last piece, so the resulting beta value is exact.  A truncated profile
only bounds the integral from below, which makes the computed beta an
upper bound for the true value and still induces a valid lower bound for
the log canonical threshold.

For a complete-intersection model the nef-range piece of the profile is
known in closed form (the volume polynomial), which is enough for the
k/(n+1) bound.  For linear subspaces of projective n-space the nef-range
piece is the whole profile, so beta is exact there, and it vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .ci_model import CIModel, volume_polynomial, volume_polynomial_moving_fixed
from .exact_math import Polynomial, RationalLike, as_rational, binomial, format_rational


@dataclass(frozen=True)
class ProfilePiece:
    """One polynomial piece of a volume profile, on the interval [lo, hi]."""

    lo: Fraction
    hi: Fraction
    poly: Polynomial

    def __init__(self, lo: RationalLike, hi: RationalLike, poly: Polynomial) -> None:
        object.__setattr__(self, "lo", as_rational(lo))
        object.__setattr__(self, "hi", as_rational(hi))
        object.__setattr__(self, "poly", poly)

    def to_json(self) -> dict:
        return {
            "from": format_rational(self.lo),
            "to": format_rational(self.hi),
            "coeffs": [format_rational(c) for c in self.poly.coefficients],
        }


@dataclass(frozen=True)
class VolumeProfile:
    """Piecewise-polynomial volume function on [0, support_end].

    Pieces must be contiguous starting at 0, nonnegative at piece
    endpoints, and continuous across shared endpoints.  ``exact = True``
    asserts the volume is identically zero beyond the last piece.
    """

    pieces: tuple[ProfilePiece, ...]
    exact: bool

    def __init__(self, pieces: Iterable[ProfilePiece], exact: bool) -> None:
        pieces = tuple(pieces)
        if not pieces:
            raise ValueError("invalid profile: needs at least one piece")
        if pieces[0].lo != 0:
            raise ValueError(f"invalid profile: first piece starts at {pieces[0].lo}, not 0")
        for idx, piece in enumerate(pieces):
            if piece.lo >= piece.hi:
                raise ValueError(
                    f"invalid profile: piece {idx} has empty interval [{piece.lo}, {piece.hi}]"
                )
            if piece.poly(piece.lo) < 0 or piece.poly(piece.hi) < 0:
                raise ValueError(f"invalid profile: piece {idx} is negative at an endpoint")
        for idx in range(len(pieces) - 1):
            left, right = pieces[idx], pieces[idx + 1]
            if left.hi != right.lo:
                raise ValueError(
                    f"invalid profile: gap between piece {idx} ending at {left.hi} "
                    f"and piece {idx + 1} starting at {right.lo}"
                )
            if left.poly(left.hi) != right.poly(right.lo):
                raise ValueError(f"invalid profile: discontinuous at x = {left.hi}")
        object.__setattr__(self, "pieces", pieces)
        object.__setattr__(self, "exact", bool(exact))

    @property
    def support_end(self) -> Fraction:
        return self.pieces[-1].hi

    def value_at_zero(self) -> Fraction:
        return self.pieces[0].poly(Fraction(0))

    def total_integral(self) -> Fraction:
        return sum(
            (piece.poly.integrate(piece.lo, piece.hi) for piece in self.pieces), Fraction(0)
        )

    def to_json(self) -> dict:
        return {"pieces": [p.to_json() for p in self.pieces], "exact": self.exact}

    @classmethod
    def from_json(cls, obj: Mapping) -> "VolumeProfile":
        if not isinstance(obj, Mapping):
            raise ValueError("volume profile must be a JSON object")
        if "pieces" not in obj:
            raise ValueError("volume profile missing field 'pieces'")
        if "exact" not in obj or not isinstance(obj["exact"], bool):
            raise ValueError("volume profile field 'exact' must be a boolean")
        pieces = []
        for idx, raw in enumerate(obj["pieces"]):
            try:
                lo = as_rational(raw["from"])
                hi = as_rational(raw["to"])
                coeffs = [as_rational(c) for c in raw["coeffs"]]
            except (KeyError, ValueError, TypeError) as exc:
                raise ValueError(f"volume profile piece {idx}: {exc}") from None
            pieces.append(ProfilePiece(lo, hi, Polynomial(coeffs)))
        return cls(pieces, obj["exact"])


@dataclass(frozen=True)
class BetaResult:
    """Outcome of a beta computation.

    When ``truncated`` is true the integral only covered part of the
    support, so ``value`` is an upper bound for the true beta (dropping
    part of the integral can only increase lct*vol - integral), and
    ``induced_lct_lower_bound`` = integral/vol is the unconditional lower
    bound on the log canonical threshold implied by beta >= 0.
    """

    value: Fraction
    lct_used: Fraction
    volume_used: Fraction
    truncated: bool
    induced_lct_lower_bound: Fraction

    def to_json(self) -> dict:
        return {
            "value": format_rational(self.value),
            "lct_used": format_rational(self.lct_used),
            "volume_used": format_rational(self.volume_used),
            "truncated": self.truncated,
            "induced_lct_lower_bound": format_rational(self.induced_lct_lower_bound),
        }


def truncated_integral(model: CIModel) -> Fraction:
    """(1/r) * integral_0^1 of the volume polynomial, in -rK-normalized units.

    Integrating the closed form over the nef range gives exactly
    degree * k / ((n+1) * r), independent of everything else.
    """
    return volume_polynomial(model).integrate(0, 1) / model.r


def lct_lower_bound(model: CIModel) -> Fraction:
    """The lower bound k/(n+1) for lct(X, (1/r)Z) on a K-semistable variety.

    Nonnegativity of beta(Z) plus the truncated volume integral forces
    lct(X, Z) >= k/((n+1) r); rescaling by r leaves k/(n+1), independent
    of r and of the degree.
    """
    return Fraction(model.k, model.n + 1)


def integral_identity_check(n: int, k: int) -> Fraction:
    """Exact value of the nef-range integral of the correction term.

    Computes integral_0^1 sum_{i=0}^{n-k} C(n-1-i, k-1) (1-x)^(n-k-i) x^k dx.
    Repeated integration by parts shows this equals 1 - k/(n+1); the
    function returns the directly computed integral so callers can verify
    the identity.
    """
    if not (isinstance(n, int) and isinstance(k, int) and 1 <= k <= n):
        raise ValueError(f"need integers 1 <= k <= n, got k={k!r}, n={n!r}")
    one_minus_x = Polynomial((1, -1))
    x_to_k = Polynomial.x() ** k
    integrand = Polynomial()
    for i in range(n - k + 1):
        integrand = integrand + binomial(n - 1 - i, k - 1) * (one_minus_x ** (n - k - i)) * x_to_k
    return integrand.integrate(0, 1)


def truncated_profile(model: CIModel) -> VolumeProfile:
    """Nef-range volume profile of the model in un-normalized coordinates.

    On [0, 1/r] the volume of sigma*(-K) - x*F equals (1/r^n) P(r x) where
    P is the normalized volume polynomial.  Beyond the nef range the
    volume is unknown in general, so the profile is marked truncated.
    """
    poly = volume_polynomial(model).scale_variable(model.r) * (1 / model.r**model.n)
    return VolumeProfile((ProfilePiece(0, 1 / model.r, poly),), exact=False)


def linear_subspace_profile(n: int, k: int) -> VolumeProfile:
    """Exact volume profile for a codimension-k linear subspace of P^n.

    Here -K = (n+1)H and the subspace is cut out by k hyperplanes, so the
    nef range is [0, n+1] and the profile is (n+1)^n P(x/(n+1)) there.
    The profile is exact: at the end of the nef range the moving part of
    the pulled-back hyperplane system is the pullback of O(1) under the
    projection away from the center, whose fibers are positive
    dimensional, so its top self-intersection vanishes and the volume is
    identically zero past that point.
    """
    if not (isinstance(n, int) and isinstance(k, int) and 1 <= k <= n):
        raise ValueError(f"need integers 1 <= k <= n, got k={k!r}, n={n!r}")
    model = CIModel(n, k, r=Fraction(1, n + 1), degree=1)
    truncated = truncated_profile(model)
    return VolumeProfile(truncated.pieces, exact=True)


def beta_from_profile(profile: VolumeProfile, lct: RationalLike) -> BetaResult:
    """beta = lct * vol(0) - integral of the profile.

    The profile's value at 0 plays the role of vol(-K) and must be
    positive.  Exactness of the result mirrors exactness of the profile.
    """
    lct_val = as_rational(lct)
    if lct_val < 0:
        raise ValueError(f"lct must be nonnegative, got {lct_val}")
    volume = profile.value_at_zero()
    if volume <= 0:
        raise ValueError(f"invalid profile: volume at 0 must be positive, got {volume}")
    integral = profile.total_integral()
    return BetaResult(
        value=lct_val * volume - integral,
        lct_used=lct_val,
        volume_used=volume,
        truncated=not profile.exact,
        induced_lct_lower_bound=integral / volume,
    )


def beta_linear_subspace(n: int, k: int) -> Fraction:
    """Exact beta of a codimension-k linear subspace of P^n with lct = k.

    The subspace is the transversal intersection of k hyperplanes, whose
    log canonical threshold is k.  The value is identically zero: linear
    subspaces realize the equality case of the k/(n+1) bound.
    """
    return beta_from_profile(linear_subspace_profile(n, k), lct=k).value


@dataclass(frozen=True)
class SemistabilityVerdict:
    """Sign-based verdict from a batch of beta computations.

    ``status`` is ``"not_k_semistable"`` when some entry certifies a
    negative beta, else ``"consistent"``.  A consistent verdict is never a
    proof of K-semistability: only finitely many subschemes were checked.
    """

    status: str
    message: str
    witness: Optional[BetaResult]

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "message": self.message,
            "witness": None if self.witness is None else self.witness.to_json(),
        }


def semistability_verdict(betas: Sequence[BetaResult]) -> SemistabilityVerdict:
    """Interpret beta signs: any certified negative value is a disproof.

    An exact negative beta violates the nonnegativity required of
    K-semistable varieties.  A truncated value is an upper bound for the
    true beta, so a negative truncated value is also a disproof.
    """
    for beta in betas:
        if beta.value < 0:
            return SemistabilityVerdict(
                status="not_k_semistable",
                message="not K-semistable (witness attached)",
                witness=beta,
            )
    return SemistabilityVerdict(
        status="consistent",
        message="consistent with K-semistability (not a proof: finitely many subschemes checked)",
        witness=None,
    )

"""Blow-up model of a complete intersection of linear-system members.

The model records a polarized situation: an ambient n-dimensional variety
with an ample divisor L = -r*K (r a positive rational), and a center Z cut
out by k general members of |L|.  Pulling |L| back to a blow-up along Z
splits it into a base-point-free moving part M and a fixed part F, and the
top self-intersection (sigma*L - x*F)^n becomes a polynomial in x.

Everything here is normalized so that x ranges over [0, 1]: x = 1
corresponds to the end of the nef range 1/r in un-normalized coordinates.
The polynomial is only asserted to equal the volume function on [0, 1]; no
claim is made past the nef range.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .exact_math import Polynomial, RationalLike, as_rational, binomial, format_rational


@dataclass(frozen=True)
class CIModel:
    """Complete-intersection blow-up datum.

    n: ambient dimension; k: codimension of the center (1 <= k <= n);
    r: the multiple with L = -r*K (positive rational); degree: L^n > 0.
    """

    n: int
    k: int
    r: Fraction
    degree: Fraction

    def __init__(self, n: int, k: int, r: RationalLike = 1, degree: RationalLike = 1) -> None:
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"dimension n must be a positive integer, got {n!r}")
        if not isinstance(k, int) or not 1 <= k <= n:
            raise ValueError(f"codimension k must satisfy 1 <= k <= n, got k={k!r}, n={n}")
        r_val = as_rational(r)
        degree_val = as_rational(degree)
        if r_val <= 0:
            raise ValueError(f"r must be positive, got {r_val}")
        if degree_val <= 0:
            raise ValueError(f"degree must be positive, got {degree_val}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "r", r_val)
        object.__setattr__(self, "degree", degree_val)

    def seshadri_lower_bound(self) -> Fraction:
        """Valid nef range of sigma*(-K) - x*F: at least [0, 1/r].

        The ideal of the center is cut out by members of |-r*K|, so the
        twist by -r*K is globally generated and the Seshadri constant of
        the center with respect to -K is at least 1/r.
        """
        return 1 / self.r

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "r": format_rational(self.r),
            "degree": format_rational(self.degree),
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "CIModel":
        if not isinstance(obj, Mapping):
            raise ValueError("complete-intersection model must be a JSON object")
        missing = [f for f in ("n", "k", "r", "degree") if f not in obj]
        if missing:
            raise ValueError(f"complete-intersection model missing field(s): {', '.join(missing)}")
        n, k = obj["n"], obj["k"]
        if not isinstance(n, int) or isinstance(n, bool):
            raise ValueError(f"field 'n': expected integer, got {n!r}")
        if not isinstance(k, int) or isinstance(k, bool):
            raise ValueError(f"field 'k': expected integer, got {k!r}")
        try:
            r = as_rational(obj["r"])
        except (ValueError, TypeError) as exc:
            raise ValueError(f"field 'r': {exc}") from None
        try:
            degree = as_rational(obj["degree"])
        except (ValueError, TypeError) as exc:
            raise ValueError(f"field 'degree': {exc}") from None
        return cls(n, k, r, degree)


@dataclass(frozen=True)
class IntersectionTable:
    """The numbers sigma*L^(n-i) . (M^(i-1) . F) for i = 1..n, plus M^n.

    Only the i = k entry is nonzero and it equals L^n; the top moving
    self-intersection M^n vanishes because L^n already accounts for the
    whole degree.
    """

    entries: tuple[Fraction, ...]
    moving_top: Fraction

    def entry(self, i: int) -> Fraction:
        """1-based access: the value for sigma*L^(n-i) . (M^(i-1) . F)."""
        if not 1 <= i <= len(self.entries):
            raise IndexError(f"index i must lie in 1..{len(self.entries)}, got {i}")
        return self.entries[i - 1]


def intersection_table(model: CIModel) -> IntersectionTable:
    """Exact intersection-number table of the blow-up model."""
    entries = tuple(
        model.degree if i == model.k else Fraction(0) for i in range(1, model.n + 1)
    )
    return IntersectionTable(entries=entries, moving_top=Fraction(0))


def volume_polynomial_moving_fixed(model: CIModel) -> Polynomial:
    """(sigma*L - x*F)^n via the moving/fixed-part decomposition.

    Peeling one factor of x*F off the difference L^n - (sigma*L - x*F)^n
    and collapsing the mixed terms with the intersection table gives

        L^n * (1 - sum_{i=0}^{n-k} C(n-1-i, k-1) * (1-x)^(n-k-i) * x^k).
    """
    n, k = model.n, model.k
    one_minus_x = Polynomial((1, -1))
    x_to_k = Polynomial.x() ** k
    tail = Polynomial()
    for i in range(n - k + 1):
        tail = tail + binomial(n - 1 - i, k - 1) * (one_minus_x ** (n - k - i)) * x_to_k
    return model.degree * (Polynomial.constant(1) - tail)


def volume_polynomial_binomial(model: CIModel) -> Polynomial:
    """(sigma*L - x*F)^n via the binomial expansion.

    Expanding the power and inserting the self-intersection numbers
    sigma*L^(n-i) . F^i = (-1)^(k-1) C(i-1, k-1) L^n (zero for i < k):

        L^n * (1 + sum_{i=k}^{n} (-1)^(i+k-1) C(n, i) C(i-1, k-1) x^i).
    """
    n, k = model.n, model.k
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[0] = Fraction(1)
    for i in range(k, n + 1):
        sign = -1 if (i + k - 1) % 2 else 1
        coeffs[i] = Fraction(sign * binomial(n, i) * binomial(i - 1, k - 1))
    return model.degree * Polynomial(coeffs)


# Canonical choice between the two (provably equal) closed forms.
volume_polynomial = volume_polynomial_binomial


def center_codimension(poly: Polynomial) -> int:
    """Order of vanishing of p(0) - p(x) at x = 0.

    For a complete-intersection volume polynomial this recovers the
    codimension k of the blow-up center: the first correction to the full
    volume appears in degree exactly k.
    """
    if poly.degree < 1:
        raise ValueError("degenerate input: polynomial has no non-constant term")
    if poly.coefficient(0) == 0:
        raise ValueError("degenerate input: volume polynomial must have a nonzero constant term")
    order = poly.lowest_nonconstant_degree()
    assert order is not None
    return order

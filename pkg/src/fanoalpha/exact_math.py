"""Exact rational scalars and dense univariate polynomial algebra.

Every numeric quantity in this package is a ``fractions.Fraction``.  There
is no floating-point mode anywhere: all operations are exact and equality
of values is structural equality of canonical fractions (positive
denominator, reduced to lowest terms, which ``Fraction`` guarantees).

A polynomial is a dense tuple of coefficients, entry ``i`` holding the
coefficient of ``x**i``, with trailing zeros trimmed on construction.  The
zero polynomial has an empty coefficient tuple.  Instances are immutable
and safe to share between threads.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, a canonical ``"p/q"`` / ``"p"`` string, or a Fraction.

    Strings must match the canonical wire form used in all JSON documents:
    an optional sign, an integer, and an optional ``/q`` with q > 0.
    Decimal notation is rejected so that no value can silently lose
    exactness on the way in.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("cannot interpret bool as a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not _RATIONAL_RE.match(value):
            raise ValueError(f"not a canonical rational 'p/q' or 'p': {value!r}")
        return Fraction(value)
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


def format_rational(value: RationalLike) -> str:
    """Canonical text form: ``"p/q"`` with q > 0 and gcd(p, q) = 1, or ``"p"``."""
    return str(as_rational(value))


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), zero outside the range 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"binomial: n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class Polynomial:
    """Dense univariate polynomial over the rationals.

    ``coefficients[i]`` is the coefficient of ``x**i``.  Trailing zeros are
    trimmed on construction, so two polynomials are equal exactly when
    their coefficient tuples are equal.
    """

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable[RationalLike] = ()) -> None:
        coeffs = [as_rational(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def constant(cls, value: RationalLike) -> "Polynomial":
        return cls((as_rational(value),))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return Fraction(0)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["Polynomial", RationalLike]) -> "Polynomial":
        if isinstance(other, Polynomial):
            if self.is_zero or other.is_zero:
                return Polynomial()
            a, b = self.coefficients, other.coefficients
            out = [Fraction(0)] * (len(a) + len(b) - 1)
            for i, ca in enumerate(a):
                if ca == 0:
                    continue
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
            return Polynomial(out)
        scalar = as_rational(other)
        return Polynomial(tuple(scalar * c for c in self.coefficients))

    def __rmul__(self, other: RationalLike) -> "Polynomial":
        return self.__mul__(other)

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"polynomial power must be a nonnegative integer, got {exponent}")
        result = Polynomial.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __call__(self, point: RationalLike) -> Fraction:
        """Exact evaluation by Horner's rule."""
        x = as_rational(point)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(i * c for i, c in enumerate(self.coefficients) if i >= 1))

    def antiderivative(self) -> "Polynomial":
        """Antiderivative with constant term zero."""
        return Polynomial(
            (Fraction(0),) + tuple(c / (i + 1) for i, c in enumerate(self.coefficients))
        )

    def integrate(self, lo: RationalLike, hi: RationalLike) -> Fraction:
        """Exact definite integral over [lo, hi]; requires lo <= hi."""
        a, b = as_rational(lo), as_rational(hi)
        if a > b:
            raise ValueError(f"integration bounds out of order: lo={a} > hi={b}")
        primitive = self.antiderivative()
        return primitive(b) - primitive(a)

    def lowest_nonconstant_degree(self) -> Optional[int]:
        """Smallest i >= 1 with a nonzero coefficient, or None for constants."""
        for i, c in enumerate(self.coefficients):
            if i >= 1 and c != 0:
                return i
        return None

    def scale_variable(self, factor: RationalLike) -> "Polynomial":
        """The polynomial p(factor * x)."""
        f = as_rational(factor)
        return Polynomial(tuple(c * f**i for i, c in enumerate(self.coefficients)))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mag = -c if c < 0 else c
            if i == 0:
                body = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                if mag == 1:
                    body = var
                elif mag.denominator == 1:
                    body = f"{mag}*{var}"
                else:
                    body = f"({mag})*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

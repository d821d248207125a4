"""Rational scalars, binomials, and polynomial algebra."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fanoalpha.exact_math import Polynomial, as_rational, binomial, format_rational

small_fractions = st.fractions(
    min_value=Fraction(-5), max_value=Fraction(5), max_denominator=6
)
polynomials = st.lists(small_fractions, max_size=6).map(Polynomial)


class TestRationalText:
    def test_parse_roundtrip(self):
        for text in ("0", "5", "-7", "1/2", "-22/7", "+3"):
            assert format_rational(as_rational(text)) == str(Fraction(text))

    @pytest.mark.parametrize("bad", ["1.5", "1/0", "1/-2", "a", "", "1 / 2", "1e3"])
    def test_rejects_noncanonical(self, bad):
        with pytest.raises(ValueError):
            as_rational(bad)

    def test_canonical_output(self):
        assert format_rational(Fraction(2, 4)) == "1/2"
        assert format_rational(Fraction(-6, 3)) == "-2"


class TestBinomial:
    def test_known_values(self):
        assert binomial(5, 2) == 10
        assert binomial(7, 0) == 1
        assert binomial(3, 5) == 0
        assert binomial(4, -1) == 0
        assert binomial(0, 0) == 1

    def test_negative_n_rejected(self):
        with pytest.raises(ValueError):
            binomial(-1, 0)

    def test_pascal_rule(self):
        for n in range(1, 31):
            for k in range(1, n):
                assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


class TestPolynomialBasics:
    def test_trailing_zeros_trimmed(self):
        assert Polynomial((1, 2, 0, 0)).coefficients == (1, 2)
        assert Polynomial((0, 0)).coefficients == ()
        assert Polynomial(()).is_zero

    def test_degree(self):
        assert Polynomial((1, 2)).degree == 1
        assert Polynomial(()).degree == -1

    def test_product_examples(self):
        one_minus_x = Polynomial((1, -1))
        one_plus_x = Polynomial((1, 1))
        assert (one_minus_x * one_plus_x).coefficients == (1, 0, -1)
        assert (Polynomial(()) * one_plus_x).is_zero
        assert (one_minus_x**3).coefficients == (1, -3, 3, -1)

    def test_product_degree(self):
        a, b = Polynomial((1, 2, 3)), Polynomial((0, 5))
        assert (a * b).degree == a.degree + b.degree

    def test_evaluation_is_exact(self):
        p = Polynomial((Fraction(1, 3), Fraction(-2, 7), 1))
        x = Fraction(5, 11)
        assert p(x) == Fraction(1, 3) - Fraction(2, 7) * x + x * x

    def test_scale_variable(self):
        p = Polynomial((1, 0, -3, 2))
        c = Fraction(1, 4)
        assert p.scale_variable(c)(Fraction(2)) == p(c * 2)


class TestIntegration:
    def test_examples(self):
        assert Polynomial((0, 1)).integrate(0, 1) == Fraction(1, 2)
        # antiderivative of 1 - x^2 is x - x^3/3, hand-checked
        assert Polynomial((1, 0, -1)).integrate(0, 1) == Fraction(2, 3)
        assert Polynomial((1, 0, -3, 2)).integrate(0, 1) == Fraction(1, 2)

    def test_rejects_reversed_bounds(self):
        with pytest.raises(ValueError, match="bounds"):
            Polynomial((1,)).integrate(1, 0)

    def test_rational_bounds(self):
        p = Polynomial((0, 0, 3))
        assert p.integrate(Fraction(1, 2), Fraction(3, 2)) == Fraction(27, 8) - Fraction(1, 8)


class TestLowestNonconstantDegree:
    def test_examples(self):
        assert Polynomial((1, 0, -3, 2)).lowest_nonconstant_degree() == 2
        assert (Polynomial((1, -1)) ** 3).lowest_nonconstant_degree() == 1
        assert Polynomial((7,)).lowest_nonconstant_degree() is None
        assert Polynomial(()).lowest_nonconstant_degree() is None


class TestAlgebraProperties:
    @given(polynomials, polynomials)
    @settings(max_examples=60)
    def test_mul_commutative(self, a, b):
        assert a * b == b * a

    @given(polynomials, polynomials, polynomials)
    @settings(max_examples=60)
    def test_mul_associative(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(polynomials, polynomials, polynomials)
    @settings(max_examples=60)
    def test_mul_distributes_over_add(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(
        polynomials,
        st.lists(small_fractions, min_size=3, max_size=3).map(sorted),
    )
    @settings(max_examples=60)
    def test_integral_additive_in_interval(self, p, points):
        a, b, c = points
        assert p.integrate(a, b) + p.integrate(b, c) == p.integrate(a, c)

    @given(polynomials)
    @settings(max_examples=60)
    def test_derivative_of_antiderivative(self, p):
        assert p.antiderivative().derivative() == p

from fractions import Fraction as F
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from egfbern import qseries as qs
from egfbern.catalog import builtin_series
from egfbern.errors import (
    NonzeroConstantInner,
    NotInvertible,
    OrderTooSmall,
    ParseError,
    ZeroConstantTerm,
)
from egfbern.qseries import EgfSeries, PolySeries, QPolynomial

from .strategies import rationals, series

T = 10
exp = builtin_series("exp", T)
sin = builtin_series("sin", T)
cos = builtin_series("cos", T)


def test_rational_parsing_and_rendering():
    assert qs.parse_rational("6/-4") == F(-3, 2)
    assert qs.render_rational(F(-3, 2)) == "-3/2"
    assert qs.render_rational(F(4, 2)) == "2"
    with pytest.raises(ParseError):
        qs.parse_rational("1/0")
    with pytest.raises(ParseError):
        qs.parse_rational("0.5")
    with pytest.raises(TypeError):
        qs.as_rational(0.5)


def test_coefficients_normalized():
    f = EgfSeries((2, "4/6", F(-3, -9)))
    assert f.coeffs == (F(2), F(2, 3), F(1, 3))
    assert all(c.denominator > 0 for c in f.coeffs)


def test_add_examples():
    assert (exp + -exp) == EgfSeries.zero(T)
    assert (sin + cos).coeffs[:4] == (1, 1, -1, -1)
    assert all(c == 2 for c in (exp + exp).coeffs)


def test_mul_examples():
    assert (exp * exp).coeffs == tuple(F(2**n) for n in range(T + 1))
    assert EgfSeries.constant(1, T) * sin == sin
    sc = sin * cos
    assert (sc[1], sc[3]) == (1, -4)


def test_order_propagates_as_minimum():
    assert (exp.truncate(3) * sin).order == 3
    assert qs.series_add(exp, sin.truncate(5)).order == 5


def test_scale_arg():
    assert qs.series_scale_arg(exp, 2) == exp * exp
    assert qs.series_scale_arg(sin, 1) == sin
    e2 = builtin_series("ek:2", T)
    assert qs.series_scale_arg(e2, 2).coeffs == tuple(F(2**n, factorial(n)) for n in range(T + 1))


def test_pi_N():
    assert qs.pi_N(exp, 1) == EgfSeries.constant(1, T)
    assert qs.pi_N(exp, 0) == EgfSeries.zero(T)
    assert qs.pi_N(sin, 2) == EgfSeries.x(T)


def test_reciprocal_examples():
    assert qs.reciprocal(exp).coeffs == tuple(F((-1) ** n) for n in range(T + 1))
    sinc = EgfSeries.from_function(lambda n: 0 if n % 2 else F((-1) ** (n // 2), n + 1), T)
    assert qs.reciprocal(sinc)[2] == F(1, 3)
    assert qs.reciprocal(qs.divided_shift(exp, 1))[1] == F(-1, 2)
    with pytest.raises(ZeroConstantTerm):
        qs.reciprocal(sin)


def test_compose_examples():
    em1 = exp - EgfSeries.constant(1, T)
    assert qs.compose(exp, em1)[4] == 15
    assert qs.compose(sin, EgfSeries.x(T)) == sin
    assert qs.compose(sin, sin)[3] == -2
    with pytest.raises(NonzeroConstantInner):
        qs.compose(sin, exp)


def test_comp_inverse_examples():
    em1 = exp - EgfSeries.constant(1, T)
    assert qs.comp_inverse(em1).coeffs[1:] == tuple(F((-1) ** (n - 1) * factorial(n - 1)) for n in range(1, T + 1))
    assert qs.comp_inverse(EgfSeries.x(T)) == EgfSeries.x(T)
    assert qs.comp_inverse(qs.shifted_normalized(exp, 2))[4] == F(-68, 45)
    with pytest.raises(NotInvertible):
        qs.comp_inverse(exp)
    with pytest.raises(NotInvertible):
        qs.comp_inverse(EgfSeries((0, 0, 1)))


def test_divided_shift():
    assert qs.divided_shift(exp, 1).coeffs == tuple(F(1, n + 1) for n in range(T))
    assert qs.divided_shift(sin, 3)[0] == -1
    assert qs.divided_shift(exp, 2).coeffs == tuple(F(2, (n + 1) * (n + 2)) for n in range(T - 1))
    assert qs.divided_shift(exp, 2).order == T - 2
    with pytest.raises(OrderTooSmall):
        qs.divided_shift(exp.truncate(1), 2)


def test_shifted_normalized():
    g = qs.shifted_normalized(exp, 2)
    assert g[0] == 0
    assert g.coeffs[1:] == tuple(F(2, n + 1) for n in range(1, g.order + 1))
    assert qs.shifted_normalized(exp, 1) == (exp - EgfSeries.constant(1, T))
    assert qs.shifted_normalized(EgfSeries.monomial(3, T), 3) == EgfSeries.x(T - 2)


def test_pochhammer():
    assert [qs.pochhammer(1, n) for n in range(6)] == [factorial(n) for n in range(6)]
    assert qs.pochhammer(F(1, 2), 2) == F(3, 4)
    assert qs.pochhammer_k(2, 3, 2) == 48
    assert qs.pochhammer_k(2, 2, 3) / 9 == F(10, 9) == qs.pochhammer(F(2, 3), 2)


def test_falling_factorial_and_rendering():
    assert str(qs.falling_factorial_poly(0)) == "1"
    assert str(qs.falling_factorial_poly(2)) == "x^2 - x"
    assert str(qs.falling_factorial_poly(3)) == "x^3 - 3*x^2 + 2*x"
    assert qs.render_polynomial(QPolynomial((F(5, 72), F(-1, 2), F(1, 2)))) == "1/2*x^2 - 1/2*x + 5/72"
    assert qs.render_polynomial(QPolynomial((0, 0, -1))) == "-x^2"
    assert qs.render_polynomial(QPolynomial()) == "0"


def test_qpolynomial_strips_trailing_zeros():
    p = QPolynomial((1, 2, 0, 0))
    assert p.coeffs == (1, 2) and p.degree == 1
    assert QPolynomial((0,)).is_zero() and QPolynomial().degree == -1
    assert (p * p)(F(1, 2)) == 4


def test_polyseries_product_is_binomial():
    a = PolySeries.from_egf(exp)
    assert (a * a)[3] == QPolynomial.constant(8)
    assert PolySeries.scaled_argument(exp)[2] == QPolynomial.monomial(2)


@settings(max_examples=40, deadline=None)
@given(series(order=10, unit_constant=True))
def test_reciprocal_roundtrip(f):
    assert f * qs.reciprocal(f) == EgfSeries.constant(1, 10)


@settings(max_examples=40, deadline=None)
@given(series(order=10, zero_constant=True, invertible_linear=True))
def test_reversion_roundtrip(g):
    h = qs.comp_inverse(g)
    assert qs.compose(g, h) == EgfSeries.x(10)
    assert qs.compose(h, g) == EgfSeries.x(10)


@settings(max_examples=30, deadline=None)
@given(series(order=10), st.integers(0, 4))
def test_divided_shift_restores(f, N):
    back = qs.divided_shift(f, N) * EgfSeries.monomial(N, 10 - N)
    assert back == (f - qs.pi_N(f, N)).truncate(10 - N)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 10))
def test_pochhammer_k_scaling(a, b, n):
    assert qs.pochhammer_k(a, n, b) / F(b) ** n == qs.pochhammer(F(a, b), n)


@settings(max_examples=30, deadline=None)
@given(series(order=6), series(order=6))
def test_ring_laws(f, g):
    assert f * g == g * f
    assert (f + g) - g == f

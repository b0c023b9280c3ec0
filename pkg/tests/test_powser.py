from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from degbell.powser import (
    PowerSeries,
    coefficients_as_egf,
    deg_exp,
    series_derivative,
    series_exp,
    series_mul,
)

from conftest import LAMBDA_GRID


def ps(coeffs, order):
    return PowerSeries.from_coeffs(coeffs, order)


def test_mul_identity():
    b = ps([3, Fraction(1, 2), -1, 7], 3)
    assert series_mul(ps([1], 3), b) == b


def test_mul_t_times_t():
    t = PowerSeries.t(4)
    assert series_mul(t, t) == ps([0, 0, 1], 4)


def test_mul_hand_convolution():
    assert series_mul(ps([1, 1], 4), ps([1, -1], 4)) == ps([1, 0, -1], 4)


def test_mixed_orders_truncate():
    out = ps([1, 1, 1], 5) * ps([1, 2], 2)
    assert out.order == 2
    assert out.coeffs == (1, 3, 3)


def test_coeff_length_invariant():
    with pytest.raises(ValueError):
        PowerSeries(3, (Fraction(1),))


def test_exp_of_zero():
    assert series_exp(PowerSeries.zero(6)) == PowerSeries.constant(1, 6)


def test_exp_of_t():
    want = [Fraction(1), 1, Fraction(1, 2), Fraction(1, 6), Fraction(1, 24), Fraction(1, 120)]
    assert list(series_exp(PowerSeries.t(5)).coeffs) == want


def test_exp_rejects_constant_term():
    with pytest.raises(ValueError):
        series_exp(ps([1, 1], 3))


def test_exp_inverse_of_t():
    t = PowerSeries.t(8)
    assert series_exp(t) * series_exp(-t) == PowerSeries.constant(1, 8)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=5), min_size=1, max_size=8))
def test_exp_inverse_random(tail):
    g = ps([0] + tail, 8)
    assert series_exp(g) * series_exp(-g) == PowerSeries.constant(1, 8)


def test_exp_agrees_with_sympy():
    t = sympy.symbols("t")
    g = ps([0, 2, Fraction(-1, 3), 5], 6)
    g_expr = 2 * t - sympy.Rational(1, 3) * t**2 + 5 * t**3
    poly = sympy.series(sympy.exp(g_expr), t, 0, 7).removeO()
    want = [sympy.Rational(poly.coeff(t, k)) for k in range(7)]
    got = series_exp(g)
    assert [Fraction(int(w.p), int(w.q)) for w in want] == list(got.coeffs)


def test_derivative_examples():
    assert series_derivative(PowerSeries.constant(1, 4)).is_zero()
    assert series_derivative(ps([0, 0, 0, 1], 5)) == ps([0, 0, 3], 4)
    assert series_derivative(PowerSeries.constant(5, 0)) == PowerSeries.zero(0)
    e = series_exp(PowerSeries.t(7))
    assert series_derivative(e) == e.truncate(6)


def test_deg_exp_examples():
    assert deg_exp(0, Fraction(1, 2), 6) == PowerSeries.constant(1, 6)
    assert deg_exp(1, 1, 5) == ps([1, 1], 5)
    assert deg_exp(2, 0, 3) == ps([1, 2, 2, Fraction(4, 3)], 3)


@pytest.mark.parametrize("lam", [Fraction(1, 2), Fraction(-1, 3), Fraction(2)])
@pytest.mark.parametrize("x", [Fraction(3, 2), Fraction(-2), Fraction(5)])
def test_deg_exp_is_binomial_series(x, lam):
    t = sympy.symbols("t")
    lam_s = sympy.Rational(lam.numerator, lam.denominator)
    x_s = sympy.Rational(x.numerator, x.denominator)
    poly = sympy.series((1 + lam_s * t) ** (x_s / lam_s), t, 0, 9).removeO()
    want = [Fraction(int(c.p), int(c.q)) for c in (sympy.Rational(poly.coeff(t, k)) for k in range(9))]
    assert list(deg_exp(x, lam, 8).coeffs) == want


@settings(max_examples=30, deadline=None)
@given(
    st.fractions(min_value=-3, max_value=3, max_denominator=4),
    st.fractions(min_value=-3, max_value=3, max_denominator=4),
    st.sampled_from(LAMBDA_GRID),
)
def test_deg_exp_additive(x, y, lam):
    assert deg_exp(x, lam, 10) * deg_exp(y, lam, 10) == deg_exp(x + y, lam, 10)


@settings(max_examples=30, deadline=None)
@given(st.fractions(min_value=-3, max_value=3, max_denominator=4), st.sampled_from(LAMBDA_GRID))
def test_deg_exp_derivative(x, lam):
    assert series_derivative(deg_exp(x, lam, 10)) == deg_exp(x - lam, lam, 9) * x


def test_render():
    assert str(ps([1, Fraction(-1, 2), 3], 2)) == "1 + -1/2*t + 3*t^2"


def test_egf_coefficients():
    assert coefficients_as_egf(series_exp(PowerSeries.t(4))) == [1, 1, 1, 1, 1]

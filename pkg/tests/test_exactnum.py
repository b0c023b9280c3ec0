from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from degbell.exactnum import (
    as_rational,
    binomial,
    deg_falling,
    falling,
    format_rational,
    parse_rational,
)

from conftest import LAMBDA_GRID, rationals


def pascal(nmax):
    rows = [[1]]
    for n in range(1, nmax + 1):
        prev = rows[-1] + [0]
        rows.append([1] + [prev[k - 1] + prev[k] for k in range(1, n + 1)])
    return rows


@pytest.mark.parametrize(
    "x, n, lam, expected",
    [
        (Fraction(7, 3), 0, 5, 1),
        (3, 2, Fraction(1, 2), Fraction(15, 2)),
        (1, 3, 0, 1),
    ],
)
def test_deg_falling_examples(x, n, lam, expected):
    assert deg_falling(x, n, lam) == expected


def test_deg_falling_direct_product():
    assert deg_falling(3, 2, Fraction(1, 2)) == 3 * (3 - Fraction(1, 2))


@pytest.mark.parametrize("x, n, expected", [(5, 3, 60), (Fraction(-7, 2), 0, 1), (2, 3, 0)])
def test_falling_examples(x, n, expected):
    assert falling(x, n) == expected


def test_binomial_examples():
    assert binomial(4, 2) == pascal(4)[4][2] == 6
    assert binomial(9, 0) == 1
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0


def test_binomial_matches_pascal_triangle():
    rows = pascal(30)
    for n in range(31):
        for k in range(n + 1):
            assert binomial(n, k) == rows[n][k]


@given(rationals, st.integers(0, 12), st.sampled_from(LAMBDA_GRID))
def test_deg_falling_step(x, n, lam):
    assert deg_falling(x, n + 1, lam) == deg_falling(x, n, lam) * (x - n * lam)


@given(rationals, st.integers(0, 12))
def test_lambda_one_is_falling(x, n):
    assert deg_falling(x, n, 1) == falling(x, n)


def test_lambda_zero_is_power_on_grid():
    xs = [Fraction(p, q) for p in range(-6, 7) for q in (1, 2, 3, 5)]
    for x in xs:
        for n in range(21):
            assert deg_falling(x, n, 0) == x**n


def test_pascal_rule():
    for n in range(1, 31):
        for k in range(1, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_results_are_reduced():
    q = deg_falling(Fraction(2, 4), 3, Fraction(1, 6))
    assert q.denominator > 0
    assert Fraction(q.numerator, q.denominator) == q


@pytest.mark.parametrize(
    "text, value",
    [("3", Fraction(3)), ("-1/3", Fraction(-1, 3)), ("6/4", Fraction(3, 2)), (" 0 ", Fraction(0))],
)
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["1/0", "1/-3", "abc", "1.5", "", "1/"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


@given(st.fractions(max_denominator=1000))
def test_format_parse_round_trip(q):
    assert parse_rational(format_rational(q)) == q


def test_as_rational_refuses_floats():
    with pytest.raises(TypeError):
        as_rational(0.5)

from fractions import Fraction

import pytest
from hypothesis import strategies as st

R_GRID = [0, 1, 2, 3]
LAMBDA_GRID = [Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(-1, 3), Fraction(2)]
X_GRID = [Fraction(0), Fraction(1), Fraction(1, 2), Fraction(3)]

GRID = [(r, lam) for r in R_GRID for lam in LAMBDA_GRID]


def grid_id(param):
    if isinstance(param, Fraction):
        return str(param)
    return None


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
lambdas = st.sampled_from(LAMBDA_GRID)


@pytest.fixture(params=GRID, ids=lambda p: f"r={p[0]}-lam={p[1]}")
def r_lam(request):
    return request.param


def set_partitions(elements):
    """All set partitions of a list, built by inserting each element into an existing or new block."""
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)

"""Fixed-grid verification suites for every identity the library implements.

Each suite returns a :class:`CheckReport`; :func:`run_suites` runs a
selection in a deterministic order.  The grid is fixed here so that a
report is reproducible from its header alone.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable

from .bosonalg import (
    Number,
    Product,
    commutation_chain_sides,
    deg_number_power,
    monomial_product,
    naive_word_normal_order,
    normal_order,
    random_word,
    theorem1_check,
    word_expr,
)
from .bosonalg.diffop import apply_as_diff_operator, x_power
from .exactnum import binomial, deg_falling, falling
from .focksim import (
    coherent,
    coherent_overlap,
    dobinski_fock_compare,
    eigenvalue_check,
    expectation,
    genfun_eval,
)
from .powser import PowerSeries, deg_exp, series_derivative, series_exp
from .mpnum import mpq
from .report import CheckReport
from .stirbell import (
    bell_eval,
    dobinski,
    egf_check,
    genfun_check,
    integer_point_check,
    ode_residual,
    recurrence_check,
    stirling_oracle,
    stirling_table,
)

R_GRID = (0, 1, 2, 3)
LAMBDA_GRID = (Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(-1, 3), Fraction(2))
X_GRID = (Fraction(0), Fraction(1), Fraction(1, 2), Fraction(3))
DOBINSKI_X = (Fraction(1, 2), Fraction(1), Fraction(3))
Z_GRID = (0.5, 1.0, 2.0)
NMAX = 8
ORDER = 12
DIM = 64
N_WORDS = 200
WORD_LEN = 8


def grid_header() -> dict:
    return {
        "r": list(R_GRID),
        "lambda": [str(v) for v in LAMBDA_GRID],
        "x": [str(v) for v in X_GRID],
        "z": list(Z_GRID),
        "nmax": NMAX,
        "order": ORDER,
        "dim": DIM,
    }


def _grid():
    for r in R_GRID:
        for lam in LAMBDA_GRID:
            yield r, lam


def suite_exactnum(seed: int = 0) -> CheckReport:
    rep = CheckReport("exactnum")
    xs = [Fraction(p, q) for p in range(-4, 5) for q in (1, 2, 3)]
    for x in xs:
        for lam in LAMBDA_GRID:
            for n in range(9):
                lhs = deg_falling(x, n + 1, lam)
                rhs = deg_falling(x, n, lam) * (x - n * lam)
                rep.add(f"step x={x} lam={lam} n={n}", lhs == rhs, lhs, rhs)
        for n in range(21):
            rep.add(f"lam=0 x={x} n={n}", deg_falling(x, n, 0) == x**n)
            if n <= 10:
                rep.add(f"lam=1 x={x} n={n}", deg_falling(x, n, 1) == falling(x, n))
    for n in range(1, 31):
        for k in range(1, n + 1):
            lhs = binomial(n, k)
            rhs = binomial(n - 1, k - 1) + binomial(n - 1, k)
            rep.add(f"pascal n={n} k={k}", lhs == rhs, lhs, rhs)
    return rep


def suite_powser(seed: int = 0) -> CheckReport:
    rep = CheckReport("powser")
    vals = (Fraction(-1), Fraction(1, 2), Fraction(2))
    for lam in LAMBDA_GRID:
        for x in vals:
            for y in vals:
                lhs = deg_exp(x, lam, ORDER) * deg_exp(y, lam, ORDER)
                rhs = deg_exp(x + y, lam, ORDER)
                rep.add(f"additive x={x} y={y} lam={lam}", lhs == rhs, lhs, rhs)
            lhs = series_derivative(deg_exp(x, lam, ORDER))
            rhs = deg_exp(x - lam, lam, ORDER - 1) * x
            rep.add(f"derivative x={x} lam={lam}", lhs == rhs, lhs, rhs)
    rng = random.Random(seed)
    for trial in range(20):
        g = PowerSeries.from_coeffs(
            [0] + [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(ORDER)], ORDER
        )
        prod = series_exp(g) * series_exp(-g)
        rep.add(f"exp-inverse trial={trial}", prod == PowerSeries.constant(1, ORDER), prod, 1)
    return rep


def suite_stirling(seed: int = 0) -> CheckReport:
    rep = CheckReport("stirling-oracle")
    for r, lam in _grid():
        table = stirling_table(12, r, lam)
        for n in range(13):
            got = list(table.rows[n])
            want = stirling_oracle(n, r, lam)
            rep.add(f"r={r} lam={lam} n={n}", got == want, got, want)
    return rep


def suite_integer_point(seed: int = 0) -> CheckReport:
    rep = CheckReport("integer-point")
    for r, lam in _grid():
        rep.extend(integer_point_check(20, 12, r, lam))
    return rep


def suite_egf(seed: int = 0) -> CheckReport:
    rep = CheckReport("egf")
    for r, lam in _grid():
        rep.extend(egf_check(ORDER, r, lam, ORDER))
    return rep


def suite_normal_order(seed: int = 0) -> CheckReport:
    rep = CheckReport("normal-order")
    for r, lam in _grid():
        rep.extend(theorem1_check(NMAX, r, lam))
    classical = stirling_table(NMAX, 0, 0)
    for k in range(NMAX + 1):
        got = normal_order(Product((Number(),) * k))
        ok = all(got[l, l] == classical.entry(k, l) for l in range(k + 1)) and all(
            i == j for i, j in got
        )
        rep.add(f"integral power k={k}", ok, got, classical.rows[k])
    return rep


def suite_confluence(seed: int = 0) -> CheckReport:
    rep = CheckReport("confluence")
    rng = random.Random(seed)
    for trial in range(N_WORDS):
        word = random_word(rng, WORD_LEN)
        fast = normal_order(word_expr(word))
        slow = naive_word_normal_order(word)
        rep.add(f"seed={seed} word#{trial} {' '.join(word) or '1'}", fast == slow, fast, slow)
    for i, j, k, l in [(0, 1, 1, 0), (0, 2, 2, 0), (1, 3, 2, 1), (2, 2, 3, 3)]:
        word = ("ad",) * i + ("a",) * j + ("ad",) * k + ("a",) * l
        fast = monomial_product(i, j, k, l)
        slow = naive_word_normal_order(word)
        rep.add(f"monomial {(i, j, k, l)}", fast == slow, fast, slow)
    return rep


def suite_genfun(seed: int = 0) -> CheckReport:
    rep = CheckReport("genfun")
    for r, lam in _grid():
        for x in X_GRID:
            rep.extend(genfun_check(ORDER, r, lam, x))
    return rep


def suite_ode(seed: int = 0) -> CheckReport:
    rep = CheckReport("ode")
    for r, lam in _grid():
        for x in X_GRID:
            res = ode_residual(ORDER, r, lam, x)
            rep.add(f"r={r} lam={lam} x={x}", res.order == ORDER - 1 and res.is_zero(), res, 0)
    return rep


def suite_recurrence(seed: int = 0) -> CheckReport:
    rep = CheckReport("recurrence")
    for r, lam in _grid():
        for x in X_GRID:
            rep.extend(recurrence_check(11, r, lam, x))
    return rep


def suite_dobinski(seed: int = 0) -> CheckReport:
    rep = CheckReport("dobinski")
    for r, lam in _grid():
        for x in DOBINSKI_X:
            for k in range(NMAX + 1):
                res = dobinski(k, r, lam, x, tol=1e-12)
                exact = bell_eval(k, r, lam, x)
                err = abs(res.value - mpq(exact))
                rep.add(f"r={r} lam={lam} x={x} k={k}", err < 1e-10, res.value, exact)
    return rep


def suite_fock(seed: int = 0) -> CheckReport:
    rep = CheckReport("fock")
    for r, lam in _grid():
        for n in range(NMAX + 1):
            nf = deg_number_power(n, r, lam)
            for m in range(11):
                want = deg_falling(m + r, n, lam)
                rep.add(f"eigen r={r} lam={lam} n={n} m={m}", eigenvalue_check(nf, m, want))
            for z in Z_GRID:
                res = expectation(z, nf, DIM)
                exact = bell_eval(n, r, lam, Fraction(z) ** 2)
                ok = abs(res.value.real - mpq(exact)) < 1e-9 and res.truncation_bound < 1e-9
                rep.add(f"theorem2 r={r} lam={lam} n={n} z={z}", ok, res.value, exact)
                three = dobinski_fock_compare(z, n, r, lam, DIM, 1e-9)
                rep.add(f"three-way r={r} lam={lam} k={n} z={z}", three.ok, three.direct, three.exact)
            zc = complex(0.6, -0.8)
            res = expectation(zc, nf, DIM)
            rep.add(f"hermitian r={r} lam={lam} n={n}", abs(res.value.imag) < 1e-12, res.value.imag, 0)
    for xr, xi, yr, yi in [(1, 0, 0, 1), (2, 0, -2, 0), (0.5, 1.5, 1.2, -0.7), (-1.4, 1.4, 0.3, 0.2)]:
        x, y = complex(xr, xi), complex(yr, yi)
        got = coherent(x, DIM).inner(coherent(y, DIM))
        want = coherent_overlap(x, y)
        rep.add(f"overlap x={x} y={y}", abs(got - want) < 1e-9, got, want)
    for r, lam in _grid():
        for t in (0.0, 0.1, 0.3):
            if 1 + float(lam) * t <= 0:
                continue
            res = genfun_eval(1.0, r, lam, t, DIM)
            ok = abs(res.lhs - res.rhs) <= res.tail_bound + 1e-30 * max(1, abs(res.rhs))
            rep.add(f"genfun-numeric r={r} lam={lam} t={t}", ok, res.lhs, res.rhs)
    return rep


def count_set_partitions(n: int) -> list[int]:
    """Number of set partitions of [n] into k blocks, k = 0..n, by enumerating restricted growth strings."""
    counts = [0] * (n + 1)

    def walk(pos: int, blocks: int) -> None:
        if pos == n:
            counts[blocks] += 1
            return
        for b in range(blocks + 1):
            walk(pos + 1, max(blocks, b + 1))

    walk(0, 0)
    return counts


def suite_classical(seed: int = 0) -> CheckReport:
    rep = CheckReport("classical")
    for n in range(7):
        per_k = count_set_partitions(n)
        got = bell_eval(n, 0, 0, 1)
        rep.add(f"bell n={n}", got == sum(per_k), got, sum(per_k))
        table = stirling_table(n, 0, 0)
        rep.add(f"S2 row n={n}", list(table.rows[n]) == per_k, table.rows[n], per_k)
    return rep


def suite_commutation(seed: int = 0) -> CheckReport:
    rep = CheckReport("commutation")
    for r, lam in _grid():
        for k in range(7):
            lhs, rhs = commutation_chain_sides(k, r, lam)
            rep.add(f"r={r} lam={lam} k={k}", lhs == rhs, lhs, rhs)
    return rep


def suite_diffop(seed: int = 0) -> CheckReport:
    rep = CheckReport("diffop")
    for r, lam in _grid():
        for n in range(NMAX + 1):
            nf = deg_number_power(n, r, lam)
            for m in range(11):
                got = apply_as_diff_operator(nf, x_power(m))
                want = x_power(m, deg_falling(m + r, n, lam))
                rep.add(f"r={r} lam={lam} n={n} m={m}", got == want, got, want)
    return rep


SUITES: dict[str, Callable[[int], CheckReport]] = {
    "exactnum": suite_exactnum,
    "powser": suite_powser,
    "stirling": suite_stirling,
    "integer-point": suite_integer_point,
    "egf": suite_egf,
    "normal-order": suite_normal_order,
    "confluence": suite_confluence,
    "genfun": suite_genfun,
    "ode": suite_ode,
    "recurrence": suite_recurrence,
    "dobinski": suite_dobinski,
    "fock": suite_fock,
    "classical": suite_classical,
    "commutation": suite_commutation,
    "diffop": suite_diffop,
}


def run_suites(names: list[str] | None = None, seed: int = 0) -> list[CheckReport]:
    names = list(SUITES) if not names or names == ["all"] else names
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}")
    return [SUITES[name](seed) for name in names]

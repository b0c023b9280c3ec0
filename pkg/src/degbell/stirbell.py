"""Degenerate r-Stirling numbers of the second kind and degenerate r-Bell polynomials.

The table entry ``entry(n, k)`` is the coefficient of the falling factorial
(x)_k in the expansion of (x + r)_{n, lam}.  Row n evaluated against powers
of x gives the degenerate r-Bell polynomial of degree n.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactnum import (
    RationalLike,
    as_rational,
    binomial,
    deg_falling,
    falling,
    format_rational,
    parse_rational,
)
from .powser import (
    DEFAULT_ORDER,
    PowerSeries,
    deg_exp,
    series_derivative,
    series_exp,
)
from .mpnum import ctx, mpq
from .report import CheckReport


@dataclass(frozen=True)
class StirlingTable:
    nmax: int
    r: int
    lam: Fraction
    rows: tuple[tuple[Fraction, ...], ...]

    def entry(self, n: int, k: int) -> Fraction:
        if n < 0 or n > self.nmax:
            raise IndexError(f"row {n} outside 0..{self.nmax}")
        if k < 0 or k > n:
            return Fraction(0)
        return self.rows[n][k]

    def shifted_entry(self, n: int, k: int) -> Fraction:
        """Symbol with unshifted indices: row n, column k of the r-shifted table.

        Equals ``entry(n - r, k - r)`` and vanishes unless r <= k <= n.
        """
        if n < self.r or k < self.r:
            return Fraction(0)
        return self.entry(n - self.r, k - self.r)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "k", "value"])
        for n, row in enumerate(self.rows):
            for k, v in enumerate(row):
                writer.writerow([n, k, format_rational(v)])
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {
            "nmax": self.nmax,
            "r": self.r,
            "lambda": format_rational(self.lam),
            "entries": [[format_rational(v) for v in row] for row in self.rows],
        }
        return json.dumps(doc, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> StirlingTable:
        doc = json.loads(text)
        rows = tuple(tuple(parse_rational(v) for v in row) for row in doc["entries"])
        return cls(doc["nmax"], doc["r"], parse_rational(doc["lambda"]), rows)

    @classmethod
    def from_csv(cls, text: str, r: int, lam: RationalLike) -> StirlingTable:
        """Rebuild a table from CSV; r and lam are not part of the CSV layout."""
        reader = csv.DictReader(io.StringIO(text))
        cells: dict[tuple[int, int], Fraction] = {}
        for rec in reader:
            cells[int(rec["n"]), int(rec["k"])] = parse_rational(rec["value"])
        nmax = max((n for n, _ in cells), default=-1)
        rows = tuple(tuple(cells[n, k] for k in range(n + 1)) for n in range(nmax + 1))
        return cls(nmax, r, as_rational(lam), rows)


@lru_cache(maxsize=256)
def _table(nmax: int, r: int, lam: Fraction) -> StirlingTable:
    rows = [(Fraction(1),)]
    for n in range(nmax):
        prev = rows[-1]
        row = []
        for k in range(n + 2):
            left = prev[k - 1] if k >= 1 else Fraction(0)
            here = prev[k] if k <= n else Fraction(0)
            row.append(left + (k + r - n * lam) * here)
        rows.append(tuple(row))
    return StirlingTable(nmax, r, lam, tuple(rows))


def stirling_table(nmax: int, r: int = 0, lam: RationalLike = 0) -> StirlingTable:
    """Triangle of degenerate r-Stirling numbers for rows 0..nmax.

    Built from entry(n+1, k) = entry(n, k-1) + (k + r - n*lam) * entry(n, k),
    which follows from multiplying (x + r)_{n,lam} by (x + r - n*lam) and
    using x (x)_k = (x)_{k+1} + k (x)_k.
    """
    if nmax < 0 or r < 0:
        raise ValueError("nmax and r must be nonnegative")
    return _table(nmax, r, as_rational(lam))


def _poly_mul_linear(poly: list[Fraction], c: Fraction) -> list[Fraction]:
    # poly * (x + c), coefficients low to high
    out = [Fraction(0)] * (len(poly) + 1)
    for i, p in enumerate(poly):
        out[i] += c * p
        out[i + 1] += p
    return out


def stirling_oracle(n: int, r: int = 0, lam: RationalLike = 0) -> list[Fraction]:
    """Falling-factorial coordinates of (x + r)_{n,lam}, by direct change of basis.

    Expands the product in monomials, then strips the top falling factorial
    (monic of degree k) until nothing is left.  Independent of the recurrence
    used by :func:`stirling_table`.
    """
    lam = as_rational(lam)
    poly = [Fraction(1)]
    for i in range(n):
        poly = _poly_mul_linear(poly, r - i * lam)
    coords = [Fraction(0)] * (n + 1)
    for k in range(n, -1, -1):
        c = poly[k]
        coords[k] = c
        if c == 0:
            continue
        ff = [Fraction(1)]
        for i in range(k):
            ff = _poly_mul_linear(ff, Fraction(-i))
        for i, p in enumerate(ff):
            poly[i] -= c * p
    assert not any(poly), "basis change left a remainder"
    return coords


@dataclass(frozen=True)
class BellPolynomial:
    n: int
    r: int
    lam: Fraction
    coeffs: tuple[Fraction, ...]

    def __call__(self, x: RationalLike) -> Fraction:
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(format_rational(c))
            else:
                mono = "x" if k == 1 else f"x^{k}"
                terms.append(mono if c == 1 else f"{format_rational(c)}*{mono}")
        return " + ".join(terms) if terms else "0"


def bell_poly(n: int, r: int = 0, lam: RationalLike = 0) -> BellPolynomial:
    table = stirling_table(n, r, lam)
    return BellPolynomial(n, r, table.lam, table.rows[n])


def bell_eval(n: int, r: int, lam: RationalLike, x: RationalLike) -> Fraction:
    """Degenerate r-Bell polynomial of degree n at x (x = 1 gives the r-Bell number)."""
    return bell_poly(n, r, lam)(x)


def egf_check(kmax: int, r: int, lam: RationalLike, order: int = DEFAULT_ORDER) -> CheckReport:
    """Compare (e_lam(t) - 1)^k e_lam^r(t) / k! against column k of the table."""
    if order < kmax:
        raise ValueError("order must be at least kmax")
    lam = as_rational(lam)
    table = stirling_table(order, r, lam)
    base = deg_exp(1, lam, order) - 1
    er = deg_exp(r, lam, order)
    report = CheckReport("egf")
    power = PowerSeries.constant(1, order)
    k_fact = 1
    for k in range(kmax + 1):
        if k:
            power = power * base
            k_fact *= k
        series = power * er * Fraction(1, k_fact)
        n_fact = 1
        for n in range(order + 1):
            if n:
                n_fact *= n
            got = series[n] * n_fact
            want = table.entry(n, k)
            report.add(f"r={r} lam={lam} n={n} k={k}", got == want, got, want)
    return report


def integer_point_check(mmax: int, nmax: int, r: int, lam: RationalLike) -> CheckReport:
    """(m + r)_{n,lam} == sum_k entry(n, k) (m)_k at every integer m <= mmax."""
    lam = as_rational(lam)
    table = stirling_table(nmax, r, lam)
    report = CheckReport("integer-point")
    for m in range(mmax + 1):
        for n in range(nmax + 1):
            lhs = deg_falling(m + r, n, lam)
            rhs = sum((table.entry(n, k) * falling(m, k) for k in range(n + 1)), Fraction(0))
            report.add(f"r={r} lam={lam} m={m} n={n}", lhs == rhs, lhs, rhs)
    return report


def recurrence_check(nmax: int, r: int, lam: RationalLike, x: RationalLike) -> CheckReport:
    """phi_{n+1}(x) = sum_k C(n,k) phi_k(x) (x (1-lam)_{n-k,lam} + r (-lam)_{n-k,lam})."""
    lam = as_rational(lam)
    x = as_rational(x)
    table = stirling_table(nmax + 1, r, lam)
    phi = [BellPolynomial(n, r, lam, table.rows[n])(x) for n in range(nmax + 2)]
    report = CheckReport("recurrence")
    for n in range(nmax + 1):
        rhs = Fraction(0)
        for k in range(n + 1):
            weight = x * deg_falling(1 - lam, n - k, lam) + r * deg_falling(-lam, n - k, lam)
            rhs += binomial(n, k) * phi[k] * weight
        report.add(f"r={r} lam={lam} x={x} n={n}", phi[n + 1] == rhs, phi[n + 1], rhs)
    return report


def genfun_series(r: int, lam: RationalLike, x: RationalLike, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Closed form e_lam^r(t) * exp(x (e_lam(t) - 1)) as a truncated series."""
    lam = as_rational(lam)
    x = as_rational(x)
    inner = (deg_exp(1, lam, order) - 1) * x
    return deg_exp(r, lam, order) * series_exp(inner)


def genfun_check(nmax: int, r: int, lam: RationalLike, x: RationalLike) -> CheckReport:
    lam = as_rational(lam)
    x = as_rational(x)
    series = genfun_series(r, lam, x, nmax)
    report = CheckReport("genfun")
    fact = 1
    for n in range(nmax + 1):
        if n:
            fact *= n
        want = bell_eval(n, r, lam, x) / fact
        report.add(f"r={r} lam={lam} x={x} n={n}", series[n] == want, series[n], want)
    return report


def ode_residual(nmax: int, r: int, lam: RationalLike, x: RationalLike) -> PowerSeries:
    """f' - (x e_lam^{1-lam}(t) + r e_lam^{-lam}(t)) f for the closed-form f.

    Zero through order nmax - 1 when the logarithmic-derivative identity holds.
    """
    lam = as_rational(lam)
    x = as_rational(x)
    f = genfun_series(r, lam, x, nmax)
    drift = deg_exp(1 - lam, lam, nmax) * x + deg_exp(-lam, lam, nmax) * r
    return series_derivative(f) - drift * f


@dataclass(frozen=True)
class DobinskiResult:
    value: object  # mpf at WORKING_DPS digits
    bound: float
    terms: int  # number of summed terms, n = 0..terms-1
    rounding: float

    @property
    def error_bound(self) -> float:
        return self.bound + self.rounding


def _tail_bound(x: Fraction, k: int, shift: Fraction, n: int) -> Fraction:
    # 2 x^n (n + shift)^k / n!
    return 2 * x**n * (n + shift) ** k / math.factorial(n)


def _tail_ratio(x: Fraction, k: int, shift: Fraction, n: int) -> Fraction:
    # majorant of |term(n+1)| / |term(n)|; nonincreasing in n
    return x / (n + 1) * ((n + 1 + shift) / (n + shift)) ** k


def dobinski(k: int, r: int, lam: RationalLike, x: RationalLike, tol: float = 1e-12) -> DobinskiResult:
    """Evaluate e^{-x} sum_n x^n (n + r)_{k,lam} / n! by truncating the series.

    Summation stops at N, the first index from n* = ceil(2x + k(1 + |lam|) + r)
    at which the term-ratio majorant is at most 1/2 and the geometric tail
    bound 2 x^{N+1} (N+1+r+k|lam|)^k / (N+1)! is below ``tol``.  The partial
    sum is exact; only the factor e^{-x} is rounded, in 40-digit arithmetic.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    lam = as_rational(lam)
    x = as_rational(x)
    if x <= 0:
        raise ValueError("x must be positive")
    shift = r + k * abs(lam)
    tol_q = Fraction(tol)
    N = math.ceil(2 * x + k * (1 + abs(lam)) + r)
    while not (_tail_ratio(x, k, shift, N + 1) <= Fraction(1, 2) and _tail_bound(x, k, shift, N + 1) < tol_q):
        N += 1
    partial = Fraction(0)
    fact = 1
    for n in range(N + 1):
        if n:
            fact *= n
        partial += x**n / fact * deg_falling(n + r, k, lam)
    value = ctx.exp(-mpq(x)) * mpq(partial)
    rounding = float(4 * ctx.eps * abs(value))
    return DobinskiResult(value, float(_tail_bound(x, k, shift, N + 1)), N + 1, rounding)

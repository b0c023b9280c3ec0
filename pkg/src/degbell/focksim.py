"""Truncated Fock-space numerics: number states, coherent states, normal-form actions.

Operators are never materialised as matrices.  A normal monomial
(ad)^i a^j maps |m> to sqrt((m)_j (m-j+i)_i) |m-j+i>, so every action is a
shift and a rescale of the amplitude array.  Coherent-state quantities are
computed in 40-digit floating point (see :mod:`.mpnum`) and returned
together with a rigorous bound on what the truncation to |0>..|D-1>
throws away.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .bosonalg.normalform import NormalForm, deg_number_power
from .exactnum import RationalLike, as_rational, deg_falling
from .mpnum import ctx, mpc, mpq
from .stirbell import bell_eval

DEFAULT_DIM = 64


def abs2_exact(z) -> Fraction:
    """|z|^2 of the value actually stored (floats are dyadic rationals)."""
    if isinstance(z, tuple):
        re, im = z
    else:
        zc = complex(z) if not isinstance(z, Fraction) else z
        re, im = (zc, 0) if isinstance(zc, Fraction) else (zc.real, zc.imag)
    return Fraction(re) ** 2 + Fraction(im) ** 2


def _abs2(z):
    # |z|^2 as an mpf; exact inputs go through abs2_exact
    if isinstance(z, (type(ctx.mpf(0)), type(ctx.mpc(0)))):
        return abs(z) ** 2
    return mpq(abs2_exact(z))


def poisson_tail(mu, start: int):
    """Upper bound on sum_{m >= start} e^{-mu} mu^m / m!.

    Adds terms explicitly until they are negligible and the term ratio is
    below 1/2, then closes with the geometric majorant term / (1 - ratio).
    """
    mu = ctx.mpf(mu) if not isinstance(mu, Fraction) else mpq(mu)
    if start <= 0:
        return ctx.mpf(1)
    if mu == 0:
        return ctx.mpf(0)
    term = ctx.exp(-mu) * mu**start / ctx.factorial(start)
    total = ctx.mpf(0)
    m = start
    while True:
        ratio = mu / (m + 1)
        if ratio < 0.5 and term <= ctx.eps * total:
            return total + term / (1 - ratio)
        total += term
        term *= ratio
        m += 1


def _weighted_tail(mu, start: int, k: int, c):
    # bound on e^{-mu} sum_{m >= start} mu^m/m! (m + c)^k via a geometric majorant
    mu = ctx.mpf(mu)
    c = ctx.mpf(c)
    if mu == 0:
        return ctx.mpf(0) if start > 0 else c**k
    m = max(start, 0)
    while True:
        ratio = mu / (m + 1) * ((m + 1 + c) / (m + c)) ** k if m + c > 0 else ctx.mpf(1)
        if ratio < 1:
            break
        m += 1
    total = ctx.mpf(0)
    for j in range(max(start, 0), m):
        total += ctx.exp(-mu) * mu**j / ctx.factorial(j) * (j + c) ** k
    head = ctx.exp(-mu) * mu**m / ctx.factorial(m) * (m + c) ** k
    return total + head / (1 - ratio)


@dataclass(frozen=True, eq=False)
class FockVector:
    """Amplitudes over |0>..|D-1>.

    For truncated coherent states ``captured_norm`` is the squared norm that
    survived truncation and ``norm_deficit`` the dropped Poisson tail.
    """

    amps: tuple
    captured_norm: object = None
    norm_deficit: object = None

    def __post_init__(self):
        amps = tuple(mpc(a) for a in self.amps)
        if not amps:
            raise ValueError("a Fock vector needs at least one amplitude")
        if not all(ctx.isfinite(a) for a in amps):
            raise ValueError("amplitudes must be finite")
        object.__setattr__(self, "amps", amps)

    @property
    def dim(self) -> int:
        return len(self.amps)

    @classmethod
    def basis(cls, m: int, dim: int) -> FockVector:
        if not 0 <= m < dim:
            raise ValueError(f"|{m}> is outside a {dim}-dimensional truncation")
        return cls(tuple(1 if i == m else 0 for i in range(dim)))

    def inner(self, other: FockVector):
        """<self|other>."""
        n = min(self.dim, other.dim)
        return ctx.fsum(ctx.conj(self.amps[i]) * other.amps[i] for i in range(n))


def coherent(z, dim: int = DEFAULT_DIM) -> FockVector:
    """Truncated |z> with amps[m] = e^{-|z|^2/2} z^m / sqrt(m!)."""
    if dim < 1:
        raise ValueError("dim must be positive")
    zm = mpc(z)
    mu = mpq(abs2_exact(z))
    amps = []
    amp = ctx.mpc(ctx.exp(-mu / 2))
    for m in range(dim):
        amps.append(amp)
        amp = amp * zm / ctx.sqrt(m + 1)
    captured = ctx.fsum(abs(a) ** 2 for a in amps)
    return FockVector(tuple(amps), captured, poisson_tail(mu, dim))


def coherent_overlap(x, y):
    """Closed form <x|y> = exp(-(|x|^2 + |y|^2)/2 + conj(x) y)."""
    xm, ym = mpc(x), mpc(y)
    return ctx.exp(-(mpq(abs2_exact(x)) + mpq(abs2_exact(y))) / 2 + ctx.conj(xm) * ym)


def _radicand(m: int, i: int, j: int) -> int:
    # squared matrix element of (ad)^i a^j between |m> and |m-j+i>
    p = m - j
    return math.perm(m, j) * math.perm(p + i, i)


def _sqrt_int(n: int):
    s = math.isqrt(n)
    return ctx.mpf(s) if s * s == n else ctx.sqrt(n)


def apply_normal_form(nf: NormalForm, v: FockVector) -> FockVector:
    """Act with sum c_ij (ad)^i a^j on v; amplitudes pushed past |D-1> are dropped."""
    dim = v.dim
    contrib: list[list] = [[] for _ in range(dim)]
    for (i, j), c in nf.items():
        cm = mpq(c)
        for m in range(j, dim):
            out = m - j + i
            if out >= dim or v.amps[m] == 0:
                continue
            contrib[out].append(cm * _sqrt_int(_radicand(m, i, j)) * v.amps[m])
    return FockVector(tuple(ctx.fsum(cs) if cs else 0 for cs in contrib))


def number_state_action(nf: NormalForm, m: int) -> dict[int, Fraction]:
    """Exact action of nf on |m>, as {output level: coefficient}.

    Only defined when every matrix element involved is rational (the
    squared elements are integers; diagonal terms always qualify).
    """
    out: dict[int, Fraction] = {}
    for (i, j), c in nf.items():
        if m < j:
            continue
        rad = _radicand(m, i, j)
        root = math.isqrt(rad)
        if root * root != rad:
            raise ValueError(f"matrix element sqrt({rad}) of (ad)^{i} a^{j} on |{m}> is irrational")
        level = m - j + i
        out[level] = out.get(level, Fraction(0)) + c * root
    return {lvl: c for lvl, c in out.items() if c != 0}


@dataclass(frozen=True)
class ExpectationResult:
    value: object  # mpc
    truncation_bound: float
    dim: int

    def as_record(self) -> dict:
        return {
            "value_re": float(self.value.real),
            "value_im": float(self.value.imag),
            "truncation_bound": self.truncation_bound,
            "dim": self.dim,
        }


def expectation(z, nf: NormalForm, dim: int = DEFAULT_DIM) -> ExpectationResult:
    """<z| nf |z> over the truncated coherent state.

    Each monomial contributes sum_p conj(v_{p+i}) v_{p+j} sqrt(...) with
    p + max(i, j) < D.  The exact value of that sum is
    e^{-|z|^2} sum_p conj(z)^(p+i) z^(p+j) / p!, so the dropped part is at
    most |z|^(i+j) times the Poisson tail from D - max(i, j).
    """
    v = coherent(z, dim)
    w = apply_normal_form(nf, v)
    value = v.inner(w)
    absz = ctx.sqrt(mpq(abs2_exact(z)))
    mu = absz**2
    bound = ctx.mpf(0)
    for (i, j), c in nf.items():
        bound += abs(mpq(c)) * absz ** (i + j) * poisson_tail(mu, dim - max(i, j))
    # round outward so the float stays an upper bound
    return ExpectationResult(value, float(bound * (1 + ctx.mpf(2) ** -50)), dim)


@dataclass(frozen=True)
class GenfunResult:
    lhs: object
    rhs: object
    tail_bound: object


def _deg_exp_real(x, lam: Fraction, t):
    if lam == 0:
        return ctx.exp(x * t)
    return (1 + mpq(lam) * t) ** (x / mpq(lam))


def genfun_eval(z, r: int, lam: RationalLike, t: float, dim: int = DEFAULT_DIM) -> GenfunResult:
    """Diagonal sum for <z| e_lam^{r+N}(t) |z> against e_lam^r(t) exp(|z|^2 (e_lam(t) - 1)).

    The left side is the Poisson-weighted sum over |m>, m < D, of
    (1 + lam t)^((m + r)/lam); at lam = 0 the factor is e^((m + r) t).
    """
    lam = as_rational(lam)
    t = ctx.mpf(t) if not isinstance(t, Fraction) else mpq(t)
    if 1 + mpq(lam) * t <= 0:
        raise ValueError("need 1 + lam*t > 0")
    mu = _abs2(z)
    terms = []
    weight = ctx.exp(-mu)
    for m in range(dim):
        terms.append(weight * _deg_exp_real(m + r, lam, t))
        weight *= mu / (m + 1)
    lhs = ctx.fsum(terms)
    q = _deg_exp_real(1, lam, t)
    er = _deg_exp_real(r, lam, t)
    rhs = er * ctx.exp(mu * (q - 1))
    tail = rhs * poisson_tail(mu * q, dim)
    return GenfunResult(lhs, rhs, tail)


@dataclass(frozen=True)
class DobinskiFockResult:
    direct: object
    fock: object
    exact: Fraction
    direct_bound: float
    fock_bound: float
    ok: bool


def dobinski_fock_compare(z, k: int, r: int, lam: RationalLike, dim: int = DEFAULT_DIM, tol: float = 1e-9) -> DobinskiFockResult:
    """Three-way comparison: truncated Poisson series, Fock expectation, exact polynomial."""
    lam = as_rational(lam)
    mu_exact = abs2_exact(z)
    mu = mpq(mu_exact)
    terms = []
    weight = ctx.exp(-mu)
    for m in range(dim):
        terms.append(weight * mpq(deg_falling(m + r, k, lam)))
        weight *= mu / (m + 1)
    direct = ctx.fsum(terms)
    direct_bound = float(_weighted_tail(mu, dim, k, r + k * abs(mpq(lam))))
    res = expectation(z, deg_number_power(k, r, lam), dim)
    exact = bell_eval(k, r, lam, mu_exact)
    ex = mpq(exact)
    fock = res.value.real
    ok = (
        direct_bound < tol
        and res.truncation_bound < tol
        and abs(direct - fock) < tol
        and abs(direct - ex) < tol
        and abs(fock - ex) < tol
        and abs(res.value.imag) < tol
    )
    return DobinskiFockResult(direct, fock, exact, direct_bound, res.truncation_bound, bool(ok))


def dobinski_fock_check(z, k: int, r: int, lam: RationalLike, dim: int = DEFAULT_DIM, tol: float = 1e-9) -> bool:
    return dobinski_fock_compare(z, k, r, lam, dim, tol).ok


def eigenvalue_check(nf: NormalForm, m: int, expected: RationalLike) -> bool:
    """nf |m> == expected |m>, exactly."""
    action = number_state_action(nf, m)
    expected = as_rational(expected)
    if expected == 0:
        return action == {}
    return action == {m: expected}

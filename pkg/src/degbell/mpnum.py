"""Private multiprecision context for the transcendental (non-exact) parts.

Results at the top of the parameter grid reach ~1e8 while the checks need
absolute agreement near 1e-10, which is below the spacing of doubles there.
A private mpmath context keeps that precision without touching the global
``mpmath.mp`` state.
"""

from __future__ import annotations

from fractions import Fraction

from mpmath.ctx_mp import MPContext

WORKING_DPS = 40

ctx = MPContext()
ctx.dps = WORKING_DPS

EPS = ctx.mpf(10) ** (-WORKING_DPS + 2)


def mpq(q: Fraction | int):
    """Fraction -> mpf, rounded once."""
    q = Fraction(q)
    return ctx.mpf(q.numerator) / q.denominator


def mpc(z):
    """Complex-like value -> mpc.  Fractions and (re, im) tuples of Fractions are taken exactly."""
    if isinstance(z, tuple):
        re, im = z
        return ctx.mpc(_real(re), _real(im))
    if isinstance(z, Fraction):
        return ctx.mpc(mpq(z))
    return ctx.mpc(z)


def _real(v):
    return mpq(v) if isinstance(v, Fraction) else ctx.mpf(v)

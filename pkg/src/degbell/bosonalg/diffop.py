"""Representation a = d/dx, ad = x acting on polynomials with rational coefficients.

Polynomials are tuples of Fractions, lowest degree first, with no trailing zeros.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..exactnum import RationalLike, as_rational, falling
from .normalform import NormalForm

Poly = tuple[Fraction, ...]


def poly(coeffs: Sequence[RationalLike]) -> Poly:
    cs = [as_rational(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def x_power(m: int, coeff: RationalLike = 1) -> Poly:
    return poly([0] * m + [coeff])


def apply_as_diff_operator(nf: NormalForm, p: Sequence[RationalLike]) -> Poly:
    """sum c_ij x^i (d/dx)^j applied to p."""
    p = poly(p)
    out: dict[int, Fraction] = {}
    for (i, j), c in nf.items():
        # (d/dx)^j x^m = (m)_j x^(m-j); then multiply by x^i
        for m, pm in enumerate(p):
            if m < j or pm == 0:
                continue
            deg = m - j + i
            out[deg] = out.get(deg, Fraction(0)) + c * pm * falling(m, j)
    if not out:
        return ()
    return poly([out.get(d, 0) for d in range(max(out) + 1)])

"""Exact rational arithmetic and the elementary factorial-type factors.

Rationals are plain :class:`fractions.Fraction` values; they are always
reduced and carry a positive denominator, which is all the rest of the
package relies on.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def as_rational(value: RationalLike | str) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused on purpose: they would silently import rounding.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``; the sign attaches to ``p`` and ``q`` must be positive."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"malformed rational {text!r}")
    num = int(m.group(1))
    if m.group(2) is None:
        return Fraction(num)
    den = int(m.group(2))
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q: RationalLike) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def deg_falling(x: RationalLike, n: int, lam: RationalLike) -> Fraction:
    """Degenerate falling factorial x(x - lam)...(x - (n-1)lam).

    The empty product (n = 0) is 1 and lam = 0 gives x**n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    x = as_rational(x)
    lam = as_rational(lam)
    result = Fraction(1)
    for i in range(n):
        result *= x - i * lam
    return result


def falling(x: RationalLike, n: int) -> Fraction:
    """Ordinary falling factorial x(x-1)...(x-n+1)."""
    return deg_falling(x, n, 1)


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)

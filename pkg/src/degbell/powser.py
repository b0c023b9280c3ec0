"""Truncated formal power series in ``t`` over exact rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exactnum import RationalLike, as_rational, deg_falling, format_rational

DEFAULT_ORDER = 12


@dataclass(frozen=True)
class PowerSeries:
    """Series c0 + c1 t + ... + cN t^N, known exactly through order N.

    Binary operations between series of different orders truncate to the
    smaller order, so an equality between two results always means
    "equal through the common order".
    """

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"expected {self.order + 1} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[RationalLike], order: int) -> PowerSeries:
        """Build a series of the given order, padding with zeros or truncating."""
        cs = [as_rational(c) for c in coeffs][: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        return cls(order, tuple(cs))

    @classmethod
    def constant(cls, c: RationalLike, order: int) -> PowerSeries:
        return cls.from_coeffs([c], order)

    @classmethod
    def zero(cls, order: int) -> PowerSeries:
        return cls.from_coeffs([], order)

    @classmethod
    def t(cls, order: int) -> PowerSeries:
        return cls.from_coeffs([0, 1], order)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def truncate(self, order: int) -> PowerSeries:
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return PowerSeries(order, self.coeffs[: order + 1])

    def _coerce(self, other) -> PowerSeries:
        if isinstance(other, PowerSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return PowerSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return PowerSeries(n, tuple(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> PowerSeries:
        return PowerSeries(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries(self.order, tuple(c * other for c in self.coeffs))
        if isinstance(other, PowerSeries):
            return series_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> PowerSeries:
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = PowerSeries.constant(1, self.order)
        for _ in range(k):
            result = series_mul(result, self)
        return result

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            c_txt = format_rational(c)
            if k == 0:
                parts.append(c_txt)
            elif k == 1:
                parts.append(f"{c_txt}*t")
            else:
                parts.append(f"{c_txt}*t^{k}")
        return " + ".join(parts)


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated to the smaller order."""
    n = min(a.order, b.order)
    out = []
    for k in range(n + 1):
        out.append(sum((a.coeffs[i] * b.coeffs[k - i] for i in range(k + 1)), Fraction(0)))
    return PowerSeries(n, tuple(out))


def series_derivative(a: PowerSeries) -> PowerSeries:
    """Termwise d/dt. Loses one order of accuracy; an order-0 input gives the order-0 zero series."""
    if a.order == 0:
        return PowerSeries.zero(0)
    return PowerSeries(a.order - 1, tuple(k * a.coeffs[k] for k in range(1, a.order + 1)))


def series_exp(g: PowerSeries) -> PowerSeries:
    """exp(g) for a series with zero constant term.

    Uses F' = g' F with F(0) = 1, i.e. k f_k = sum_{j=1}^{k} j g_j f_{k-j}.
    """
    if g.coeffs[0] != 0:
        raise ValueError("series_exp needs a zero constant term")
    n = g.order
    f = [Fraction(1)] + [Fraction(0)] * n
    for k in range(1, n + 1):
        acc = sum((j * g.coeffs[j] * f[k - j] for j in range(1, k + 1)), Fraction(0))
        f[k] = acc / k
    return PowerSeries(n, tuple(f))


def deg_exp(x: RationalLike, lam: RationalLike, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Degenerate exponential (1 + lam t)^(x/lam) = sum (x)_{k,lam} t^k / k!.

    lam = 0 is the limit e^(x t).
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    x = as_rational(x)
    lam = as_rational(lam)
    coeffs = []
    fact = 1
    for k in range(order + 1):
        if k:
            fact *= k
        coeffs.append(deg_falling(x, k, lam) / fact)
    return PowerSeries(order, tuple(coeffs))


def coefficients_as_egf(a: PowerSeries) -> list[Fraction]:
    """Return k! * c_k, i.e. the sequence whose exponential generating function is ``a``."""
    out = []
    fact = 1
    for k, c in enumerate(a.coeffs):
        if k:
            fact *= k
        out.append(c * fact)
    return out


def series_from_egf(values: Sequence[RationalLike], order: int) -> PowerSeries:
    fact = 1
    coeffs = []
    for k in range(order + 1):
        if k:
            fact *= k
        coeffs.append(as_rational(values[k]) / fact)
    return PowerSeries(order, tuple(coeffs))

"""Expression trees over the single-mode boson generators."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..exactnum import format_rational


class OperatorExpr:
    """Base class for expression nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Annihilate(OperatorExpr):
    def __str__(self) -> str:
        return "a"


@dataclass(frozen=True)
class Create(OperatorExpr):
    def __str__(self) -> str:
        return "ad"


@dataclass(frozen=True)
class Number(OperatorExpr):
    """The number operator, ad a."""

    def __str__(self) -> str:
        return "N"


@dataclass(frozen=True)
class Scalar(OperatorExpr):
    value: Fraction

    def __str__(self) -> str:
        return format_rational(self.value)


@dataclass(frozen=True)
class ScalarMul(OperatorExpr):
    coeff: Fraction
    child: OperatorExpr

    def __str__(self) -> str:
        return f"{format_rational(self.coeff)}*({self.child})"


@dataclass(frozen=True)
class Sum(OperatorExpr):
    children: tuple[OperatorExpr, ...]

    def __str__(self) -> str:
        return "(" + " + ".join(str(c) for c in self.children) + ")"


@dataclass(frozen=True)
class Product(OperatorExpr):
    """Ordered product; the operators do not commute."""

    children: tuple[OperatorExpr, ...]

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.children)


@dataclass(frozen=True)
class DegPower(OperatorExpr):
    """(base + shift)(base + shift - lam)...(base + shift - (n-1) lam), left to right."""

    base: OperatorExpr
    n: int
    lam: Fraction
    shift: Fraction = Fraction(0)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("degenerate power needs n >= 0")

    def factors(self) -> list[OperatorExpr]:
        return [
            Sum((self.base, Scalar(self.shift - i * self.lam))) for i in range(self.n)
        ]

    def __str__(self) -> str:
        inner = str(self.base)
        if self.shift:
            inner += f" + {format_rational(self.shift)}"
        return f"({inner})_{{{self.n}, {format_rational(self.lam)}}}"


A = Annihilate()
AD = Create()
N = Number()

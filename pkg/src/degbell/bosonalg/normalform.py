"""Canonical normally ordered forms sum c_ij (ad)^i a^j.

Products use the closed form

    (ad)^i a^j (ad)^k a^l = sum_s s! C(j,s) C(k,s) (ad)^(i+k-s) a^(j+l-s),

which is what repeated use of a ad = ad a + 1 produces.  The naive
swap-by-swap rewriter in :mod:`.rewrite` is kept as an oracle for it.
"""

from __future__ import annotations

import math
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from ..exactnum import RationalLike, as_rational, format_rational
from ..report import CheckReport
from ..stirbell import stirling_table
from .expr import (
    Annihilate,
    Create,
    DegPower,
    Number,
    OperatorExpr,
    Product,
    Scalar,
    ScalarMul,
    Sum,
)

Monomial = tuple[int, int]


class NormalForm:
    """Immutable map (creation power, annihilation power) -> nonzero Fraction."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, RationalLike] | Iterable[tuple[Monomial, RationalLike]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Fraction] = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError(f"negative power in monomial {(i, j)}")
            acc[i, j] = acc.get((i, j), Fraction(0)) + as_rational(c)
        self._terms = MappingProxyType({m: c for m, c in acc.items() if c != 0})
        self._hash = None

    @classmethod
    def identity(cls) -> NormalForm:
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, i: int, j: int, coeff: RationalLike = 1) -> NormalForm:
        return cls({(i, j): coeff})

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return self._terms

    def __getitem__(self, mono: Monomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def max_creation(self) -> int:
        return max((i for i, _ in self._terms), default=0)

    def max_degree(self) -> int:
        return max((max(i, j) for i, j in self._terms), default=0)

    def __eq__(self, other) -> bool:
        if isinstance(other, NormalForm):
            return dict(self._terms) == dict(other._terms)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: NormalForm) -> NormalForm:
        if not isinstance(other, NormalForm):
            return NotImplemented
        return NormalForm(list(self.items()) + list(other.items()))

    def __neg__(self) -> NormalForm:
        return NormalForm({m: -c for m, c in self.items()})

    def __sub__(self, other: NormalForm) -> NormalForm:
        if not isinstance(other, NormalForm):
            return NotImplemented
        return self + (-other)

    def scale(self, c: RationalLike) -> NormalForm:
        c = as_rational(c)
        return NormalForm({m: c * v for m, v in self.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, NormalForm):
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for (i, j), c1 in self.items():
            for (k, l), c2 in other.items():
                for mono, w in monomial_product(i, j, k, l).items():
                    out[mono] = out.get(mono, Fraction(0)) + c1 * c2 * w
        return NormalForm(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms ordered by total degree, then creation power, both descending."""
        return sorted(self.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0][0]), reverse=True)

    def __str__(self) -> str:
        parts = []
        for (i, j), c in self.sorted_terms():
            ops = []
            if i:
                ops.append(f"(ad)^{i}")
            if j:
                ops.append(f"a^{j}")
            txt = " ".join([format_rational(abs(c))] + ops)
            if not parts:
                parts.append(txt if c > 0 else "-" + txt)
            else:
                parts.append(("+ " if c > 0 else "- ") + txt)
        return " ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        body = ", ".join(f"({i},{j}): {format_rational(c)}" for (i, j), c in self.sorted_terms())
        return f"NormalForm({{{body}}})"


def monomial_product(i: int, j: int, k: int, l: int) -> NormalForm:
    """Normally ordered (ad)^i a^j (ad)^k a^l."""
    terms = {}
    for s in range(min(j, k) + 1):
        terms[i + k - s, j + l - s] = math.factorial(s) * math.comb(j, s) * math.comb(k, s)
    return NormalForm(terms)


def normal_order(expr: OperatorExpr) -> NormalForm:
    """Canonical normal form of an expression tree.

    Linear over sums and scalar multiples; products are folded left to right,
    and degenerate powers are expanded factor by factor with normalisation
    after each factor.
    """
    if isinstance(expr, Annihilate):
        return NormalForm.monomial(0, 1)
    if isinstance(expr, Create):
        return NormalForm.monomial(1, 0)
    if isinstance(expr, Number):
        return NormalForm.monomial(1, 1)
    if isinstance(expr, Scalar):
        return NormalForm.monomial(0, 0, expr.value)
    if isinstance(expr, ScalarMul):
        return normal_order(expr.child).scale(expr.coeff)
    if isinstance(expr, Sum):
        out = NormalForm()
        for child in expr.children:
            out = out + normal_order(child)
        return out
    if isinstance(expr, Product):
        out = NormalForm.identity()
        for child in expr.children:
            out = out * normal_order(child)
        return out
    if isinstance(expr, DegPower):
        base = normal_order(expr.base)
        out = NormalForm.identity()
        for i in range(expr.n):
            out = out * (base + NormalForm.monomial(0, 0, expr.shift - i * expr.lam))
        return out
    raise TypeError(f"not an operator expression: {expr!r}")


def deg_number_power(n: int, r: int = 0, lam: RationalLike = 0) -> NormalForm:
    """Normal form of (N + r)_{n,lam}."""
    return normal_order(DegPower(Number(), n, as_rational(lam), as_rational(r)))


def creation_weighted_power(n: int, r: int = 0, lam: RationalLike = 0) -> NormalForm:
    """Normal form of (N)_{n,lam} (ad)^r."""
    expr = Product((DegPower(Number(), n, as_rational(lam)),) + (Create(),) * r)
    return normal_order(expr)


def stirling_prediction(n: int, r: int, lam: RationalLike) -> NormalForm:
    """sum_k entry(n, k) (ad)^k a^k from the (r, lam) table."""
    table = stirling_table(n, r, lam)
    return NormalForm({(k, k): table.entry(n, k) for k in range(n + 1)})


def theorem1_check(nmax: int, r: int, lam: RationalLike) -> CheckReport:
    """Both degenerate normal-ordering displays, plus the (ad)^r-weighted form.

    First: (N + r)_{n,lam} = sum_k entry(n,k) (ad)^k a^k.
    Weighted: (N)_{n,lam} (ad)^r = sum_k entry(n,k) (ad)^(k+r) a^k.
    Second: (N)_{n-r,lam} (ad)^r a^r = sum_{k=r}^{n} entry(n-r, k-r) (ad)^k a^k, for n >= r.
    """
    lam = as_rational(lam)
    table = stirling_table(nmax, r, lam)
    report = CheckReport("theorem1")
    for n in range(nmax + 1):
        got = deg_number_power(n, r, lam)
        want = NormalForm({(k, k): table.entry(n, k) for k in range(n + 1)})
        report.add(f"first r={r} lam={lam} n={n}", got == want, got, want)

        got = creation_weighted_power(n, r, lam)
        want = NormalForm({(k + r, k): table.entry(n, k) for k in range(n + 1)})
        report.add(f"weighted r={r} lam={lam} n={n}", got == want, got, want)

        if n >= r:
            expr = Product(
                (DegPower(Number(), n - r, lam),) + (Create(),) * r + (Annihilate(),) * r
            )
            got = normal_order(expr)
            want = NormalForm({(k, k): table.shifted_entry(n, k) for k in range(r, n + 1)})
            report.add(f"second r={r} lam={lam} n={n}", got == want, got, want)
    return report


def commutation_chain_sides(k: int, r: int, lam: RationalLike) -> tuple[NormalForm, NormalForm]:
    lam = as_rational(lam)
    lhs = Product((Number(), DegPower(Number(), k, lam, r - lam)))
    rhs = Product((Create(), DegPower(Number(), k, lam, 1 + r - lam), Annihilate()))
    return normal_order(lhs), normal_order(rhs)


def commutation_chain_check(k: int, r: int, lam: RationalLike) -> bool:
    """N (N + r - lam)_{k,lam} == ad (N + 1 + r - lam)_{k,lam} a as normal forms."""
    lhs, rhs = commutation_chain_sides(k, r, lam)
    return lhs == rhs

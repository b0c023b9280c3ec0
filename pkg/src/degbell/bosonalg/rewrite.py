"""Naive normal ordering by single swaps, used only to cross-check the closed form.

A word is a tuple over {"a", "ad"}.  The leftmost adjacent ``a ad`` is
replaced by ``ad a`` plus the word with the pair deleted, until no
``a ad`` remains.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache

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
from .normalform import NormalForm

Word = tuple[str, ...]


@lru_cache(maxsize=None)
def _rewrite(word: Word) -> tuple[tuple[Word, int], ...]:
    for p in range(len(word) - 1):
        if word[p] == "a" and word[p + 1] == "ad":
            swapped = word[:p] + ("ad", "a") + word[p + 2 :]
            dropped = word[:p] + word[p + 2 :]
            acc: dict[Word, int] = {}
            for w in (swapped, dropped):
                for nw, c in _rewrite(w):
                    acc[nw] = acc.get(nw, 0) + c
            return tuple(acc.items())
    return ((word, 1),)


def naive_word_normal_order(word: Word) -> NormalForm:
    terms: dict[tuple[int, int], int] = {}
    for w, c in _rewrite(tuple(word)):
        i = w.count("ad")
        mono = (i, len(w) - i)
        terms[mono] = terms.get(mono, 0) + c
    return NormalForm(terms)


def expand_words(expr: OperatorExpr) -> dict[Word, Fraction]:
    """Expand an expression into a linear combination of raw operator words."""
    if isinstance(expr, Annihilate):
        return {("a",): Fraction(1)}
    if isinstance(expr, Create):
        return {("ad",): Fraction(1)}
    if isinstance(expr, Number):
        return {("ad", "a"): Fraction(1)}
    if isinstance(expr, Scalar):
        return {(): expr.value} if expr.value else {}
    if isinstance(expr, ScalarMul):
        return {w: expr.coeff * c for w, c in expand_words(expr.child).items() if expr.coeff}
    if isinstance(expr, Sum):
        acc: dict[Word, Fraction] = {}
        for child in expr.children:
            for w, c in expand_words(child).items():
                acc[w] = acc.get(w, Fraction(0)) + c
        return {w: c for w, c in acc.items() if c}
    if isinstance(expr, (Product, DegPower)):
        factors = expr.children if isinstance(expr, Product) else expr.factors()
        acc = {(): Fraction(1)}
        for f in factors:
            nxt: dict[Word, Fraction] = {}
            for w1, c1 in acc.items():
                for w2, c2 in expand_words(f).items():
                    nxt[w1 + w2] = nxt.get(w1 + w2, Fraction(0)) + c1 * c2
            acc = {w: c for w, c in nxt.items() if c}
        return acc
    raise TypeError(f"not an operator expression: {expr!r}")


def naive_normal_order(expr: OperatorExpr) -> NormalForm:
    out = NormalForm()
    for w, c in expand_words(expr).items():
        out = out + naive_word_normal_order(w).scale(c)
    return out


def random_word(rng: random.Random, max_len: int = 8) -> Word:
    n = rng.randint(0, max_len)
    return tuple(rng.choice(("a", "ad")) for _ in range(n))


def word_expr(word: Word) -> OperatorExpr:
    return Product(tuple(Annihilate() if s == "a" else Create() for s in word))

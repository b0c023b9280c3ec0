"""Recursive-descent parser for boson operator expressions.

Grammar::

    expr     := ['-'] term (('+' | '-') term)*
    term     := factor (factor | '*' factor)*
    factor   := 'a' | 'ad' | 'N' | rational
              | '(' expr ')' ['_' '{' integer ',' signed-rational '}']
    rational := integer ['/' positive-integer]

Whitespace is ignored; ``aad`` lexes as ``a ad``.  Only ASCII is accepted, so
character offsets in errors are byte offsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

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


class ParseError(ValueError):
    def __init__(self, message: str, offset: int, expected: frozenset[str] = frozenset()):
        self.offset = offset
        self.expected = expected
        detail = f" (expected one of: {', '.join(sorted(expected))})" if expected else ""
        super().__init__(f"{message} at offset {offset}{detail}")


@dataclass(frozen=True)
class Token:
    kind: str  # 'a', 'ad', 'N', 'int', or a punctuation character, or 'eof'
    text: str
    offset: int


_PUNCT = set("+-*/()_{},")
_DIGITS = set("0123456789")
_SPACE = set(" \t\r\n")


def tokenize(text: str) -> list[Token]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in _SPACE:
            i += 1
        elif ch in _DIGITS:
            j = i
            while j < len(text) and text[j] in _DIGITS:
                j += 1
            tokens.append(Token("int", text[i:j], i))
            i = j
        elif ch == "a":
            if text.startswith("ad", i):
                tokens.append(Token("ad", "ad", i))
                i += 2
            else:
                tokens.append(Token("a", "a", i))
                i += 1
        elif ch == "N":
            tokens.append(Token("N", "N", i))
            i += 1
        elif ch in _PUNCT:
            tokens.append(Token(ch, ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(Token("eof", "", len(text)))
    return tokens


_FACTOR_START = frozenset({"a", "ad", "N", "int", "("})


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def expect(self, kind: str) -> Token:
        if self.tok.kind != kind:
            self.fail({kind})
        return self.advance()

    def fail(self, expected) -> None:
        t = self.tok
        what = "end of input" if t.kind == "eof" else f"token {t.text!r}"
        raise ParseError(f"unexpected {what}", t.offset, frozenset(expected))

    def parse(self) -> OperatorExpr:
        node = self.expr()
        if self.tok.kind != "eof":
            self.fail({"+", "-", "*", "eof"} | _FACTOR_START)
        return node

    def expr(self) -> OperatorExpr:
        terms = []
        if self.tok.kind == "-":
            self.advance()
            terms.append(ScalarMul(Fraction(-1), self.term()))
        else:
            terms.append(self.term())
        while self.tok.kind in ("+", "-"):
            op = self.advance().kind
            t = self.term()
            terms.append(t if op == "+" else ScalarMul(Fraction(-1), t))
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def term(self) -> OperatorExpr:
        factors = [self.factor()]
        while self.tok.kind in _FACTOR_START or self.tok.kind == "*":
            if self.tok.kind == "*":
                self.advance()
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def rational(self, signed: bool = False) -> Fraction:
        sign = 1
        if signed and self.tok.kind == "-":
            self.advance()
            sign = -1
        num = int(self.expect("int").text)
        if self.tok.kind == "/":
            self.advance()
            den_tok = self.expect("int")
            den = int(den_tok.text)
            if den == 0:
                raise ParseError("zero denominator", den_tok.offset, frozenset({"positive integer"}))
            return Fraction(sign * num, den)
        return Fraction(sign * num)

    def factor(self) -> OperatorExpr:
        kind = self.tok.kind
        if kind == "a":
            self.advance()
            return Annihilate()
        if kind == "ad":
            self.advance()
            return Create()
        if kind == "N":
            self.advance()
            return Number()
        if kind == "int":
            return Scalar(self.rational())
        if kind == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            if self.tok.kind != "_":
                return inner
            self.advance()
            self.expect("{")
            n = int(self.expect("int").text)
            self.expect(",")
            lam = self.rational(signed=True)
            self.expect("}")
            return _deg_power(inner, n, lam)
        self.fail(_FACTOR_START)


def _deg_power(inner: OperatorExpr, n: int, lam: Fraction) -> DegPower:
    # pull additive constants out into the shift: (N + 2)_{3,1/2} -> DegPower(N, 3, 1/2, 2)
    if isinstance(inner, Sum):
        consts = [_constant(c) for c in inner.children]
        rest = [c for c, v in zip(inner.children, consts) if v is None]
        if rest and len(rest) < len(consts):
            base = rest[0] if len(rest) == 1 else Sum(tuple(rest))
            shift = sum((v for v in consts if v is not None), Fraction(0))
            return DegPower(base, n, lam, shift)
    return DegPower(inner, n, lam)


def _constant(node: OperatorExpr) -> Fraction | None:
    if isinstance(node, Scalar):
        return node.value
    if isinstance(node, ScalarMul) and isinstance(node.child, Scalar):
        return node.coeff * node.child.value
    return None


def parse(text: str) -> OperatorExpr:
    """Parse an operator expression; raises :class:`ParseError` with the byte offset."""
    return _Parser(text).parse()

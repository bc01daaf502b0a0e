"""Expression parser for word polynomials over x, y with z = x + y shorthand.

Grammar (EBNF)::

    expr     := [ '+' | '-' ] term { ('+' | '-') term }
    term     := rational [ '*' factor { factor } ] | factor { factor }
    factor   := atom [ '^' nat ]
    atom     := 'x' | 'y' | 'z' | '(' expr ')'
    rational := nat [ '/' nat ]

Juxtaposition of factors is concatenation; whitespace is insignificant.
A bare rational is a valid term (the empty word with that coefficient), and a
leading sign is accepted, so any printed :class:`~mzvlab.words.WordPoly`
reparses to an equal polynomial — including "1", "0", and "-yx - yy".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .words import EMPTY, WordPoly

__all__ = ["ExprSyntaxError", "parse_expr", "evaluate", "parse_poly"]


class ExprSyntaxError(ValueError):
    """Syntax error with a 0-based position into the source text."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


# -- AST ------------------------------------------------------------------------


@dataclass(frozen=True)
class Letter:
    name: str  # 'x', 'y', or 'z'


@dataclass(frozen=True)
class Group:
    body: "Expr"


@dataclass(frozen=True)
class Factor:
    atom: Letter | Group
    exponent: int  # 1 when no '^' was written


@dataclass(frozen=True)
class Term:
    coefficient: Fraction
    factors: tuple[Factor, ...]  # may be empty: bare rational


@dataclass(frozen=True)
class Expr:
    terms: tuple[tuple[int, Term], ...]  # (sign, term), sign in {+1, -1}


# -- tokenizer ------------------------------------------------------------------

_PUNCT = "+-*/^()"


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    toks = []
    i, n = 0, len(src)
    while i < n:
        ch = src[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i + 1
            while j < n and src[j].isdigit():
                j += 1
            toks.append(("num", src[i:j], i))
            i = j
        elif ch in "xyz":
            toks.append(("letter", ch, i))
            i += 1
        elif ch in _PUNCT:
            toks.append((ch, ch, i))
            i += 1
        else:
            raise ExprSyntaxError(f"unexpected character {ch!r}", i)
    toks.append(("end", "", n))
    return toks


# -- parser ---------------------------------------------------------------------


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.toks = _tokenize(src)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.toks[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str) -> tuple[str, str, int]:
        tok = self.take()
        if tok[0] != kind:
            raise ExprSyntaxError(f"expected {kind!r}, found {tok[1] or 'end of input'!r}", tok[2])
        return tok

    def parse(self) -> Expr:
        expr = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ExprSyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return expr

    def expr(self) -> Expr:
        terms = []
        sign = 1
        if self.peek()[0] in "+-":
            sign = 1 if self.take()[0] == "+" else -1
        terms.append((sign, self.term()))
        while self.peek()[0] in "+-":
            sign = 1 if self.take()[0] == "+" else -1
            terms.append((sign, self.term()))
        return Expr(tuple(terms))

    def term(self) -> Term:
        coef = Fraction(1)
        factors: list[Factor] = []
        if self.peek()[0] == "num":
            coef = self.rational()
            if self.peek()[0] == "*":
                self.take()
                factors.append(self.factor())
            # else: bare rational term, no factors
        else:
            factors.append(self.factor())
        while self.peek()[0] in ("letter", "("):
            factors.append(self.factor())
        return Term(coef, tuple(factors))

    def rational(self) -> Fraction:
        num = int(self.expect("num")[1])
        if self.peek()[0] == "/":
            self.take()
            tok = self.expect("num")
            den = int(tok[1])
            if den == 0:
                raise ExprSyntaxError("zero denominator", tok[2])
            return Fraction(num, den)
        return Fraction(num)

    def factor(self) -> Factor:
        tok = self.take()
        if tok[0] == "letter":
            atom: Letter | Group = Letter(tok[1])
        elif tok[0] == "(":
            atom = Group(self.expr())
            self.expect(")")
        else:
            raise ExprSyntaxError(f"expected 'x', 'y', 'z', or '(', found {tok[1] or 'end of input'!r}", tok[2])
        exponent = 1
        if self.peek()[0] == "^":
            self.take()
            exponent = int(self.expect("num")[1])
        return Factor(atom, exponent)


def parse_expr(src: str) -> Expr:
    """Parse source text to an AST; raises :class:`ExprSyntaxError` on bad input."""
    return _Parser(src).parse()


# -- evaluation -------------------------------------------------------------------

_X = WordPoly.from_letters("x")
_Y = WordPoly.from_letters("y")
_Z = _X + _Y


def _eval_factor(node: Factor) -> WordPoly:
    if isinstance(node.atom, Letter):
        base = {"x": _X, "y": _Y, "z": _Z}[node.atom.name]
    else:
        base = evaluate(node.atom.body)
    out = WordPoly.one()
    for _ in range(node.exponent):
        out = out * base
    return out


def evaluate(expr: Expr) -> WordPoly:
    """Evaluate an AST to a WordPoly, expanding z to x + y."""
    total = WordPoly.zero()
    for sign, term in expr.terms:
        piece = WordPoly.from_word(EMPTY) * (sign * term.coefficient)
        for f in term.factors:
            piece = piece * _eval_factor(f)
        total = total + piece
    return total


def parse_poly(src: str) -> WordPoly:
    """Parse and evaluate in one step; "" is the empty word (coefficient 1)."""
    if not src.strip():
        return WordPoly.one()
    return evaluate(parse_expr(src))

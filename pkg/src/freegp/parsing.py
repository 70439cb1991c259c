"""Expression grammar shared by the command line and the tests.

    expr     := ['+'|'-'] term (('+'|'-') term)*
    term     := rational ('*' factor)* | factor ('*' factor)*
    factor   := VAR | '{' expr ',' expr '}' | '(' expr ')'
    VAR      := letter digits            (x1, t3, y12)
    rational := integer ['/' integer]

Multiplication is always written '*'; juxtaposition is a syntax error
(variable names carry their own digits).  Whitespace is insignificant.
A bare rational is a valid term and a leading sign is allowed, so every
canonical form the kernel prints parses back to the same element.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ac import ACPoly, Variable, Word
from .assoc import AssocPoly, commutator
from .gp import GPPoly
from .ratfunc import MultiPoly

__all__ = [
    "ParseError",
    "Expr",
    "Term",
    "VarFactor",
    "BracketFactor",
    "GroupFactor",
    "parse",
    "to_gp",
    "to_ac",
    "gp_to_ac",
    "to_assoc",
    "to_poly",
]


class ParseError(Exception):
    def __init__(self, message: str, line: int = 0, column: int = 0, expected: tuple[str, ...] = ()):
        self.message = message
        self.line = line
        self.column = column
        self.expected = expected
        super().__init__(str(self))

    def __str__(self) -> str:
        loc = f"{self.line}:{self.column}: " if self.line else ""
        tail = f" (expected {', '.join(self.expected)})" if self.expected else ""
        return f"{loc}{self.message}{tail}"


@dataclass(frozen=True)
class Token:
    kind: str  # VAR NUM { } ( ) , + - * / END
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[Token]:
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch in "{}(),+-*/":
            tokens.append(Token(ch, ch, line, col))
            col += 1
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("NUM", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha():
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise ParseError(
                    f"variable {ch!r} needs a numeric index", line, col, ("digits",)
                )
            tokens.append(Token("VAR", text[i:j], line, col))
            col += j - i
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("END", "", line, col))
    return tokens


@dataclass(frozen=True)
class VarFactor:
    name: str


@dataclass(frozen=True)
class BracketFactor:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class GroupFactor:
    inner: "Expr"


@dataclass(frozen=True)
class Term:
    coefficient: Fraction
    factors: tuple


@dataclass(frozen=True)
class Expr:
    terms: tuple[Term, ...]


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected: tuple[str, ...]):
        tok = self.peek()
        what = "end of input" if tok.kind == "END" else f"{tok.text!r}"
        raise ParseError(f"unexpected {what}", tok.line, tok.column, expected)

    def expect(self, kind: str) -> Token:
        if self.peek().kind != kind:
            self.fail((kind,))
        return self.advance()

    def parse_expr(self) -> Expr:
        terms = []
        sign = Fraction(1)
        if self.peek().kind in ("+", "-"):
            if self.advance().kind == "-":
                sign = Fraction(-1)
        terms.append(self.parse_term(sign))
        while self.peek().kind in ("+", "-"):
            sign = Fraction(1) if self.advance().kind == "+" else Fraction(-1)
            terms.append(self.parse_term(sign))
        return Expr(tuple(terms))

    def parse_term(self, sign: Fraction) -> Term:
        coeff = sign
        factors = []
        tok = self.peek()
        if tok.kind == "NUM":
            coeff *= self.parse_rational()
        elif tok.kind in ("VAR", "{", "("):
            factors.append(self.parse_factor())
        else:
            self.fail(("number", "variable", "'{'", "'('"))
        while self.peek().kind == "*":
            self.advance()
            factors.append(self.parse_factor())
        return Term(coeff, tuple(factors))

    def parse_rational(self) -> Fraction:
        num = int(self.expect("NUM").text)
        if self.peek().kind == "/":
            self.advance()
            den = int(self.expect("NUM").text)
            if den == 0:
                tok = self.tokens[self.pos - 1]
                raise ParseError("zero denominator", tok.line, tok.column)
            return Fraction(num, den)
        return Fraction(num)

    def parse_factor(self):
        tok = self.peek()
        if tok.kind == "VAR":
            return VarFactor(self.advance().text)
        if tok.kind == "{":
            self.advance()
            left = self.parse_expr()
            self.expect(",")
            right = self.parse_expr()
            self.expect("}")
            return BracketFactor(left, right)
        if tok.kind == "(":
            self.advance()
            inner = self.parse_expr()
            self.expect(")")
            return GroupFactor(inner)
        self.fail(("variable", "'{'", "'('"))


def parse(text: str) -> Expr:
    parser = _Parser(_tokenize(text))
    expr = parser.parse_expr()
    if parser.peek().kind != "END":
        parser.fail(("'+'", "'-'", "'*'", "end of input"))
    return expr


def to_gp(expr: Expr) -> GPPoly:
    """Evaluate in the free generic Poisson algebra (canonicalizing)."""
    total = GPPoly.zero()
    for term in expr.terms:
        g = GPPoly.constant(term.coefficient)
        for factor in term.factors:
            g = g * _factor_gp(factor)
        total = total + g
    return total


def _factor_gp(factor) -> GPPoly:
    if isinstance(factor, VarFactor):
        return GPPoly.generator(Variable.parse(factor.name))
    if isinstance(factor, BracketFactor):
        return to_gp(factor.left).bracket(to_gp(factor.right))
    return to_gp(factor.inner)


def gp_to_ac(g: GPPoly) -> ACPoly:
    """Reinterpret a sum of single bracket words as an AC element."""
    acc: dict[Word, Fraction] = {}
    for m, c in g._terms.items():
        if len(m) != 1:
            raise ValueError(
                "not an anti-commutative element: products or constants present"
            )
        acc[m[0]] = c
    return ACPoly(acc)


def to_ac(expr: Expr) -> ACPoly:
    return gp_to_ac(to_gp(expr))


def to_assoc(expr: Expr) -> AssocPoly:
    """Evaluate in the free associative algebra on the variable names;
    '*' concatenates and braces are commutators."""
    total = AssocPoly.zero()
    for term in expr.terms:
        g = term.coefficient * AssocPoly.one()
        for factor in term.factors:
            g = g * _factor_assoc(factor)
        total = total + g
    return total


def _factor_assoc(factor) -> AssocPoly:
    if isinstance(factor, VarFactor):
        return AssocPoly.letter(factor.name)
    if isinstance(factor, BracketFactor):
        return commutator(to_assoc(factor.left), to_assoc(factor.right))
    return to_assoc(factor.inner)


def to_poly(expr: Expr, var_names: tuple[str, ...]) -> MultiPoly:
    """Evaluate as a commutative polynomial over the given variables;
    brackets are rejected."""
    total = MultiPoly.zero(var_names)
    for term in expr.terms:
        g = MultiPoly.constant(var_names, term.coefficient)
        for factor in term.factors:
            g = g * _factor_poly(factor, var_names)
        total = total + g
    return total


def _factor_poly(factor, var_names: tuple[str, ...]) -> MultiPoly:
    if isinstance(factor, VarFactor):
        if factor.name not in var_names:
            raise ValueError(f"unknown realization variable {factor.name!r}")
        return MultiPoly.variable(var_names, factor.name)
    if isinstance(factor, BracketFactor):
        raise ValueError("brackets are not allowed in realization assignments")
    return to_poly(factor.inner, var_names)

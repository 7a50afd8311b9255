"""
Recursive-descent parser for polynomial expressions.

Grammar::

    expression := term (('+' | '-') term)*
    term       := unary ('*' unary)*
    unary      := ('+' | '-') unary | factor
    factor     := base ('^' INTEGER)?
    base       := RATIONAL | VARIABLE | '(' expression ')'

Rational literals are ``a`` or ``a/b``.  There is no implicit
multiplication and exponents must be nonnegative integer literals.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import ParseError
from .poly import Polynomial

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>\d+(?:/\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*^()])
    """,
    re.VERBOSE,
)


class Token(NamedTuple):
    kind: str
    text: str
    pos: int


def tokenize(src: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            raise ParseError(f"unexpected character {src[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(Token("end", "", len(src)))
    return tokens


class Parser:
    def __init__(self, src: str, variables: Sequence[str]):
        self.src = src
        self.variables = {name: i for i, name in enumerate(variables)}
        if len(self.variables) != len(variables):
            raise ValueError("variable names must be distinct")
        if not variables:
            raise ValueError("at least one variable is required")
        self.dim = len(variables)
        self.tokens = tokenize(src)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        if self.tok.text != text:
            found = self.tok.text or "end of input"
            raise ParseError(f"expected {text!r}, found {found!r}", self.tok.pos)
        return self.advance()

    def parse(self) -> Polynomial:
        if self.tok.kind == "end":
            raise ParseError("empty expression", 0)
        result = self.expression()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return result

    def expression(self) -> Polynomial:
        acc = self.term()
        while self.tok.text in ("+", "-"):
            op = self.advance().text
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Polynomial:
        acc = self.unary()
        while self.tok.text == "*":
            self.advance()
            acc = acc * self.unary()
        return acc

    def unary(self) -> Polynomial:
        if self.tok.text == "-":
            self.advance()
            return -self.unary()
        if self.tok.text == "+":
            self.advance()
            return self.unary()
        return self.factor()

    def factor(self) -> Polynomial:
        base = self.base()
        if self.tok.text == "^":
            self.advance()
            t = self.tok
            if t.kind != "number" or "/" in t.text:
                raise ParseError("exponent must be a nonnegative integer literal", t.pos)
            self.advance()
            return base ** int(t.text)
        return base

    def base(self) -> Polynomial:
        t = self.tok
        if t.kind == "number":
            self.advance()
            num, _, den = t.text.partition("/")
            if den and int(den) == 0:
                raise ParseError("zero denominator", t.pos)
            return Polynomial.constant(Fraction(int(num), int(den) if den else 1), self.dim)
        if t.kind == "name":
            if t.text not in self.variables:
                raise ParseError(f"unknown variable {t.text!r}", t.pos)
            self.advance()
            return Polynomial.variable(self.variables[t.text], self.dim)
        if t.text == "(":
            self.advance()
            inner = self.expression()
            self.expect(")")
            return inner
        found = t.text or "end of input"
        raise ParseError(f"unexpected {found!r}", t.pos)


def default_variables(dim: int) -> list[str]:
    return [f"x{i + 1}" for i in range(dim)]


def parse_polynomial(src: str, variables: Sequence[str] | int) -> Polynomial:
    """Parse ``src`` into an expanded polynomial over ``variables`` (names, or a count for x1..xd)."""
    if isinstance(variables, int):
        variables = default_variables(variables)
    return Parser(src, list(variables)).parse()

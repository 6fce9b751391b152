"""Recursive-descent parser for the CLI polynomial expression grammar.

    expr     := term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' uint)?
    base     := rational | 'x' | '(' expr ')'
    rational := int ('/' uint)?

Whitespace is insignificant.  Printing a Polynomial with str() produces
text this grammar accepts, so parse/print round-trips exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError
from .poly import Polynomial


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def uint(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected digits", start)
        return int(self.src[start:self.pos])

    def rational(self) -> Fraction:
        self.skip_ws()
        negative = False
        if self.peek() == "-":
            negative = True
            self.pos += 1
        num = self.uint()
        den = 1
        if self.peek() == "/":
            self.pos += 1
            den = self.uint()
        value = Fraction(num, den)
        return -value if negative else value

    def base(self) -> Polynomial:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            self.expect(")")
            return inner
        if ch == "x":
            self.pos += 1
            return Polynomial.x()
        if ch.isdigit() or ch == "-":
            return Polynomial.constant(self.rational())
        raise ParseError("expected rational, 'x', or '('", self.pos)

    def factor(self) -> Polynomial:
        b = self.base()
        if self.peek() == "^":
            self.pos += 1
            return b ** self.uint()
        return b

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.peek() == "*":
            self.pos += 1
            acc = acc * self.factor()
        return acc

    def expr(self) -> Polynomial:
        acc = self.term()
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                acc = acc + self.term()
            elif ch == "-":
                self.pos += 1
                acc = acc - self.term()
            else:
                return acc


def parse_poly(src: str) -> Polynomial:
    parser = _Parser(src)
    result = parser.expr()
    parser.skip_ws()
    if parser.pos != len(src):
        raise ParseError("unexpected trailing input", parser.pos)
    return result

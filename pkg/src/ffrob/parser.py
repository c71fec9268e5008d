"""Recursive-descent parser for polynomial expressions.

Grammar: integer coefficients, declared variable names, ``^`` with
positive integer exponents, ``*``, ``+``, ``-``, parentheses; whitespace
is ignored.  Coefficients are reduced mod p on the fly.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .poly import Polynomial, PolyRing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([()+\-*^]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            rest = text[pos:].strip()
            if not rest:
                break
            raise ParseError(f"unexpected character {rest[0]!r} in {text!r}")
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1))))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2)))
        else:
            tokens.append(("op", m.group(3)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens, ring: PolyRing):
        self.tokens = tokens
        self.i = 0
        self.ring = ring
        self.index = {name: i for i, name in enumerate(ring.names)}

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression")
        self.i += 1
        return tok

    def expr(self) -> Polynomial:
        sign = 1
        tok = self.peek()
        if tok == ("op", "-"):
            self.take()
            sign = -1
        elif tok == ("op", "+"):
            self.take()
        result = self.term().scale(sign)
        while True:
            tok = self.peek()
            if tok == ("op", "+"):
                self.take()
                result = result + self.term()
            elif tok == ("op", "-"):
                self.take()
                result = result - self.term()
            else:
                return result

    def term(self) -> Polynomial:
        result = self.factor()
        while self.peek() == ("op", "*"):
            self.take()
            result = result * self.factor()
        return result

    def factor(self) -> Polynomial:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            tok = self.peek()
            if tok is None or tok[0] != "int" or tok[1] <= 0:
                raise ParseError("'^' needs a positive integer exponent")
            self.take()
            n = tok[1]
            result = self.ring.one()
            acc = base
            while n:
                if n & 1:
                    result = result * acc
                n >>= 1
                if n:
                    acc = acc * acc
            return result
        return base

    def atom(self) -> Polynomial:
        kind, value = self.take()
        if kind == "int":
            return self.ring.constant(value)
        if kind == "name":
            if value not in self.index:
                raise ParseError(f"unknown variable {value!r}")
            return self.ring.variable(self.index[value])
        if (kind, value) == ("op", "("):
            inner = self.expr()
            if self.take() != ("op", ")"):
                raise ParseError("missing closing parenthesis")
            return inner
        raise ParseError(f"unexpected token {value!r}")


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial expression")
    parser = _Parser(tokens, ring)
    result = parser.expr()
    if parser.peek() is not None:
        raise ParseError(f"trailing tokens after expression in {text!r}")
    return result

"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace ignored, no implicit multiplication)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' uint)?
    base   := rational | variable | '(' expr ')'
    rational := digits ('/' digits)?
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .polyring import Polynomial, PolyRing


class ParseError(ValueError):
    def __init__(self, msg: str, text: str = "", pos: int = 0):
        self.pos = pos
        self.text = text
        super().__init__(f"{msg} at position {pos}" + (f" in {text!r}" if text else ""))


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\s*/\s*\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()]))"
)


def _tokenize(text: str) -> list:
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append((kind, m.group(kind), start))
        pos = m.end()
    toks.append(("end", "", n))
    return toks


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.index = {name: i for i, name in enumerate(ring.names)}
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2])

    def parse(self) -> Polynomial:
        p = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r}")
        return p

    def expr(self) -> Polynomial:
        sign = 1
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                acc = acc + t if val == "+" else acc - t
            else:
                return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.factor()
            elif kind in ("num", "name") or (kind == "op" and val == "("):
                self.error("implicit multiplication is not allowed; use '*'")
            else:
                return acc

    def factor(self) -> Polynomial:
        base = self.base()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "-":
                self.error("negative exponent")
            if tok[0] != "num" or "/" in tok[1]:
                self.error("exponent must be a non-negative integer")
            self.take()
            return base ** int(tok[1])
        return base

    def base(self) -> Polynomial:
        tok = self.take()
        kind, val, _ = tok
        if kind == "num":
            return self.ring.const(Fraction(val.replace(" ", "")))
        if kind == "name":
            if val not in self.index:
                self.error(f"unknown variable {val!r}", tok)
            return self.ring.gen(self.index[val])
        if kind == "op" and val == "(":
            inner = self.expr()
            close = self.take()
            if close[0] != "op" or close[1] != ")":
                self.error("expected ')'", close)
            return inner
        self.error("expected a number, variable or '('", tok)


def parse_polynomial(text: str, ring: PolyRing | Sequence[str]) -> Polynomial:
    """Parse ``text`` into a polynomial over ``ring`` (or over the named variables)."""
    if not isinstance(ring, PolyRing):
        ring = PolyRing(ring)
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}")
    return _Parser(text, ring).parse()


def parse_matrix(rows, ring: PolyRing):
    from .matpoly import PolyMatrix

    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ParseError("matrix must be a non-empty list of rows")
    width = len(rows[0])
    if width == 0 or any(len(r) != width for r in rows):
        raise ParseError("matrix rows must be non-empty and of equal length")
    return PolyMatrix([[parse_polynomial(s, ring) for s in r] for r in rows], ring)

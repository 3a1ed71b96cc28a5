"""Expression grammar shared by the library and the command line.

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*        # '/' only by a scalar
    unary  := ('-' | '+') unary | power
    power  := atom ('^' INT)?
    atom   := INT | 'x' INT | 's' | '(' expr ')'

``s`` is the adjoined square root of a Q(sqrt d) field.  Juxtaposition is a
syntax error.  In the associative kind ``*`` does not commute.
"""

from __future__ import annotations

import re

from .freealg import Algebra, Element
from .scalars import Field, Scalar

__all__ = ["ParseError", "parse_expression", "parse_scalar", "tokenize"]


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", pos: int = 0):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}" + (f" in {text!r}" if text else ""))


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>x\d+)|(?P<root>s)|(?P<op>[-+*/^()]))")


def tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", text, start)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, alg: Algebra):
        self.text = text
        self.alg = alg
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def error(self, msg: str, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2])

    def expect_op(self, op: str):
        t = self.take()
        if t[0] != "op" or t[1] != op:
            self.error(f"expected {op!r}", t)

    def parse(self) -> Element:
        if self.peek()[0] == "end":
            self.error("empty expression")
        e = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected token {self.peek()[1]!r}")
        return e

    def expr(self) -> Element:
        e = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            t = self.term()
            e = e + t if op == "+" else e - t
        return e

    def term(self) -> Element:
        e = self.unary()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "*/":
                self.take()
                rhs = self.unary()
                if t[1] == "*":
                    e = e * rhs
                else:
                    if not rhs.is_scalar():
                        self.error("division by a non-scalar", t)
                    if rhs.is_zero():
                        self.error("division by zero", t)
                    e = e.scale(rhs.to_scalar().inverse())
            elif t[0] in ("int", "var", "root") or (t[0] == "op" and t[1] == "("):
                self.error("juxtaposition is not allowed; use '*'")
            else:
                return e

    def unary(self) -> Element:
        t = self.peek()
        if t[0] == "op" and t[1] in "+-":
            self.take()
            e = self.unary()
            return -e if t[1] == "-" else e
        return self.power()

    def power(self) -> Element:
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            t = self.take()
            if t[0] != "int":
                self.error("exponent must be a nonnegative integer", t)
            return base ** int(t[1])
        return base

    def atom(self) -> Element:
        t = self.take()
        kind, val, pos = t
        if kind == "int":
            return self.alg.scalar(int(val))
        if kind == "var":
            i = int(val[1:])
            if not 1 <= i <= self.alg.n:
                raise ParseError(f"unknown variable {val!r} (n={self.alg.n})", self.text, pos)
            return self.alg.x(i)
        if kind == "root":
            if self.alg.field.d is None:
                raise ParseError("'s' (square root) is not available over Q", self.text, pos)
            return self.alg.scalar(self.alg.field.sqrt())
        if kind == "op" and val == "(":
            e = self.expr()
            self.expect_op(")")
            return e
        if kind == "end":
            self.error("unexpected end of input", t)
        self.error(f"unexpected token {val!r}", t)


def parse_expression(text: str, alg: Algebra) -> Element:
    """Parse ``text`` into a canonical element of ``alg``."""
    return _Parser(text, alg).parse()


def parse_scalar(text: str, field: Field) -> Scalar:
    """Parse a scalar such as ``-3/4`` or ``1/2+3*s``."""
    from .freealg import Kind

    e = parse_expression(text, Algebra(Kind.COMMUTATIVE, 1, field))
    if not e.is_scalar():
        raise ParseError(f"not a scalar: {text!r}", text, 0)
    return e.to_scalar()

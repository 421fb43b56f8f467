"""Text and JSON forms of field elements, ring elements, skew polynomials and
polynomial matrices.

Grammar accepted by the parsers (whitespace is ignored)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (['*'] factor)*
    factor := atom ['^' integer]
    atom   := integer | 'x' | 'z' | 'a' | 'e' integer | '(' expr ')'

An integer atom is a field element given by its encoding, ``a`` is the class
of the modulus variable and ``e3`` is the third primitive idempotent.
"""
from __future__ import annotations

import re

from . import poly as P
from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|(e\d+)|([xza])|([-+*^()]))")


def _tokenize(text: str):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match:
            while text[pos].isspace():
                pos += 1
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = match.start(match.lastindex)
        kind = ("num", "idem", "var", "op")[match.lastindex - 1]
        out.append((kind, match.group(match.lastindex), start))
        pos = match.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, algebra):
        self.tokens = _tokenize(text)
        self.idx = 0
        self.alg = algebra

    def peek(self):
        return self.tokens[self.idx]

    def take(self):
        tok = self.tokens[self.idx]
        self.idx += 1
        return tok

    def expect(self, value: str):
        tok = self.take()
        if tok[1] != value:
            raise ParseError(f"expected {value!r}", tok[2])

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return value

    def expr(self):
        sign = None
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = self.take()[1]
        value = self.term()
        if sign == "-":
            value = self.alg.neg(value)
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            value = self.alg.add(value, rhs) if op == "+" else self.alg.sub(value, rhs)
        return value

    def term(self):
        value = self.factor()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.take()
            elif not (tok[0] in ("num", "idem", "var") or tok[1] == "("):
                return value
            value = self.alg.mul(value, self.factor())

    def factor(self):
        value = self.atom()
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            self.take()
            tok = self.take()
            if tok[0] != "num":
                raise ParseError("exponent must be a nonnegative integer", tok[2])
            value = self.alg.pow(value, int(tok[1]))
        return value

    def atom(self):
        kind, text, pos = self.take()
        if kind == "num":
            return self.alg.number(int(text), pos)
        if kind == "idem":
            return self.alg.idempotent(int(text[1:]), pos)
        if kind == "var":
            return self.alg.variable(text, pos)
        if text == "(":
            value = self.expr()
            self.expect(")")
            return value
        raise ParseError(f"unexpected {text or 'end of input'!r}", pos)


class _Algebra:
    """Common evaluation hooks; subclasses supply the atoms."""

    def __init__(self, field):
        self.field = field

    def check_number(self, k: int, pos: int) -> int:
        if k >= self.field.q:
            raise ParseError(f"encoding {k} outside GF({self.field.q})", pos)
        return k

    def pow(self, value, e: int):
        acc = self.one()
        for _ in range(e):
            acc = self.mul(acc, value)
        return acc

    def idempotent(self, k: int, pos: int):
        raise ParseError("idempotents are not allowed here", pos)

    def variable(self, name: str, pos: int):
        if name == "a":
            return self.number(self.field.gen, pos)
        raise ParseError(f"variable {name!r} is not allowed here", pos)


class _SkewAlgebra(_Algebra):
    def __init__(self, ctx):
        super().__init__(ctx.ring.field)
        self.ctx = ctx

    def one(self):
        return self.ctx.one()

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def number(self, k, pos):
        return self.ctx.const(self.ctx.ring.constant(self.check_number(k, pos)))

    def idempotent(self, k, pos):
        if not 1 <= k <= self.ctx.ring.r:
            raise ParseError(f"no idempotent e{k}", pos)
        return self.ctx.const(self.ctx.ring.idempotent(k))

    def variable(self, name, pos):
        if name == "x":
            return self.ctx.const(self.ctx.ring.x)
        if name == "z":
            return self.ctx.z()
        return super().variable(name, pos)


class _RingAlgebra(_Algebra):
    def __init__(self, ring):
        super().__init__(ring.field)
        self.ring = ring

    def one(self):
        return self.ring.one

    def add(self, a, b):
        return self.ring.add(a, b)

    def sub(self, a, b):
        return self.ring.sub(a, b)

    def neg(self, a):
        return self.ring.neg(a)

    def mul(self, a, b):
        return self.ring.mul(a, b)

    def number(self, k, pos):
        return self.ring.constant(self.check_number(k, pos))

    def idempotent(self, k, pos):
        if not 1 <= k <= self.ring.r:
            raise ParseError(f"no idempotent e{k}", pos)
        return self.ring.idempotent(k)

    def variable(self, name, pos):
        if name == "x":
            return self.ring.x
        return super().variable(name, pos)


class _FzAlgebra(_Algebra):
    def one(self):
        return P.ONE

    def add(self, a, b):
        return P.add(self.field, a, b)

    def sub(self, a, b):
        return P.sub(self.field, a, b)

    def neg(self, a):
        return P.neg(self.field, a)

    def mul(self, a, b):
        return P.mul(self.field, a, b)

    def number(self, k, pos):
        return P.const(self.check_number(k, pos))

    def variable(self, name, pos):
        if name == "z":
            return P.VAR
        return super().variable(name, pos)


def parse_poly(text: str, ctx):
    """Parse a skew polynomial in x and z over the given context."""
    return _Parser(text, _SkewAlgebra(ctx)).parse()


def parse_ring(text: str, ring):
    """Parse an element of A (no z allowed)."""
    return _Parser(text, _RingAlgebra(ring)).parse()


def parse_fz(text: str, field):
    """Parse a polynomial in z over the field."""
    return _Parser(text, _FzAlgebra(field)).parse()


# printing

def format_field(field, c: int) -> str:
    if c < field.p:
        return str(c)
    k = field.gen_log(c)
    if k is None:
        return str(c)
    return "a" if k == 1 else f"a^{k}"


def _format_sum(field, coeffs, var: str) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        cs = format_field(field, c)
        if i == 0:
            parts.append(cs)
            continue
        power = var if i == 1 else f"{var}^{i}"
        parts.append(power if c == 1 else f"{cs}*{power}")
    return " + ".join(parts) if parts else "0"


def format_ring(ring, a) -> str:
    return _format_sum(ring.field, a, "x")


def format_fz(field, f) -> str:
    return _format_sum(field, f, "z")


def format_skew(g) -> str:
    ring = g.ctx.ring
    parts = []
    for nu, c in enumerate(g.coeffs):
        if not any(c):
            continue
        text = format_ring(ring, c)
        if nu == 0:
            parts.append(text)
            continue
        power = "z" if nu == 1 else f"z^{nu}"
        if c == ring.one:
            parts.append(power)
        elif sum(1 for v in c if v) == 1:
            parts.append(f"{power}*{text}")
        else:
            parts.append(f"{power}*({text})")
    return " + ".join(parts) if parts else "0"


def format_matrix(matrix) -> list[list[str]]:
    return [[format_fz(matrix.field, e) for e in row] for row in matrix.rows]


# JSON forms

def skew_to_json(g) -> list[list[int]]:
    return [list(c) for c in g.coeffs]


def skew_from_json(data, ctx):
    return ctx.poly([tuple(c) for c in data])


def matrix_to_json(matrix) -> list[list[list[int]]]:
    return [[list(e) for e in row] for row in matrix.rows]

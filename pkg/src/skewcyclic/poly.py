"""Univariate polynomials over a :class:`~skewcyclic.galois.GF`.

A polynomial is a tuple of field encodings, low degree first, with no
trailing zeros; the zero polynomial is ``()`` and has degree -1.
"""
from __future__ import annotations

from .errors import DivisionByZero

ZERO: tuple[int, ...] = ()
ONE: tuple[int, ...] = (1,)
VAR: tuple[int, ...] = (0, 1)


def trim(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def deg(f) -> int:
    return len(f) - 1


def lead(f) -> int:
    return f[-1] if f else 0


def const(c: int) -> tuple[int, ...]:
    return (c,) if c else ()


def monomial(c: int, k: int) -> tuple[int, ...]:
    return (0,) * k + (c,) if c else ()


def add(F, f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = F.add(out[i], c)
    return trim(out)


def neg(F, f):
    return tuple(F.neg(c) for c in f)


def sub(F, f, g):
    out = list(f) + [0] * max(0, len(g) - len(f))
    for i, c in enumerate(g):
        out[i] = F.sub(out[i], c)
    return trim(out)


def scale(F, c: int, f):
    if c == 0:
        return ()
    return tuple(F.mul(c, a) for a in f)


def shift(f, k: int):
    return (0,) * k + tuple(f) if f else ()


def mul(F, f, g):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    fmul, fadd = F.mul, F.add
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = fadd(out[i + j], fmul(a, b))
    return trim(out)


def divmod_(F, f, g):
    if not g:
        raise DivisionByZero("polynomial division by zero")
    if len(f) < len(g):
        return (), tuple(f)
    rem = list(f)
    inv_lead = F.inv(g[-1])
    quot = [0] * (len(f) - len(g) + 1)
    for k in range(len(f) - len(g), -1, -1):
        c = F.mul(rem[k + len(g) - 1], inv_lead)
        quot[k] = c
        if c:
            for i, b in enumerate(g):
                rem[k + i] = F.sub(rem[k + i], F.mul(c, b))
    return trim(quot), trim(rem[: len(g) - 1])


def mod(F, f, g):
    return divmod_(F, f, g)[1]


def divides(F, g, f) -> bool:
    return not mod(F, f, g)


def monic(F, f):
    if not f:
        return ()
    return scale(F, F.inv(f[-1]), f)


def gcd(F, f, g):
    """Monic greatest common divisor (zero if both are zero)."""
    while g:
        f, g = g, mod(F, f, g)
    return monic(F, f)


def xgcd(F, f, g):
    """Return (d, s, t) with s f + t g = d and d monic."""
    r0, r1 = tuple(f), tuple(g)
    s0, s1 = ONE, ()
    t0, t1 = (), ONE
    while r1:
        quo, rem = divmod_(F, r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, sub(F, s0, mul(F, quo, s1))
        t0, t1 = t1, sub(F, t0, mul(F, quo, t1))
    if not r0:
        return (), (), ()
    inv = F.inv(r0[-1])
    return scale(F, inv, r0), scale(F, inv, s0), scale(F, inv, t0)


def inverse_mod(F, f, m):
    d, s, _ = xgcd(F, mod(F, f, m), m)
    if d != ONE:
        raise DivisionByZero("not invertible modulo the given polynomial")
    return mod(F, s, m)


def mulmod(F, f, g, m):
    return mod(F, mul(F, f, g), m)


def powmod(F, f, e: int, m):
    acc = mod(F, ONE, m)
    base = mod(F, f, m)
    while e:
        if e & 1:
            acc = mulmod(F, acc, base, m)
        base = mulmod(F, base, base, m)
        e >>= 1
    return acc


def evaluate(F, f, x: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = F.add(F.mul(acc, x), c)
    return acc


def product(F, polys):
    acc = ONE
    for f in polys:
        acc = mul(F, acc, f)
    return acc


def encode(F, f) -> int:
    """Integer code of f read as digits base q, used for canonical ordering."""
    enc = 0
    for c in reversed(f):
        enc = enc * F.q + c
    return enc


def decode(F, enc: int):
    out = []
    while enc:
        enc, r = divmod(enc, F.q)
        out.append(r)
    return tuple(out)

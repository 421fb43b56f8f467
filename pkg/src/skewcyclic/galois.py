"""Finite fields GF(p^m).

An element c_0 + c_1 t + ... + c_{m-1} t^{m-1}, where t is the class of the
modulus variable, is encoded as the integer sum c_i p^i.  All higher layers
work on these integer encodings; :class:`FieldElement` is a thin wrapper for
interactive use.  Multiplication goes through exp/log tables.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import (
    DegreeMismatch,
    DivisionByZero,
    FieldTooLarge,
    NotPrime,
    ReducibleModulus,
)

MAX_FIELD_SIZE = 1 << 16


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# Polynomials over the prime field, as lists of residues low-to-high.  Only
# used while validating a modulus and building tables.

def _pf_trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _pf_divmod(f: list[int], g: list[int], p: int) -> tuple[list[int], list[int]]:
    f = list(f)
    inv_lead = pow(g[-1], p - 2, p)
    quot = [0] * max(len(f) - len(g) + 1, 0)
    for shift in range(len(f) - len(g), -1, -1):
        c = f[shift + len(g) - 1] * inv_lead % p
        quot[shift] = c
        if c:
            for i, gi in enumerate(g):
                f[shift + i] = (f[shift + i] - c * gi) % p
    return _pf_trim(quot), _pf_trim(f[: len(g) - 1])


def _pf_mulmod(f: list[int], g: list[int], mod: list[int], p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _pf_divmod(_pf_trim(out), mod, p)[1]


def _pf_gcd(f: list[int], g: list[int], p: int) -> list[int]:
    f, g = _pf_trim(list(f)), _pf_trim(list(g))
    while g:
        f, g = g, _pf_divmod(f, g, p)[1]
    return f


def is_irreducible_mod_p(modulus: tuple[int, ...], p: int) -> bool:
    """Ben-Or test: a monic f of degree m is irreducible iff
    gcd(f, t^(p^i) - t) = 1 for every i <= m/2."""
    f = [c % p for c in modulus]
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    power = [0, 1]
    for _ in range(m // 2):
        base, acc, e = power, [1], p
        while e:
            if e & 1:
                acc = _pf_mulmod(acc, base, f, p)
            base = _pf_mulmod(base, base, f, p)
            e >>= 1
        power = acc
        diff = list(power) + [0] * max(0, 2 - len(power))
        diff[1] = (diff[1] - 1) % p
        if len(_pf_gcd(f, _pf_trim(diff), p)) > 1:
            return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Monic irreducible of degree m with the lexicographically smallest
    low-to-high coefficient tuple."""
    for tail in product(range(p), repeat=m):
        cand = tuple(tail) + (1,)
        if is_irreducible_mod_p(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")


class GF:
    """GF(p^m) acting on integer encodings.  Build instances with
    :func:`build_field`, which caches them."""

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = tuple(modulus)
        self._digits = [self._to_digits(a) for a in range(self.q)]
        if self.q * self.q <= 1 << 20 and p != 2:
            self._add_table = [
                [self._slow_add(a, b) for b in range(self.q)] for a in range(self.q)
            ]
        else:
            self._add_table = None
        self._neg = [self._from_digits([(-c) % p for c in d]) for d in self._digits]
        self.primitive = self._find_primitive()
        self._exp = [0] * (2 * (self.q - 1))
        self._log = [0] * self.q
        acc = 1
        for k in range(self.q - 1):
            self._exp[k] = acc
            self._log[acc] = k
            acc = self._slow_mul(acc, self.primitive)
        for k in range(self.q - 1, 2 * (self.q - 1)):
            self._exp[k] = self._exp[k - (self.q - 1)]
        # The generator a is the class of t.
        self.gen = self._from_digits(self._reduce([0, 1]))
        self._gen_log = {}
        if self.gen:
            acc = 1
            for k in range(self.q - 1):
                self._gen_log.setdefault(acc, k)
                acc = self.mul(acc, self.gen)

    # construction helpers

    def _to_digits(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.p)
            out.append(r)
        return tuple(out)

    def _from_digits(self, coeffs) -> int:
        enc = 0
        for c in reversed(list(coeffs)):
            enc = enc * self.p + c
        return enc

    def _reduce(self, coeffs: list[int]) -> list[int]:
        f = [c % self.p for c in coeffs] + [0] * max(0, self.m - len(coeffs))
        for top in range(len(f) - 1, self.m - 1, -1):
            c = f[top]
            if c:
                for i, mi in enumerate(self.modulus):
                    f[top - self.m + i] = (f[top - self.m + i] - c * mi) % self.p
        return f[: self.m]

    def _slow_add(self, a: int, b: int) -> int:
        return self._from_digits(
            (x + y) % self.p for x, y in zip(self._digits[a], self._digits[b])
        )

    def _slow_mul(self, a: int, b: int) -> int:
        da, db = self._digits[a], self._digits[b]
        out = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    out[i + j] += x * y
        return self._from_digits(self._reduce(out))

    def _slow_pow(self, a: int, e: int) -> int:
        acc = 1
        while e:
            if e & 1:
                acc = self._slow_mul(acc, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return acc

    def _find_primitive(self) -> int:
        if self.q == 2:
            return 1
        order = self.q - 1
        factors = _prime_factors(order)
        for g in range(2, self.q):
            if all(self._slow_pow(g, order // f) != 1 for f in factors):
                return g
        raise AssertionError("multiplicative group has no generator")

    # arithmetic on encodings

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._slow_add(a, b)

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def frobenius(self, a: int, k: int = 1) -> int:
        return self.pow(a, self.p ** (k % self.m))

    def from_int(self, k: int) -> int:
        """Image of the integer k under Z -> GF(p^m)."""
        return k % self.p

    def coeffs(self, a: int) -> tuple[int, ...]:
        return self._digits[a]

    def encode(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.m:
            raise DegreeMismatch(f"expected at most {self.m} coefficients")
        return self._from_digits(c % self.p for c in coeffs)

    def gen_log(self, a: int) -> int | None:
        """Smallest k >= 0 with a = gen^k, or None if a is not a power of gen."""
        return self._gen_log.get(a)

    def element(self, value) -> FieldElement:
        if isinstance(value, int):
            if not 0 <= value < self.q:
                raise DegreeMismatch(f"encoding {value} outside GF({self.q})")
            return FieldElement(self, self._digits[value])
        return FieldElement(self, self._digits[self.encode(value)])

    def elements(self) -> range:
        return range(self.q)

    # identity

    @property
    def key(self) -> tuple:
        return (self.p, self.m, self.modulus)

    def __eq__(self, other) -> bool:
        return isinstance(other, GF) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m}, modulus={self.modulus})"


@lru_cache(maxsize=None)
def _cached_field(p: int, m: int, modulus: tuple[int, ...]) -> GF:
    return GF(p, m, modulus)


def build_field(p: int, m: int = 1, modulus=None) -> GF:
    """Validate (p, m, modulus) and return the field.  Without a modulus the
    smallest monic irreducible of degree m is used."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise DegreeMismatch("extension degree must be positive")
    if p**m > MAX_FIELD_SIZE:
        raise FieldTooLarge(f"GF({p}^{m}) exceeds {MAX_FIELD_SIZE} elements")
    if modulus is None:
        modulus = smallest_irreducible(p, m)
    else:
        modulus = tuple(int(c) % p for c in modulus)
        while len(modulus) > 1 and modulus[-1] == 0:
            modulus = modulus[:-1]
        if len(modulus) - 1 != m:
            raise DegreeMismatch(f"modulus has degree {len(modulus) - 1}, expected {m}")
        if modulus[-1] != 1:
            raise DegreeMismatch("modulus must be monic")
        if not is_irreducible_mod_p(modulus, p):
            raise ReducibleModulus(f"{modulus} is reducible over GF({p})")
    return _cached_field(p, m, modulus)


@dataclass(frozen=True)
class FieldElement:
    field: GF
    coeffs: tuple[int, ...]

    @property
    def enc(self) -> int:
        return self.field.encode(self.coeffs)

    def _wrap(self, enc: int) -> FieldElement:
        return self.field.element(enc)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise DegreeMismatch("elements of different fields")
            return other.enc
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.add(self.enc, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(self.enc, b))

    def __rsub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(b, self.enc))

    def __mul__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.mul(self.enc, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.div(self.enc, b))

    def __neg__(self):
        return self._wrap(self.field.neg(self.enc))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.enc, e))

    def inverse(self) -> FieldElement:
        return self._wrap(self.field.inv(self.enc))

    def frobenius(self, k: int = 1) -> FieldElement:
        return self._wrap(self.field.frobenius(self.enc, k))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __repr__(self) -> str:
        return f"FieldElement({self.enc})"


_BINARY = {"add": "add", "sub": "sub", "mul": "mul", "div": "div"}


def field_arith(field: GF, op: str, a: int, b: int | None = None) -> int:
    """Dispatch a named operation on encodings: add, sub, mul, div, neg,
    inv, pow (b is the exponent) and frobenius (b is the power of p)."""
    if op in _BINARY:
        return getattr(field, op)(a, b)
    if op == "neg":
        return field.neg(a)
    if op == "inv":
        return field.inv(a)
    if op == "pow":
        return field.pow(a, b)
    if op == "frobenius":
        return field.frobenius(a, 1 if b is None else b)
    raise ValueError(f"unknown field operation {op!r}")


def matrix_rank(field: GF, rows) -> int:
    """Rank over the field of a matrix given as rows of encodings."""
    work = [list(r) for r in rows]
    rank = 0
    ncols = len(work[0]) if work else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(work)) if work[i][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = field.inv(work[rank][col])
        work[rank] = [field.mul(inv, c) for c in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][col]:
                c = work[i][col]
                work[i] = [field.sub(x, field.mul(c, y)) for x, y in zip(work[i], work[rank])]
        rank += 1
    return rank

"""The ring A = F[x]/(x^n - 1) for gcd(n, char F) = 1, its CRT decomposition
into component fields F[x]/(pi_k), and its F-algebra automorphisms.

Ring elements are n-tuples of field encodings (coefficients of 1, x, ...,
x^{n-1}).  Component indices in the public API are 1-based.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations, product
from math import factorial, gcd as int_gcd

from . import poly as P
from .errors import (
    CharDividesN,
    ContextMismatch,
    DegreeOutOfRange,
    LengthMismatch,
    NotAUnit,
    NotAnAutomorphism,
)
from .galois import GF, matrix_rank


# Factorization of squarefree polynomials

def _distinct_degree(F: GF, f):
    """Split a monic squarefree f into (product of all degree-d factors, d)."""
    out = []
    rest = f
    h = P.VAR
    d = 1
    while P.deg(rest) >= 2 * d:
        h = P.powmod(F, h, F.q, rest)
        g = P.gcd(F, rest, P.sub(F, h, P.VAR))
        if P.deg(g) > 0:
            out.append((g, d))
            rest = P.divmod_(F, rest, g)[0]
            h = P.mod(F, h, rest)
        d += 1
    if P.deg(rest) > 0:
        out.append((rest, P.deg(rest)))
    return out


def _splitting_polynomial(F: GF, t, g, d: int):
    if F.p == 2:
        # absolute trace from GF(2^{m d}) to GF(2)
        acc, term = (), P.mod(F, t, g)
        for _ in range(F.m * d):
            acc = P.add(F, acc, term)
            term = P.mulmod(F, term, term, g)
        return acc
    return P.sub(F, P.powmod(F, t, (F.q**d - 1) // 2, g), P.ONE)


def _equal_degree(F: GF, g, d: int):
    if P.deg(g) == d:
        return [g]
    if d == 1:
        return [(F.neg(c), 1) for c in F.elements() if P.evaluate(F, g, c) == 0]
    enc = F.q
    while True:
        t = P.decode(F, enc)
        enc += 1
        if P.deg(t) >= 2 * d:
            raise AssertionError("equal-degree splitting exhausted its candidates")
        h = P.gcd(F, g, _splitting_polynomial(F, t, g, d))
        if 0 < P.deg(h) < P.deg(g):
            return _equal_degree(F, h, d) + _equal_degree(F, P.divmod_(F, g, h)[0], d)


def factor_squarefree(F: GF, f):
    """Monic irreducible factors of a monic squarefree f, sorted by degree
    then by coefficient tuple."""
    factors = []
    for g, d in _distinct_degree(F, P.monic(F, f)):
        factors.extend(_equal_degree(F, g, d))
    return sorted(factors, key=lambda h: (len(h), tuple(h)))


# The ring

class RingContext:
    """A = F[x]/(x^n - 1) together with its CRT data."""

    def __init__(self, field: GF, n: int):
        if n < 1:
            raise LengthMismatch("n must be positive")
        if int_gcd(n, field.p) != 1:
            raise CharDividesN(f"characteristic {field.p} divides n = {n}")
        self.field = field
        self.n = n
        self.cyclic_modulus = (field.neg(1),) + (0,) * (n - 1) + (1,)
        self.factors = tuple(factor_squarefree(field, self.cyclic_modulus))
        self.degrees = tuple(P.deg(f) for f in self.factors)
        self.r = len(self.factors)
        self.zero = (0,) * n
        self.one = (1,) + (0,) * (n - 1)
        self.x = self.from_poly(P.VAR)
        idems = []
        for pk in self.factors:
            cofactor = P.divmod_(field, self.cyclic_modulus, pk)[0]
            s = P.inverse_mod(field, cofactor, pk)
            idems.append(self.from_poly(P.mul(field, s, cofactor)))
        self.idempotents = tuple(idems)

    # identity

    @property
    def key(self) -> tuple:
        return (self.field.key, self.n)

    def __eq__(self, other) -> bool:
        return isinstance(other, RingContext) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"RingContext(GF({self.field.q}), n={self.n})"

    def to_json(self) -> dict:
        return {
            "p": self.field.p,
            "m": self.field.m,
            "modulus": list(self.field.modulus),
            "n": self.n,
        }

    # element conversion

    def from_poly(self, f) -> tuple[int, ...]:
        out = [0] * self.n
        for i, c in enumerate(f):
            out[i % self.n] = self.field.add(out[i % self.n], c)
        return tuple(out)

    def to_poly(self, a) -> tuple[int, ...]:
        return P.trim(a)

    def element(self, coeffs) -> tuple[int, ...]:
        coeffs = tuple(coeffs)
        if len(coeffs) != self.n:
            raise LengthMismatch(f"ring element needs {self.n} coefficients")
        return coeffs

    def constant(self, c: int) -> tuple[int, ...]:
        return (c,) + (0,) * (self.n - 1)

    def monomial(self, c: int, k: int) -> tuple[int, ...]:
        out = [0] * self.n
        out[k % self.n] = c
        return tuple(out)

    # arithmetic

    def add(self, a, b):
        F = self.field
        return tuple(F.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        F = self.field
        return tuple(F.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.field.neg(x) for x in a)

    def scale(self, c: int, a):
        return tuple(self.field.mul(c, x) for x in a)

    def mul(self, a, b):
        F, n = self.field, self.n
        out = [0] * n
        fmul, fadd = F.mul, F.add
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        k = i + j
                        if k >= n:
                            k -= n
                        out[k] = fadd(out[k], fmul(x, y))
        return tuple(out)

    def pow(self, a, e: int):
        acc, base = self.one, a
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def theta(self, a):
        """g(x) -> g(x^{n-1}); an involutive automorphism of A."""
        return (a[0],) + tuple(reversed(a[1:]))

    # CRT

    def residue(self, a, k: int):
        """Residue of a modulo pi_k (k is 1-based)."""
        return P.mod(self.field, P.trim(a), self.factors[k - 1])

    def crt_forward(self, a) -> list[tuple[int, ...]]:
        a = P.trim(a)
        return [P.mod(self.field, a, pk) for pk in self.factors]

    def crt_inverse(self, residues) -> tuple[int, ...]:
        if len(residues) != self.r:
            raise LengthMismatch(f"expected {self.r} residues")
        acc = self.zero
        for res, pk, ek in zip(residues, self.factors, self.idempotents):
            res = P.trim(res)
            if P.deg(res) >= P.deg(pk):
                raise DegreeOutOfRange("residue degree must be below deg pi_k")
            if res:
                acc = self.add(acc, self.mul(self.from_poly(res), ek))
        return acc

    def idempotent(self, k: int):
        return self.idempotents[k - 1]

    def component_part(self, a, k: int):
        """e_k a."""
        return self.mul(self.idempotents[k - 1], a)

    def in_component(self, k: int, residue):
        """The element of A whose only nonzero CRT residue is ``residue`` at k."""
        res = [()] * self.r
        res[k - 1] = P.trim(residue)
        return self.crt_inverse(res)

    def support(self, a) -> frozenset[int]:
        return frozenset(k + 1 for k, res in enumerate(self.crt_forward(a)) if res)

    # component fields K_k = F[x]/(pi_k)

    def comp_mul(self, k: int, u, v):
        return P.mulmod(self.field, u, v, self.factors[k - 1])

    def comp_inv(self, k: int, u):
        if not u:
            raise NotAUnit(f"zero has no inverse in component {k}")
        return P.inverse_mod(self.field, u, self.factors[k - 1])

    def comp_pow(self, k: int, u, e: int):
        return P.powmod(self.field, u, e, self.factors[k - 1])

    def comp_elements(self, k: int):
        size = self.field.q ** self.degrees[k - 1]
        return (P.decode(self.field, enc) for enc in range(size))

    def roots_in_component(self, f, k: int) -> list:
        """Roots of f in K_k, sorted by encoding."""
        out = []
        for u in self.comp_elements(k):
            acc = ()
            for c in reversed(f):
                acc = P.add(self.field, self.comp_mul(k, acc, u), P.const(c))
            if not acc:
                out.append(u)
        return out

    # units

    def is_unit(self, a) -> bool:
        return all(self.crt_forward(a))

    def unit_inverse(self, a):
        residues = self.crt_forward(a)
        if not all(residues):
            raise NotAUnit("element has a zero CRT component")
        return self.crt_inverse(
            [self.comp_inv(k + 1, res) for k, res in enumerate(residues)]
        )

    def component_inverse(self, a, k: int):
        """Inverse of e_k a inside e_k A (whose identity is e_k)."""
        res = self.residue(a, k)
        return self.in_component(k, self.comp_inv(k, res))

    # automorphisms

    @cached_property
    def automorphisms(self) -> tuple[Automorphism, ...]:
        return tuple(_enumerate_automorphisms(self))

    @property
    def identity(self) -> Automorphism:
        return Automorphism(self, self.x)

    def automorphism(self, image) -> Automorphism:
        """Automorphism with sigma(x) = image, after checking image qualifies."""
        image = self.element(image)
        if not is_automorphism_image(self, image):
            raise NotAnAutomorphism("image does not define an automorphism")
        return Automorphism(self, image)


_RINGS: dict = {}


def build_ring(field: GF, n: int) -> RingContext:
    key = (field.key, n)
    if key not in _RINGS:
        _RINGS[key] = RingContext(field, n)
    return _RINGS[key]


def crt_forward(ring: RingContext, a):
    return ring.crt_forward(a)


def crt_inverse(ring: RingContext, residues):
    return ring.crt_inverse(residues)


def theta(ring: RingContext, a):
    return ring.theta(a)


def is_unit(ring: RingContext, a) -> bool:
    return ring.is_unit(a)


def unit_inverse(ring: RingContext, a):
    return ring.unit_inverse(a)


def is_automorphism_image(ring: RingContext, a) -> bool:
    """a = sigma(x) for an automorphism sigma iff a^n = 1 and the powers
    1, a, ..., a^{n-1} are linearly independent over F."""
    if ring.pow(a, ring.n) != ring.one:
        return False
    rows, acc = [], ring.one
    for _ in range(ring.n):
        rows.append(acc)
        acc = ring.mul(acc, a)
    return matrix_rank(ring.field, rows) == ring.n


def automorphism_count(ring: RingContext) -> int:
    """prod over degree classes of (deg)^{size} * size!."""
    classes: dict[int, int] = {}
    for d in ring.degrees:
        classes[d] = classes.get(d, 0) + 1
    total = 1
    for d, size in classes.items():
        total *= d**size * factorial(size)
    return total


def _enumerate_automorphisms(ring: RingContext):
    F = ring.field
    classes: dict[int, list[int]] = {}
    for k, d in enumerate(ring.degrees, start=1):
        classes.setdefault(d, []).append(k)
    groups = [classes[d] for d in sorted(classes)]
    # K_i -> K_j sends x to the smallest root of pi_i in K_j
    base_root = {}
    for group in groups:
        for i in group:
            for j in group:
                base_root[i, j] = ring.roots_in_component(ring.factors[i - 1], j)[0]
    for choice in product(*(permutations(g) for g in groups)):
        target = {}
        for group, image in zip(groups, choice):
            target.update(zip(group, image))
        for frob in product(*(range(d) for d in ring.degrees)):
            residues = [()] * ring.r
            for k in range(1, ring.r + 1):
                j = target[k]
                root = base_root[k, j]
                residues[j - 1] = ring.comp_pow(j, root, F.q ** frob[k - 1])
            yield Automorphism(ring, ring.crt_inverse(residues))


def enumerate_automorphisms(ring: RingContext) -> list[Automorphism]:
    return list(ring.automorphisms)


@dataclass(frozen=True, eq=False)
class Automorphism:
    """An F-algebra automorphism of A, determined by the image of x."""

    ring: RingContext
    image: tuple[int, ...]
    _cache: dict = field(default_factory=dict, repr=False)

    @cached_property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        """sigma(x^i) for i = 0..n-1."""
        out, acc = [], self.ring.one
        for _ in range(self.ring.n):
            out.append(acc)
            acc = self.ring.mul(acc, self.image)
        return tuple(out)

    def apply(self, a):
        F, n = self.ring.field, self.ring.n
        out = [0] * n
        for c, row in zip(a, self.rows):
            if c:
                for j, y in enumerate(row):
                    if y:
                        out[j] = F.add(out[j], F.mul(c, y))
        return tuple(out)

    __call__ = apply

    def _check(self, other: Automorphism):
        if other.ring != self.ring:
            raise ContextMismatch("automorphisms of different rings")

    def compose(self, other: Automorphism) -> Automorphism:
        """self o other, i.e. x -> self(other(x))."""
        self._check(other)
        return Automorphism(self.ring, self.apply(other.image))

    def __matmul__(self, other: Automorphism) -> Automorphism:
        return self.compose(other)

    @cached_property
    def order(self) -> int:
        k, acc = 1, self.image
        while acc != self.ring.x:
            acc = self.apply(acc)
            k += 1
        return k

    def power(self, k: int) -> Automorphism:
        k %= self.order
        if k not in self._cache:
            acc = self.ring.x
            for _ in range(k):
                acc = self.apply(acc)
            self._cache[k] = Automorphism(self.ring, acc)
        return self._cache[k]

    def inverse(self) -> Automorphism:
        return self.power(-1)

    @cached_property
    def component_perm(self) -> tuple[int, ...]:
        """Entry k-1 is the 1-based j with sigma(e_k) = e_j."""
        idems = self.ring.idempotents
        return tuple(idems.index(self.apply(e)) + 1 for e in idems)

    def target(self, k: int) -> int:
        return self.component_perm[k - 1]

    def fixes_all_components(self) -> bool:
        return all(self.target(k) == k for k in range(1, self.ring.r + 1))

    @property
    def is_identity(self) -> bool:
        return self.image == self.ring.x

    def hat(self) -> Automorphism:
        return sigma_hat(self)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Automorphism)
            and self.ring == other.ring
            and self.image == other.image
        )

    def __hash__(self) -> int:
        return hash((self.ring.key, self.image))

    def __repr__(self) -> str:
        return f"Automorphism(x -> {self.image})"


def apply(sigma: Automorphism, a):
    return sigma.apply(a)


def compose(sigma: Automorphism, tau: Automorphism) -> Automorphism:
    return sigma.compose(tau)


def inverse(sigma: Automorphism) -> Automorphism:
    return sigma.inverse()


def power(sigma: Automorphism, k: int) -> Automorphism:
    return sigma.power(k)


def sigma_hat(sigma: Automorphism) -> Automorphism:
    """theta o sigma^{-1} o theta."""
    ring = sigma.ring
    image = ring.theta(sigma.inverse().apply(ring.theta(ring.x)))
    return Automorphism(ring, image)


def fixes_all_components(sigma: Automorphism) -> bool:
    return sigma.fixes_all_components()

"""Shared builders, random generators and brute-force oracles for the tests."""
from __future__ import annotations

from itertools import product

from skewcyclic import poly as P
from skewcyclic.fzlinalg import PolyMatrix
from skewcyclic.galois import build_field
from skewcyclic.ring import build_ring
from skewcyclic.skew import SkewContext
from skewcyclic.textio import parse_poly, parse_ring

GF4 = build_field(2, 2)
ALPHA, ALPHA2 = 2, 3


def ring(q_p=2, m=2, n=5):
    return build_ring(build_field(q_p, m), n)


def context(n: int, sigma: str, p: int = 2, m: int = 2) -> SkewContext:
    R = build_ring(build_field(p, m), n)
    return SkewContext(R, R.automorphism(parse_ring(sigma, R)))


def skew(ctx, text):
    return parse_poly(text, ctx)


CCC1_G = "1 + a*x + a^2*x^2 + z*(1 + x + x^2) + z^2*(1 + a^2*x + a*x^2)"
TAU_G = "1 + a^2*x + a^2*x^2 + x^3 + z*(1 + x + a^2*x^2 + a^2*x^4)"
H_PRIME = "1 + a^2*x + a*x^2 + a*x^3 + a^2*x^4 + z*(a^2*x + a*x^2 + a*x^3 + a^2*x^4)"
H_POLY = "1 + a^2*x + a*x^2 + a*x^3 + a^2*x^4 + z*(a*x + a^2*x^2 + a^2*x^3 + a*x^4)"


# random objects

def rand_ring_elem(rng, R, density=1.0):
    return tuple(rng.randrange(R.field.q) if rng.random() < density else 0 for _ in range(R.n))


def rand_skew(rng, ctx, max_deg=2, density=1.0):
    d = rng.randrange(-1, max_deg + 1)
    return ctx.poly([rand_ring_elem(rng, ctx.ring, density) for _ in range(d + 1)])


def rand_component_poly(rng, ctx, k, max_deg=2):
    """Random element of e_k A[z; sigma]."""
    return rand_skew(rng, ctx, max_deg).component(k)


def rand_fz(rng, F, max_deg=2):
    d = rng.randrange(-1, max_deg + 1)
    return P.trim(rng.randrange(F.q) for _ in range(d + 1))


def rand_matrix(rng, F, nrows, ncols, max_deg=2):
    return PolyMatrix(F, [[rand_fz(rng, F, max_deg) for _ in range(ncols)]
                          for _ in range(nrows)], ncols)


def rand_unimodular(rng, F, size, steps=6):
    """Product of random elementary row operations."""
    rows = [[P.ONE if i == j else () for j in range(size)] for i in range(size)]
    for _ in range(steps):
        i, j = rng.sample(range(size), 2) if size > 1 else (0, 0)
        if i == j or rng.random() < 0.2:
            c = rng.randrange(1, F.q)
            rows[i] = [P.scale(F, c, e) for e in rows[i]]
            continue
        f = rand_fz(rng, F, 2)
        rows[i] = [P.add(F, a, P.mul(F, f, b)) for a, b in zip(rows[i], rows[j])]
    return PolyMatrix(F, rows, size)


# oracles

def schoolbook_field_mul(F, a, b):
    """Multiply encodings by expanding digit polynomials and reducing."""
    da, db = F.coeffs(a), F.coeffs(b)
    out = [0] * (2 * F.m)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            out[i + j] = (out[i + j] + x * y) % F.p
    mod = F.modulus
    for top in range(len(out) - 1, F.m - 1, -1):
        c = out[top]
        if c:
            for i, mi in enumerate(mod):
                out[top - F.m + i] = (out[top - F.m + i] - c * mi) % F.p
    return F.encode(out[: F.m])


def brute_irreducible(F, f) -> bool:
    """No monic factor of degree between 1 and deg f / 2, by trial division."""
    d = P.deg(f)
    if d < 1:
        return False
    for k in range(1, d // 2 + 1):
        for tail in product(range(F.q), repeat=k):
            g = tuple(tail) + (1,)
            if not P.mod(F, f, g):
                return False
    return True


def fraction_free_rank(M: PolyMatrix) -> int:
    """Rank over F(z) by cross-multiplying elimination (no divisions)."""
    F = M.field
    rows = [list(r) for r in M.rows]
    rank = 0
    for c in range(M.ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][c]
        for i in range(rank + 1, len(rows)):
            e = rows[i][c]
            if e:
                rows[i] = [P.sub(F, P.mul(F, p, a), P.mul(F, e, b))
                           for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def leibniz_det(M: PolyMatrix):
    from itertools import permutations

    F = M.field
    n = M.nrows
    total = ()
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = P.ONE
        for i, j in enumerate(perm):
            term = P.mul(F, term, M[i, j])
        if inversions % 2:
            term = P.neg(F, term)
        total = P.add(F, total, term)
    return total


def determinantal_divisors(M: PolyMatrix) -> list:
    """d_k = monic gcd of all k x k minors, by brute force."""
    from itertools import combinations

    F = M.field
    out = []
    for k in range(1, min(M.shape) + 1):
        g = ()
        for rows in combinations(range(M.nrows), k):
            for cols in combinations(range(M.ncols), k):
                sub = PolyMatrix(F, [[M[i, j] for j in cols] for i in rows], k)
                g = P.gcd(F, g, leibniz_det(sub))
        if not g:
            break
        out.append(g)
    return out


def hamming_weight_vec(vec) -> int:
    return sum(sum(1 for c in e if c) for e in vec)


def brute_force_free_distance(G: PolyMatrix, max_deg: int) -> int:
    """Minimum weight of u G over nonzero messages u of degree <= max_deg."""
    F = G.field
    k = G.nrows
    best = None
    coords = k * (max_deg + 1)
    for digits in product(range(F.q), repeat=coords):
        if not any(digits):
            continue
        u = [P.trim(digits[i * (max_deg + 1):(i + 1) * (max_deg + 1)]) for i in range(k)]
        word = (PolyMatrix(F, [u], k) @ G).rows[0]
        w = hamming_weight_vec(word)
        best = w if best is None else min(best, w)
    return best

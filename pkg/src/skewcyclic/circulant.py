"""Vectors in F[z]^n versus skew polynomials, and the circulant matrices that
describe left multiplication by x and by ring elements.

Vectors are rows.  Entry j of a vector is the polynomial in z collecting the
x^j coefficients of the corresponding skew polynomial.
"""
from __future__ import annotations

from . import poly as P
from .errors import LengthMismatch
from .fzlinalg import PolyMatrix
from .ring import Automorphism, RingContext
from .skew import SkewContext, SkewPoly


def vec_to_poly(ctx: SkewContext, v) -> SkewPoly:
    """p(v): the skew polynomial whose z^nu coefficient has x^j coefficient
    equal to the z^nu coefficient of v_j."""
    ring = ctx.ring
    v = [P.trim(e) for e in v]
    if len(v) != ring.n:
        raise LengthMismatch(f"vector must have length {ring.n}")
    depth = max((len(e) for e in v), default=0)
    coeffs = [tuple(e[nu] if nu < len(e) else 0 for e in v) for nu in range(depth)]
    return ctx.poly(coeffs)


def poly_to_vec(f: SkewPoly) -> list:
    """v(f), the inverse of vec_to_poly."""
    n = f.ctx.ring.n
    return [P.trim(c[j] for c in f.coeffs) for j in range(n)]


def classical_circulant(ring: RingContext, a) -> PolyMatrix:
    """M_a: row i is the coefficient vector of x^i a."""
    rows, acc = [], tuple(a)
    for _ in range(ring.n):
        rows.append(acc)
        acc = ring.mul(ring.x, acc)
    return PolyMatrix.constant(ring.field, rows, ring.n)


def shift_matrix(ring: RingContext) -> PolyMatrix:
    return classical_circulant(ring, ring.x)


def p_sigma(sigma: Automorphism) -> PolyMatrix:
    """Row i is the coefficient vector of sigma(x^i)."""
    ring = sigma.ring
    return PolyMatrix.constant(ring.field, sigma.rows, ring.n)


def sigma_circulant(g: SkewPoly) -> PolyMatrix:
    """M^sigma(g): row i is v(x^i g)."""
    ctx = g.ctx
    x = ctx.const(ctx.ring.x)
    rows, acc = [], g
    for _ in range(ctx.ring.n):
        rows.append(poly_to_vec(acc))
        acc = x * acc
    return PolyMatrix(ctx.ring.field, rows, ctx.ring.n)


def sigma_shift(sigma: Automorphism, v) -> list:
    """v(x p(v)) computed in A[z; sigma]."""
    ctx = SkewContext(sigma.ring, sigma)
    f = vec_to_poly(ctx, v)
    return poly_to_vec(ctx.const(ctx.ring.x) * f)


def ideal_module(fs) -> PolyMatrix:
    """Rows of M^sigma(f) for every f in fs; they span v of the left ideal."""
    fs = list(fs)
    ring = fs[0].ctx.ring
    out = PolyMatrix(ring.field, [], ring.n)
    for f in fs:
        out = out.stack(sigma_circulant(f))
    return out

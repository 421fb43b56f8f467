import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from skewcyclic import poly as P
from skewcyclic.circulant import (
    classical_circulant,
    p_sigma,
    poly_to_vec,
    shift_matrix,
    sigma_circulant,
    sigma_shift,
    vec_to_poly,
)
from skewcyclic.errors import LengthMismatch
from skewcyclic.fzlinalg import PolyMatrix, rank
from skewcyclic.ring import sigma_hat
from skewcyclic.skew import SkewContext, hat_skew, pi_of, principal_generator
from skewcyclic.textio import parse_fz

from helpers import CCC1_G, TAU_G, context, rand_ring_elem, rand_skew, skew

N5 = context(5, "x").ring
N3 = context(3, "x").ring
ALL_SIGMAS = [(R, s) for R in (N3, N5) for s in R.automorphisms]


def fz_matrix(F, rows):
    return PolyMatrix(F, [[parse_fz(e, F) for e in row] for row in rows])


def test_vector_polynomial_bridge():
    ctx = context(3, "a^2*x")
    F = ctx.ring.field
    assert vec_to_poly(ctx, [(1,), (), ()]) == ctx.one()
    assert vec_to_poly(ctx, [(1, 1), (2,), ()]) == skew(ctx, "1 + a*x + z")
    v = [parse_fz(t, F) for t in ("1+z+z^2", "a+z+a^2*z^2", "a^2+z+a*z^2")]
    g = skew(ctx, CCC1_G)
    assert vec_to_poly(ctx, v) == g
    assert poly_to_vec(g) == v
    with pytest.raises(LengthMismatch):
        vec_to_poly(ctx, [(1,)])
    with pytest.raises(LengthMismatch):
        sigma_shift(ctx.sigma, [(1,)])


def test_classical_circulant_examples():
    F = N5.field
    assert classical_circulant(N5, N5.one) == PolyMatrix.identity(F, 5)
    S = shift_matrix(N5)
    assert S.rows[0] == ((), P.ONE, (), (), ())
    assert S.rows[4] == (P.ONE, (), (), (), ())


@pytest.mark.parametrize("ring", [N3, N5])
def test_classical_circulant_rank_and_multiplicativity(ring):
    F = ring.field
    rng = random.Random(ring.n)
    xn1 = P.sub(F, P.monomial(1, ring.n), P.ONE)
    S = shift_matrix(ring)
    for _ in range(60):
        a, b = rand_ring_elem(rng, ring, 0.6), rand_ring_elem(rng, ring, 0.6)
        Ma = classical_circulant(ring, a)
        expected = P.deg(P.divmod_(F, xn1, P.gcd(F, ring.to_poly(a), xn1))[0])
        assert rank(Ma) == expected
        assert Ma @ classical_circulant(ring, b) == classical_circulant(ring, ring.mul(a, b))
        assert Ma @ S == S @ Ma
        # a(S) evaluated by Horner
        acc = PolyMatrix.zeros(F, ring.n, ring.n)
        for c in reversed(a):
            acc = acc @ S + PolyMatrix.identity(F, ring.n).scale(P.const(c))
        assert acc == Ma


def test_commutation_characterization():
    ring = N3
    F = ring.field
    S = shift_matrix(ring)
    rng = random.Random(8)
    commuting = 0
    for _ in range(300):
        rows = [[rng.randrange(F.q) for _ in range(3)] for _ in range(3)]
        if rng.random() < 0.3:
            rows = [list(r) for r in classical_circulant(ring, tuple(rows[0])).coefficient(0)]
        M = PolyMatrix.constant(F, rows, 3)
        is_circ = M == classical_circulant(ring, tuple(rows[0]))
        assert (M @ S == S @ M) == is_circ
        commuting += is_circ
    assert commuting > 50


def test_p_sigma_examples():
    ctx = context(3, "a^2*x")
    assert p_sigma(ctx.sigma) == fz_matrix(ctx.ring.field, [["1", "0", "0"], ["0", "a^2", "0"], ["0", "0", "a"]])
    assert p_sigma(N5.identity) == PolyMatrix.identity(N5.field, 5)
    sigma = context(5, "x^2").sigma
    assert sigma_hat(sigma).image == N5.monomial(1, 3)
    assert p_sigma(sigma).transpose() == p_sigma(sigma_hat(sigma))


@pytest.mark.parametrize("ring", [N3, N5])
def test_p_sigma_laws(ring):
    F = ring.field
    rng = random.Random(3)
    for s in ring.automorphisms:
        Ps = p_sigma(s)
        assert Ps @ p_sigma(s.inverse()) == PolyMatrix.identity(F, ring.n)
        assert Ps.transpose() == p_sigma(sigma_hat(s))
        for t in ring.automorphisms:
            assert p_sigma(s @ t) == p_sigma(t) @ Ps
        a = rand_ring_elem(rng, ring)
        assert p_sigma(s.inverse()) @ classical_circulant(ring, a) @ Ps == classical_circulant(ring, s(a))


def test_sigma_circulant_examples():
    ctx = context(3, "a^2*x")
    F = ctx.ring.field
    M = sigma_circulant(skew(ctx, CCC1_G))
    assert M.rows[0] == tuple(parse_fz(t, F) for t in ("1+z+z^2", "a+z+a^2*z^2", "a^2+z+a*z^2"))
    ctx5 = context(5, "x^2")
    M5 = sigma_circulant(skew(ctx5, TAU_G))
    assert M5[0, 0] == (1, 1) and M5[1, 0] == ()
    a = rand_ring_elem(random.Random(1), ctx5.ring)
    assert sigma_circulant(ctx5.const(a)) == classical_circulant(ctx5.ring, a)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(range(len(ALL_SIGMAS))), st.randoms(use_true_random=False))
def test_algebra_isomorphism(idx, rng):
    ring, sigma = ALL_SIGMAS[idx]
    ctx = SkewContext(ring, sigma)
    g, h = rand_skew(rng, ctx), rand_skew(rng, ctx)
    Mg, Mh = sigma_circulant(g), sigma_circulant(h)
    assert sigma_circulant(g + h) == Mg + Mh
    assert sigma_circulant(g * h) == Mg @ Mh
    assert vec_to_poly(ctx, Mg.rows[0]) == g
    # definition as a sum over z-degrees
    F = ring.field
    total = PolyMatrix.zeros(F, ring.n, ring.n)
    Pnu = PolyMatrix.identity(F, ring.n)
    for nu, c in enumerate(g.coeffs):
        term = Pnu @ classical_circulant(ring, c)
        total = total + term.scale(P.monomial(1, nu))
        Pnu = Pnu @ p_sigma(sigma)
    assert total == Mg
    # p(u M(g)) = p(u) g
    u = [P.trim(rng.randrange(F.q) for _ in range(2)) for _ in range(ring.n)]
    assert vec_to_poly(ctx, (PolyMatrix(F, [u], ring.n) @ Mg).rows[0]) == vec_to_poly(ctx, u) * g


@pytest.mark.parametrize("idx", range(len(ALL_SIGMAS)))
def test_transpose_law(idx):
    ring, sigma = ALL_SIGMAS[idx]
    ctx = SkewContext(ring, sigma)
    rng = random.Random(100 + idx)
    for _ in range(15):
        g = rand_skew(rng, ctx, 3)
        assert sigma_circulant(g).transpose() == sigma_circulant(hat_skew(g))


def test_transpose_example():
    g = skew(context(5, "x^2"), TAU_G)
    gh = hat_skew(g)
    assert gh.ctx.sigma.image == N5.monomial(1, 3)
    assert sigma_circulant(g).transpose() == sigma_circulant(gh)


def test_sigma_shift():
    ring = N3
    F = ring.field
    ident = ring.identity
    assert sigma_shift(ident, [(1,), (), ()]) == [(), (1,), ()]
    ctx = context(3, "a^2*x")
    g = skew(ctx, CCC1_G)
    v = poly_to_vec(g)
    assert sigma_shift(ctx.sigma, v) == [P.scale(F, 3, e) for e in v]
    S = shift_matrix(ring)
    rng = random.Random(2)
    for s in ring.automorphisms:
        for _ in range(10):
            w = [(rng.randrange(F.q),) for _ in range(3)]
            shifted = (PolyMatrix(F, [w], 3) @ S).rows[0]
            assert sigma_shift(s, w) == [P.trim(e) for e in shifted]


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([(5, "x^2"), (5, "x^3"), (3, "a^2*x"), (3, "x^2")]), st.randoms(use_true_random=False))
def test_rank_theorem(case, rng):
    ctx = context(*case)
    fs = [rand_skew(rng, ctx, 2, density=0.5) for _ in range(rng.randrange(1, 3))]
    if not any(fs):
        return
    outcome = principal_generator(fs)
    if not outcome.is_principal:
        return
    g = outcome.generator
    M = sigma_circulant(g)
    kappa = P.deg(pi_of(g))
    assert rank(M) == kappa
    assert rank(M.take_rows(range(kappa))) == kappa


def test_saturation_by_row_zero():
    ctx = context(5, "x^2")
    rng = random.Random(12)
    for _ in range(50):
        g, h = rand_skew(rng, ctx), rand_skew(rng, ctx)
        f = h * g
        Q = sigma_circulant(h)
        assert sigma_circulant(f) == Q @ sigma_circulant(g)
        assert vec_to_poly(ctx, Q.rows[0]) * g == f


def test_kernel_transfer_exhaustive_constants():
    ctx = context(5, "x^2")
    f = skew(ctx, TAU_G)
    Mf = sigma_circulant(f)
    F = ctx.ring.field
    zero_hits = 0
    for digits in product(range(F.q), repeat=5):
        v = [P.const(c) for c in digits]
        lhs = (PolyMatrix(F, [v], 5) @ Mf).is_zero()
        rhs = (sigma_circulant(vec_to_poly(ctx, v)) @ Mf).is_zero()
        assert lhs == rhs
        zero_hits += lhs
    # the left kernel meets the constants in the e1 + e2 components
    assert zero_hits == F.q**3

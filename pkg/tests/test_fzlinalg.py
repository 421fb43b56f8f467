import random

import pytest

from skewcyclic import fzlinalg
from skewcyclic import poly as P
from skewcyclic.circulant import sigma_circulant
from skewcyclic.errors import DimensionMismatch, NotFullRowRank
from skewcyclic.fzlinalg import (
    PolyMatrix,
    determinant,
    hermite_form,
    is_basic,
    is_minimal,
    left_kernel_basis,
    max_minor_degree,
    module_classify,
    module_contains,
    module_equal,
    rank,
    right_kernel_basis,
    smith_form,
)
from skewcyclic.galois import build_field

from helpers import (
    CCC1_G,
    TAU_G,
    context,
    determinantal_divisors,
    fraction_free_rank,
    leibniz_det,
    rand_matrix,
    rand_unimodular,
    skew,
)
from skewcyclic.textio import parse_fz

GF2 = build_field(2)
GF4 = build_field(2, 2)
Z = P.VAR


def mat(F, rows):
    return PolyMatrix(F, [[parse_fz(e, F) for e in row] for row in rows])


def test_identity_is_fixed():
    I = PolyMatrix.identity(GF4, 3)
    assert hermite_form(I) == I
    dec = smith_form(I)
    assert dec.D == I and dec.invariant_factors == [P.ONE] * 3


def test_diagonal_reorder():
    dec = smith_form(mat(GF2, [["z", "0"], ["0", "1"]]))
    assert dec.invariant_factors == [P.ONE, Z]


def test_smith_runs_verification():
    before = fzlinalg.verified_calls
    smith_form(mat(GF2, [["1+z", "z"]]))
    assert fzlinalg.verified_calls == before + 1


def test_example_circulant_is_rank_one_basic():
    g = skew(context(3, "a^2*x"), CCC1_G)
    M = sigma_circulant(g)
    assert smith_form(M).invariant_factors == [P.ONE]
    assert is_basic(M) and rank(M) == 1


def test_tau_circulant_kernel():
    M = sigma_circulant(skew(context(5, "x^2"), TAU_G))
    assert rank(M) == 2
    K = right_kernel_basis(M)
    assert K.shape == (5, 3)
    assert (M @ K).is_zero()
    assert is_basic(K.transpose())


def test_trivial_ranks_and_kernels():
    I = PolyMatrix.identity(GF4, 3)
    assert rank(I) == 3 and right_kernel_basis(I).shape == (3, 0)
    Zm = PolyMatrix.zeros(GF4, 3, 3)
    assert rank(Zm) == 0
    assert module_equal(right_kernel_basis(Zm).transpose(), I)


def test_basic_examples():
    assert not is_basic(mat(GF2, [["z"]]))
    G = mat(GF4, [["1+z+z^2", "a+z+a^2*z^2", "a^2+z+a*z^2"],
                  ["a^2+z+a*z^2", "1+z+z^2", "a+z+a^2*z^2"],
                  ["a+z+a^2*z^2", "a^2+z+a*z^2", "1+z+z^2"]])
    assert determinant(G)
    assert not is_basic(G)  # square nonsingular but not unimodular
    assert module_contains(PolyMatrix.identity(GF4, 3), G.take_rows([0]))
    assert not module_equal(PolyMatrix.identity(GF4, 3), G.take_rows([0]))


def test_minimality_examples():
    M = sigma_circulant(skew(context(5, "x^2"), TAU_G))
    assert is_minimal(M.take_rows([0, 1]))
    assert is_minimal(PolyMatrix.identity(GF4, 2))
    assert not is_minimal(mat(GF2, [["1", "z"], ["1", "z+1"]]))
    with pytest.raises(NotFullRowRank):
        is_minimal(mat(GF2, [["1", "z"], ["z", "z^2"]]))


def test_classification_examples():
    c = module_classify(mat(GF2, [["z+1"]]))
    assert c.delay_free and not c.non_catastrophic and not c.direct_summand
    c = module_classify(mat(GF2, [["z"]]))
    assert not c.delay_free and c.non_catastrophic
    c = module_classify(mat(GF2, [["1", "z"]]))
    assert c.delay_free and c.non_catastrophic and c.direct_summand


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        module_equal(PolyMatrix.identity(GF2, 2), PolyMatrix.identity(GF2, 3))
    with pytest.raises(DimensionMismatch):
        module_contains(PolyMatrix.identity(GF2, 2), PolyMatrix.identity(GF2, 3))
    with pytest.raises(DimensionMismatch):
        determinant(mat(GF2, [["1", "z"]]))


@pytest.mark.parametrize("seed", range(40))
def test_rank_against_elimination_oracle(seed):
    rng = random.Random(seed)
    F = rng.choice([GF2, GF4])
    m, n = rng.randint(1, 6), rng.randint(1, 6)
    M = rand_matrix(rng, F, m, n, max_deg=4 if F is GF2 else 2)
    if rng.random() < 0.4 and m > 1:
        # force a dependent row
        f = P.trim(rng.randrange(F.q) for _ in range(2))
        rows = list(M.rows)
        rows[-1] = tuple(P.add(F, a, P.mul(F, f, b)) for a, b in zip(rows[0], rows[1 % m]))
        M = PolyMatrix(F, rows, n)
    assert rank(M) == fraction_free_rank(M)


@pytest.mark.parametrize("seed", range(60))
def test_invariant_factors_against_minors(seed):
    rng = random.Random(1000 + seed)
    F = rng.choice([GF2, GF4])
    m, n = rng.randint(1, 3), rng.randint(1, 3)
    M = rand_matrix(rng, F, m, n, max_deg=2)
    factors = smith_form(M).invariant_factors
    divisors = determinantal_divisors(M)
    products, acc = [], P.ONE
    for d in factors:
        acc = P.mul(F, acc, d)
        products.append(acc)
    assert products == divisors


@pytest.mark.parametrize("seed", range(40))
def test_determinant_against_leibniz(seed):
    rng = random.Random(2000 + seed)
    F = rng.choice([GF2, GF4, build_field(3)])
    size = rng.randint(1, 4)
    M = rand_matrix(rng, F, size, size, max_deg=2)
    assert determinant(M) == leibniz_det(M)


@pytest.mark.parametrize("seed", range(40))
def test_hermite_canonical_under_unimodular(seed):
    rng = random.Random(3000 + seed)
    F = rng.choice([GF2, GF4])
    m, n = rng.randint(1, 4), rng.randint(1, 4)
    M = rand_matrix(rng, F, m, n)
    U = rand_unimodular(rng, F, m)
    H = hermite_form(M)
    assert hermite_form(U @ M) == H
    assert module_equal(M, U @ M)
    assert hermite_form(H) == H
    # echelon shape with monic pivots and reduced entries above them
    last = -1
    for i, row in enumerate(H.rows):
        c = next((j for j, e in enumerate(row) if e), None)
        if c is None:
            assert all(not any(r) for r in H.rows[i:])
            break
        assert c > last and P.lead(row[c]) == 1
        for above in H.rows[:i]:
            assert P.deg(above[c]) < P.deg(row[c])
        last = c


@pytest.mark.parametrize("seed", range(40))
def test_kernels(seed):
    rng = random.Random(4000 + seed)
    F = rng.choice([GF2, GF4])
    m, n = rng.randint(1, 4), rng.randint(1, 5)
    M = rand_matrix(rng, F, m, n)
    K = right_kernel_basis(M)
    assert (M @ K).is_zero()
    assert K.ncols == n - rank(M)
    if K.ncols:
        assert is_basic(K.transpose())
    L = left_kernel_basis(M)
    assert (L @ M).is_zero()
    assert L.nrows == m - rank(M)


@pytest.mark.parametrize("seed", range(20))
def test_module_containment(seed):
    rng = random.Random(5000 + seed)
    F = GF4
    M = rand_matrix(rng, F, 2, 3)
    combo = rand_matrix(rng, F, 2, 2) @ M
    assert module_contains(M, combo)
    assert module_equal(M, M.stack(combo))
    assert module_contains(combo, M) == module_equal(M, combo)


def test_max_minor_degree():
    M = mat(GF2, [["1", "z", "z^2"], ["0", "1", "z"]])
    assert max_minor_degree(M) == 1
    assert max_minor_degree(PolyMatrix.identity(GF2, 2)) == 0

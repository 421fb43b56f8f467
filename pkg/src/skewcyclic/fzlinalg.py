"""Matrices over F[z]: Hermite and Smith forms, kernels, and the module
predicates used to recognise convolutional codes.

Modules are row spaces: a matrix M stands for {u M : u in F[z]^k}.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations

from . import poly as P
from .errors import DimensionMismatch, NotFullRowRank
from .galois import GF, matrix_rank

# When true every Smith decomposition is checked before it is returned.
VERIFY = os.environ.get("SKEWCYCLIC_VERIFY") == "1"
verified_calls = 0


class PolyMatrix:
    __slots__ = ("field", "rows", "ncols")

    def __init__(self, field: GF, rows, ncols: int | None = None):
        rows = tuple(tuple(P.trim(e) for e in row) for row in rows)
        if ncols is None:
            if not rows:
                raise DimensionMismatch("an empty matrix needs an explicit column count")
            ncols = len(rows[0])
        for row in rows:
            if len(row) != ncols:
                raise DimensionMismatch("ragged matrix")
        self.field = field
        self.rows = rows
        self.ncols = ncols

    @classmethod
    def constant(cls, field: GF, rows, ncols: int | None = None) -> PolyMatrix:
        return cls(field, [[P.const(c) for c in row] for row in rows], ncols)

    @classmethod
    def identity(cls, field: GF, size: int) -> PolyMatrix:
        return cls.constant(field, [[int(i == j) for j in range(size)] for i in range(size)], size)

    @classmethod
    def zeros(cls, field: GF, nrows: int, ncols: int) -> PolyMatrix:
        return cls(field, [[()] * ncols for _ in range(nrows)], ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolyMatrix)
            and self.field == other.field
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.ncols))

    def __repr__(self) -> str:
        from .textio import format_matrix

        return f"PolyMatrix({format_matrix(self)})"

    def __add__(self, other: PolyMatrix) -> PolyMatrix:
        if self.shape != other.shape:
            raise DimensionMismatch("shapes differ")
        F = self.field
        return PolyMatrix(
            F, [[P.add(F, a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
            self.ncols,
        )

    def __sub__(self, other: PolyMatrix) -> PolyMatrix:
        if self.shape != other.shape:
            raise DimensionMismatch("shapes differ")
        F = self.field
        return PolyMatrix(
            F, [[P.sub(F, a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
            self.ncols,
        )

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        F = self.field
        cols = list(zip(*other.rows)) if other.rows else [()] * other.ncols
        out = []
        for row in self.rows:
            new = []
            for col in cols:
                acc = ()
                for a, b in zip(row, col):
                    if a and b:
                        acc = P.add(F, acc, P.mul(F, a, b))
                new.append(acc)
            out.append(new)
        return PolyMatrix(F, out, other.ncols)

    def scale(self, f) -> PolyMatrix:
        F = self.field
        return PolyMatrix(F, [[P.mul(F, f, e) for e in row] for row in self.rows], self.ncols)

    def transpose(self) -> PolyMatrix:
        if not self.rows:
            return PolyMatrix(self.field, [[] for _ in range(self.ncols)], 0)
        return PolyMatrix(self.field, list(zip(*self.rows)), self.nrows)

    @property
    def T(self) -> PolyMatrix:
        return self.transpose()

    def take_rows(self, indices) -> PolyMatrix:
        return PolyMatrix(self.field, [self.rows[i] for i in indices], self.ncols)

    def stack(self, other: PolyMatrix) -> PolyMatrix:
        if self.ncols != other.ncols:
            raise DimensionMismatch("column counts differ")
        return PolyMatrix(self.field, self.rows + other.rows, self.ncols)

    def nonzero_rows(self) -> PolyMatrix:
        return PolyMatrix(self.field, [r for r in self.rows if any(r)], self.ncols)

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.rows)

    def degree(self) -> int:
        return max((P.deg(e) for row in self.rows for e in row), default=-1)

    def row_degrees(self) -> list[int]:
        return [max((P.deg(e) for e in row), default=-1) for row in self.rows]

    def coefficient(self, k: int) -> list[list[int]]:
        """Constant matrix of z^k coefficients."""
        return [[e[k] if k < len(e) else 0 for e in row] for row in self.rows]


# elementary operations on lists of lists

def _row_axpy(F, rows, target: int, factor, source: int):
    """rows[target] -= factor * rows[source]."""
    if not factor:
        return
    rows[target] = [P.sub(F, a, P.mul(F, factor, b)) for a, b in zip(rows[target], rows[source])]


def _col_axpy(F, rows, target: int, factor, source: int):
    if not factor:
        return
    for row in rows:
        row[target] = P.sub(F, row[target], P.mul(F, factor, row[source]))


def _swap_cols(rows, i: int, j: int):
    for row in rows:
        row[i], row[j] = row[j], row[i]


def _identity_rows(size: int):
    return [[P.ONE if i == j else () for j in range(size)] for i in range(size)]


@dataclass(frozen=True)
class SmithDecomposition:
    """U M V = D with U, V unimodular; U_inv and V_inv are their inverses."""

    U: PolyMatrix
    D: PolyMatrix
    V: PolyMatrix
    U_inv: PolyMatrix
    V_inv: PolyMatrix

    @property
    def invariant_factors(self) -> list:
        size = min(self.D.shape)
        return [self.D[i, i] for i in range(size) if self.D[i, i]]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def smith_form(M: PolyMatrix) -> SmithDecomposition:
    """Smith normal form with monic invariant factors d_1 | d_2 | ...

    The pivot is an entry of least degree in the untreated block, ties broken
    by row then column.
    """
    F = M.field
    m, n = M.shape
    A = [list(r) for r in M.rows]
    U, Ui = _identity_rows(m), _identity_rows(m)
    V, Vi = _identity_rows(n), _identity_rows(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]
        _swap_cols(Ui, i, j)

    def swap_cols(i, j):
        _swap_cols(A, i, j)
        _swap_cols(V, i, j)
        Vi[i], Vi[j] = Vi[j], Vi[i]

    def row_op(target, factor, source):
        # row_t -= f row_s ; the inverse adds f col_t to col_s on the left factor
        _row_axpy(F, A, target, factor, source)
        _row_axpy(F, U, target, factor, source)
        _col_axpy(F, Ui, source, P.neg(F, factor), target)

    def col_op(target, factor, source):
        _col_axpy(F, A, target, factor, source)
        _col_axpy(F, V, target, factor, source)
        _row_axpy(F, Vi, source, P.neg(F, factor), target)

    t = 0
    while t < min(m, n):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    e = A[i][j]
                    if e and (best is None or len(e) < best[0]):
                        best = (len(e), i, j)
            if best is None:
                break
            _, i, j = best
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            pivot = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    quo, rem = P.divmod_(F, A[i][t], pivot)
                    row_op(i, quo, t)
                    clean = clean and not rem
            for j in range(t + 1, n):
                if A[t][j]:
                    quo, rem = P.divmod_(F, A[t][j], pivot)
                    col_op(j, quo, t)
                    clean = clean and not rem
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n)
                 if A[i][j] and P.mod(F, A[i][j], pivot)),
                None,
            )
            if bad is None:
                break
            row_op(t, P.neg(F, P.ONE), bad)
        if best is None:
            break
        inv = F.inv(P.lead(A[t][t]))
        if inv != 1:
            A[t] = [P.scale(F, inv, e) for e in A[t]]
            U[t] = [P.scale(F, inv, e) for e in U[t]]
            lead = F.inv(inv)
            for row in Ui:
                row[t] = P.scale(F, lead, row[t])
        t += 1
    result = SmithDecomposition(
        PolyMatrix(F, U, m), PolyMatrix(F, A, n), PolyMatrix(F, V, n),
        PolyMatrix(F, Ui, m), PolyMatrix(F, Vi, n),
    )
    if VERIFY:
        verify_smith(M, result)
    return result


def verify_smith(M: PolyMatrix, dec: SmithDecomposition):
    global verified_calls
    F = M.field
    m, n = M.shape
    assert dec.U @ M @ dec.V == dec.D, "U M V != D"
    assert dec.U @ dec.U_inv == PolyMatrix.identity(F, m), "U is not unimodular"
    assert dec.V @ dec.V_inv == PolyMatrix.identity(F, n), "V is not unimodular"
    for i in range(m):
        for j in range(n):
            if i != j:
                assert not dec.D[i, j], "D is not diagonal"
    factors = [dec.D[i, i] for i in range(min(m, n))]
    seen_zero = False
    for i, d in enumerate(factors):
        if not d:
            seen_zero = True
            continue
        assert not seen_zero, "zero invariant factor before a nonzero one"
        assert P.lead(d) == 1, "invariant factor is not monic"
        if i + 1 < len(factors) and factors[i + 1]:
            assert P.divides(F, d, factors[i + 1]), "divisibility chain broken"
    verified_calls += 1


def invariant_factors(M: PolyMatrix) -> list:
    return smith_form(M).invariant_factors


def rank(M: PolyMatrix) -> int:
    return smith_form(M).rank


def hermite_form(M: PolyMatrix) -> PolyMatrix:
    """Row-style Hermite normal form: echelon, monic pivots, entries above a
    pivot of lower degree than the pivot, zero rows last."""
    F = M.field
    m, n = M.shape
    A = [list(r) for r in M.rows]
    r = 0
    for c in range(n):
        if r == m:
            break
        found = False
        while True:
            live = [i for i in range(r, m) if A[i][c]]
            if not live:
                break
            found = True
            piv = min(live, key=lambda i: (len(A[i][c]), i))
            A[r], A[piv] = A[piv], A[r]
            done = True
            for i in range(r + 1, m):
                if A[i][c]:
                    quo = P.divmod_(F, A[i][c], A[r][c])[0]
                    _row_axpy(F, A, i, quo, r)
                    done = done and not A[i][c]
            if done:
                break
        if not found:
            continue
        inv = F.inv(P.lead(A[r][c]))
        A[r] = [P.scale(F, inv, e) for e in A[r]]
        for i in range(r):
            if A[i][c]:
                quo = P.divmod_(F, A[i][c], A[r][c])[0]
                _row_axpy(F, A, i, quo, r)
        r += 1
    return PolyMatrix(F, A, n)


def right_kernel_basis(M: PolyMatrix) -> PolyMatrix:
    """Columns form a basic basis of {w : M w = 0}."""
    dec = smith_form(M)
    n = M.ncols
    cols = list(range(dec.rank, n))
    return PolyMatrix(M.field, [[dec.V[i, j] for j in cols] for i in range(n)], len(cols))


def left_kernel_basis(M: PolyMatrix) -> PolyMatrix:
    """Rows form a basic basis of {v : v M = 0}."""
    return right_kernel_basis(M.transpose()).transpose()


def is_basic(M: PolyMatrix) -> bool:
    """All nonzero invariant factors equal 1."""
    return all(d == P.ONE for d in smith_form(M).invariant_factors)


def leading_coefficient_matrix(M: PolyMatrix) -> list[list[int]]:
    """Row i holds the z^{deg row i} coefficients of row i."""
    out = []
    for row, d in zip(M.rows, M.row_degrees()):
        out.append([e[d] if len(e) > d >= 0 else 0 for e in row])
    return out


def is_minimal(M: PolyMatrix) -> bool:
    """Row-reduced test: the leading coefficient matrix has full rank over F."""
    if rank(M) != M.nrows:
        raise NotFullRowRank("minimality needs a full row rank matrix")
    return matrix_rank(M.field, leading_coefficient_matrix(M)) == M.nrows


def _hermite_rows(M: PolyMatrix) -> tuple:
    return hermite_form(M).nonzero_rows().rows


def module_equal(M1: PolyMatrix, M2: PolyMatrix) -> bool:
    if M1.ncols != M2.ncols:
        raise DimensionMismatch("modules live in different free modules")
    return _hermite_rows(M1) == _hermite_rows(M2)


def _reduce_against(F, hnf_rows, v):
    v = list(v)
    for row in hnf_rows:
        c = next(j for j, e in enumerate(row) if e)
        if any(v[:c]):
            return v
        if v[c]:
            quo, rem = P.divmod_(F, v[c], row[c])
            if rem:
                return v
            v = [P.sub(F, a, P.mul(F, quo, b)) for a, b in zip(v, row)]
    return v


def module_contains(M1: PolyMatrix, M2: PolyMatrix) -> bool:
    """Every row of M2 lies in the row module of M1."""
    if M1.ncols != M2.ncols:
        raise DimensionMismatch("modules live in different free modules")
    rows = _hermite_rows(M1)
    return all(not any(_reduce_against(M1.field, rows, v)) for v in M2.rows)


@dataclass(frozen=True)
class ModuleClass:
    rank: int
    invariant_factors: tuple
    delay_free: bool
    non_catastrophic: bool
    direct_summand: bool


def _is_z_power(f) -> bool:
    return bool(f) and all(c == 0 for c in f[:-1])


def module_classify(M: PolyMatrix) -> ModuleClass:
    """Delay-free iff z divides no invariant factor; non-catastrophic iff every
    invariant factor is a power of z; a direct summand iff all equal 1."""
    factors = tuple(smith_form(M).invariant_factors)
    return ModuleClass(
        rank=len(factors),
        invariant_factors=factors,
        delay_free=all(d[0] != 0 for d in factors),
        non_catastrophic=all(_is_z_power(d) for d in factors),
        direct_summand=all(d == P.ONE for d in factors),
    )


def determinant(M: PolyMatrix):
    """Determinant by fraction-free (Bareiss) elimination."""
    F = M.field
    n, m = M.shape
    if n != m:
        raise DimensionMismatch("determinant of a non-square matrix")
    if n == 0:
        return P.ONE
    A = [list(r) for r in M.rows]
    sign = P.ONE
    prev = P.ONE
    for k in range(n - 1):
        if not A[k][k]:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return ()
            A[k], A[swap] = A[swap], A[k]
            sign = P.neg(F, sign)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = P.sub(F, P.mul(F, A[k][k], A[i][j]), P.mul(F, A[i][k], A[k][j]))
                A[i][j] = P.divmod_(F, num, prev)[0]
            A[i][k] = ()
        prev = A[k][k]
    return P.mul(F, sign, A[n - 1][n - 1])


def max_minor_degree(M: PolyMatrix) -> int:
    """Largest degree among the full-size minors of a k x n matrix."""
    k = M.nrows
    best = -1
    for cols in combinations(range(M.ncols), k):
        sub = PolyMatrix(M.field, [[row[j] for j in cols] for row in M.rows], k)
        best = max(best, P.deg(determinant(sub)))
    return best

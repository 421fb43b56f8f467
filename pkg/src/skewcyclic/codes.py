"""Skew-cyclic convolutional codes: construction from a generating family,
minimal encoders, the control polynomial and dual code, free distance and
the Heller bound.
"""
from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass

from . import fzlinalg
from . import poly as P
from .circulant import ideal_module, sigma_circulant, vec_to_poly
from .errors import (
    InternalNotPrincipal,
    InvalidParameters,
    NotACode,
    NotDelayFree,
    NotPrincipal,
    NotReduced,
    StateSpaceTooLarge,
)
from .fzlinalg import (
    PolyMatrix,
    is_basic,
    left_kernel_basis,
    module_classify,
    module_equal,
    right_kernel_basis,
)
from .skew import (
    SkewContext,
    SkewPoly,
    hat_skew,
    is_reduced,
    pi_of,
    principal_generator,
    split_components,
)

log = logging.getLogger(__name__)

MAX_TRELLIS_STATES = 10**6


@dataclass
class ConvCode:
    context: SkewContext
    generator: SkewPoly
    kappa: int
    generator_matrix: PolyMatrix
    complexity: int
    is_code: bool
    existence_witness: bool

    @property
    def n(self) -> int:
        return self.context.ring.n

    @property
    def q(self) -> int:
        return self.context.ring.field.q

    def circulant(self) -> PolyMatrix:
        return sigma_circulant(self.generator)


def _kappa(g: SkewPoly) -> int:
    return P.deg(pi_of(g)) if g else 0


def _complexity(g: SkewPoly) -> int:
    ring = g.ctx.ring
    return sum(ring.degrees[k - 1] * g.component(k).deg for k in g.support())


def code_from_generator(ctx: SkewContext, fs) -> ConvCode:
    """The sigma-cyclic module generated by fs, which must be a delay-free
    principal left ideal."""
    fs = list(fs)
    outcome = principal_generator(fs)
    if not outcome.is_principal:
        raise NotPrincipal("the generated left ideal is not principal")
    cls = module_classify(ideal_module(fs))
    if not cls.delay_free:
        raise NotDelayFree("the generated module is not delay-free")
    g = outcome.generator
    if outcome.is_delay_free != cls.delay_free:
        log.warning("support test and Smith form disagree on delay-freeness")
    M = sigma_circulant(g)
    kappa = _kappa(g)
    return ConvCode(
        context=ctx,
        generator=g,
        kappa=kappa,
        generator_matrix=M.take_rows(range(kappa)),
        complexity=_complexity(g),
        is_code=is_basic(M),
        existence_witness=outcome.is_delay_free,
    )


def minimal_generator_matrix(code: ConvCode) -> PolyMatrix:
    """Stack the first deg(pi_k) rows of M^sigma(e_k g) over the support."""
    if not code.is_code:
        raise NotACode("the module is not basic")
    g = code.generator
    ring = code.context.ring
    out = PolyMatrix(ring.field, [], ring.n)
    for k in sorted(g.support()):
        part = sigma_circulant(g.component(k))
        out = out.stack(part.take_rows(range(ring.degrees[k - 1])))
    return out


# free distance

def _weight(vec) -> int:
    return sum(1 for c in vec if c)


def _trellis_free_distance(G: PolyMatrix, max_states: int) -> int:
    F = G.field
    k, n = G.shape
    degrees = [max(d, 0) for d in G.row_degrees()]
    memory = sum(degrees)
    if F.q**memory > max_states:
        raise StateSpaceTooLarge(f"{F.q}^{memory} trellis states exceed {max_states}")
    # taps[i][j] is the z^j coefficient vector of row i
    taps = [[[e[j] if j < len(e) else 0 for e in row] for j in range(d + 1)]
            for row, d in zip(G.rows, degrees)]
    starts = [sum(degrees[:i]) for i in range(k)]

    def step(state, inputs):
        out = [0] * n
        for i in range(k):
            history = (inputs[i],) + state[starts[i]:starts[i] + degrees[i]]
            for j, u in enumerate(history):
                if u:
                    for col, c in enumerate(taps[i][j]):
                        if c:
                            out[col] = F.add(out[col], F.mul(u, c))
        nxt = []
        for i in range(k):
            history = (inputs[i],) + state[starts[i]:starts[i] + degrees[i]]
            nxt.extend(history[: degrees[i]])
        return _weight(out), tuple(nxt)

    def all_inputs():
        total = F.q**k
        for code in range(total):
            digits = []
            for _ in range(k):
                code, r = divmod(code, F.q)
                digits.append(r)
            yield tuple(digits)

    inputs = list(all_inputs())
    zero = (0,) * memory
    best = None
    heap = []
    for u in inputs[1:]:
        w, nxt = step(zero, u)
        if nxt == zero:
            best = w if best is None else min(best, w)
        else:
            heapq.heappush(heap, (w, nxt))
    settled = set()
    while heap:
        w, state = heapq.heappop(heap)
        if best is not None and w >= best:
            break
        if state in settled:
            continue
        settled.add(state)
        for u in inputs:
            dw, nxt = step(state, u)
            if nxt == zero:
                best = w + dw if best is None else min(best, w + dw)
            elif nxt not in settled:
                heapq.heappush(heap, (w + dw, nxt))
    return best


def free_distance(code: ConvCode, max_states: int = MAX_TRELLIS_STATES) -> int:
    """Minimum Hamming weight of a nonzero codeword, by a shortest-path search
    over the controller trellis of the minimal encoder."""
    if code.kappa == 0:
        raise InvalidParameters("the zero code has no free distance")
    return _trellis_free_distance(minimal_generator_matrix(code), max_states)


def matrix_free_distance(G: PolyMatrix, max_states: int = MAX_TRELLIS_STATES) -> int:
    """Free distance of the code generated by a minimal basic matrix G."""
    return _trellis_free_distance(G, max_states)


def heller_bound(n: int, k: int, delta: int, m: int, q: int, i_max: int = 20) -> int:
    """min over 1 <= i <= i_max of
    floor(n (m+i) q^{k(m+i)-delta-1} (q-1) / (q^{k(m+i)-delta} - 1))."""
    if min(n, k, q) < 1 or delta < 0 or m < 0 or i_max < 1 or q < 2:
        raise InvalidParameters("Heller bound needs positive n, k, i_max and q >= 2")
    best = None
    for i in range(1, i_max + 1):
        e = k * (m + i) - delta
        if e <= 0:
            raise InvalidParameters(f"k(m+i) <= delta for i = {i}")
        value = n * (m + i) * q ** (e - 1) * (q - 1) // (q**e - 1)
        best = value if best is None else min(best, value)
    return best


def code_heller_bound(code: ConvCode, i_max: int = 20) -> int:
    G = minimal_generator_matrix(code)
    memory = max(G.row_degrees(), default=0)
    return heller_bound(code.n, code.kappa, code.complexity, memory, code.q, i_max)


# duality

@dataclass
class DualityReport:
    control_poly: SkewPoly
    dual_generator: SkewPoly
    dual_control: SkewPoly
    control_matrix: PolyMatrix
    kernel_basis: PolyMatrix


def control_polynomial(code: ConvCode) -> DualityReport:
    """Control polynomial h in A[z; sigma] with ker M^sigma(h) = C, obtained by
    reducing the kernel of M^sigma(g) in A[z; sigma_hat]."""
    if not code.is_code:
        raise NotACode("duality needs a basic module")
    ctx, g = code.context, code.generator
    hat_ctx = ctx.hat_context()
    M = sigma_circulant(g)
    K = right_kernel_basis(M)
    columns = [[K[i, j] for i in range(K.nrows)] for j in range(K.ncols)]
    if columns:
        outcome = principal_generator([vec_to_poly(hat_ctx, col) for col in columns])
        if not outcome.is_principal:
            raise InternalNotPrincipal("kernel polynomials generate a non-principal ideal")
        h_prime = outcome.generator
    else:
        h_prime = hat_ctx.zero()
    h = hat_skew(h_prime)
    control = sigma_circulant(h)
    assert not (g * h), "g h != 0"
    assert (M @ control).is_zero(), "M(g) M(h) != 0"
    assert (control @ M).is_zero(), "M(h) M(g) != 0"
    if code.kappa and control.ncols:
        assert module_equal(left_kernel_basis(control), M), "ker M(h) != im M(g)"
    return DualityReport(
        control_poly=h,
        dual_generator=h_prime,
        dual_control=hat_skew(g),
        control_matrix=control,
        kernel_basis=K,
    )


def dual_code(code: ConvCode) -> ConvCode:
    report = control_polynomial(code)
    hat_ctx = code.context.hat_context()
    return code_from_generator(hat_ctx, [report.dual_generator])


# classification

@dataclass(frozen=True)
class CodeClass:
    is_block: bool
    sigma_forces_block: bool


def classify(code: ConvCode) -> CodeClass:
    return CodeClass(
        is_block=code.complexity == 0,
        sigma_forces_block=code.context.sigma.fixes_all_components(),
    )


def is_basic_poly_test(g: SkewPoly) -> bool:
    """Whether M^sigma(g) is basic, for reduced g.

    Under verification the equivalent test is also run: the left ideals
    generated by hat(g) and theta(g_0) in A[z; sigma_hat] coincide.
    """
    if not is_reduced(split_components([g])):
        raise NotReduced("the test needs a reduced polynomial")
    basic = is_basic(sigma_circulant(g))
    if fzlinalg.VERIFY:
        g_hat = hat_skew(g)
        constant = g_hat.ctx.const(g.ctx.ring.theta(g.zfree))
        same = module_equal(sigma_circulant(g_hat), sigma_circulant(constant))
        assert same == basic, "ideal test disagrees with the Smith form"
    return basic


@dataclass
class CyclicClosure:
    generator: SkewPoly
    module_matrix: PolyMatrix
    rank: int
    is_code: bool


def smallest_cyclic_module(ctx: SkewContext, v) -> CyclicClosure:
    """The smallest sigma-cyclic submodule containing v, with a flag telling
    whether it is basic.  No saturation is attempted when it is not."""
    f = vec_to_poly(ctx, v)
    if not f:
        zero = PolyMatrix(ctx.ring.field, [], ctx.ring.n)
        return CyclicClosure(f, zero, 0, True)
    g = principal_generator([f]).generator
    M = sigma_circulant(g)
    kappa = _kappa(g)
    return CyclicClosure(g, M.take_rows(range(kappa)), kappa, is_basic(M))


def code_report(code: ConvCode, i_max: int = 20, with_distance: bool = True) -> dict:
    """Everything the CLI prints about a code, in JSON-ready form."""
    from .textio import matrix_to_json, skew_to_json

    report = {
        "n": code.n,
        "q": code.q,
        "sigma": list(code.context.sigma.image),
        "generator": skew_to_json(code.generator),
        "kappa": code.kappa,
        "complexity": code.complexity,
        "generator_matrix": matrix_to_json(code.generator_matrix),
        "is_code": code.is_code,
        "is_block": code.complexity == 0,
        "minimal_generator_matrix": None,
        "control_poly": None,
        "dual_generator": None,
        "d_free": None,
        "heller_bound": None,
    }
    if not code.is_code:
        return report
    report["minimal_generator_matrix"] = matrix_to_json(minimal_generator_matrix(code))
    duality = control_polynomial(code)
    report["control_poly"] = skew_to_json(duality.control_poly)
    report["dual_generator"] = skew_to_json(duality.dual_generator)
    if code.kappa and with_distance:
        report["d_free"] = free_distance(code)
        report["heller_bound"] = code_heller_bound(code, i_max)
    return report


def codeword(code: ConvCode, message) -> list:
    """u G for a message u (list of kappa polynomials in z)."""
    u = PolyMatrix(code.context.ring.field, [list(message)], code.kappa)
    return list((u @ code.generator_matrix).rows[0])


def codeword_poly(code: ConvCode, message) -> SkewPoly:
    return vec_to_poly(code.context, codeword(code, message))


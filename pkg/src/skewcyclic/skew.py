"""The skew polynomial ring A[z; sigma].

Coefficients sit to the right of z, so a polynomial is sum z^nu g_nu and
a z = z sigma(a).  A term z^nu c with c inside a single CRT component k is
written z^nu e_k c; its monomial z^nu e_k is ordered by (nu, k).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import total_ordering

from . import poly as P
from .errors import ContextMismatch, EmptyInput, LengthMismatch, NotAUnit, ZeroPolynomial
from .ring import Automorphism, RingContext, sigma_hat


@dataclass(frozen=True, eq=False)
class SkewContext:
    ring: RingContext
    sigma: Automorphism
    _inverse: list = field(default_factory=list, repr=False)

    def __post_init__(self):
        if self.sigma.ring != self.ring:
            raise ContextMismatch("automorphism belongs to another ring")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SkewContext)
            and self.ring == other.ring
            and self.sigma == other.sigma
        )

    def __hash__(self) -> int:
        return hash((self.ring.key, self.sigma.image))

    def __repr__(self) -> str:
        return f"SkewContext({self.ring!r}, sigma(x)={self.sigma.image})"

    def act(self, nu: int, a):
        """sigma^nu(a); nu may be negative."""
        return self.sigma.power(nu).apply(a)

    def inverse_context(self) -> SkewContext:
        return SkewContext(self.ring, self.sigma.inverse())

    def hat_context(self) -> SkewContext:
        return SkewContext(self.ring, sigma_hat(self.sigma))

    # constructors

    def poly(self, coeffs) -> SkewPoly:
        return SkewPoly(self, coeffs)

    def zero(self) -> SkewPoly:
        return SkewPoly(self, ())

    def one(self) -> SkewPoly:
        return SkewPoly(self, (self.ring.one,))

    def const(self, a) -> SkewPoly:
        return SkewPoly(self, (tuple(a),))

    def z(self, power: int = 1, coeff=None) -> SkewPoly:
        coeff = self.ring.one if coeff is None else tuple(coeff)
        return SkewPoly(self, (self.ring.zero,) * power + (coeff,))

    def from_crt(self, residues_by_power) -> SkewPoly:
        """Build sum z^nu c_nu from the CRT residues of each c_nu."""
        return SkewPoly(self, [self.ring.crt_inverse(res) for res in residues_by_power])


@total_ordering
@dataclass(frozen=True)
class Monomial:
    """z^zpow e_component."""

    zpow: int
    component: int

    def key(self) -> tuple[int, int]:
        return (self.zpow, self.component)

    def __lt__(self, other: Monomial) -> bool:
        return self.key() < other.key()


@dataclass(frozen=True)
class Term:
    monomial: Monomial
    coeff: tuple[int, ...]


class SkewPoly:
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: SkewContext, coeffs):
        n = ctx.ring.n
        out = [tuple(c) for c in coeffs]
        for c in out:
            if len(c) != n:
                raise LengthMismatch(f"coefficients must have length {n}")
        zero = ctx.ring.zero
        while out and out[-1] == zero:
            out.pop()
        self.ctx = ctx
        self.coeffs = tuple(out)

    # basic protocol

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SkewPoly)
            and self.ctx == other.ctx
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((hash(self.ctx), self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        from .textio import format_skew

        return f"SkewPoly({format_skew(self)})"

    @property
    def deg(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, nu: int):
        if 0 <= nu < len(self.coeffs):
            return self.coeffs[nu]
        return self.ctx.ring.zero

    @property
    def zfree(self):
        return self.coeff(0)

    def _same(self, other: SkewPoly):
        if not isinstance(other, SkewPoly):
            return NotImplemented
        if other.ctx != self.ctx:
            raise ContextMismatch("skew polynomials over different contexts")
        return other

    def __add__(self, other):
        if self._same(other) is NotImplemented:
            return NotImplemented
        ring = self.ctx.ring
        size = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(
            self.ctx, [ring.add(self.coeff(i), other.coeff(i)) for i in range(size)]
        )

    def __neg__(self):
        return SkewPoly(self.ctx, [self.ctx.ring.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        if self._same(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if self._same(other) is NotImplemented:
            return NotImplemented
        return skew_mul(self, other)

    def left_mul(self, a) -> SkewPoly:
        """a * self for a ring element a."""
        ctx = self.ctx
        return SkewPoly(
            ctx, [ctx.ring.mul(ctx.act(nu, a), c) for nu, c in enumerate(self.coeffs)]
        )

    def right_mul(self, a) -> SkewPoly:
        """self * a for a ring element a."""
        ring = self.ctx.ring
        return SkewPoly(self.ctx, [ring.mul(c, a) for c in self.coeffs])

    def shift(self, k: int) -> SkewPoly:
        """z^k * self."""
        return SkewPoly(self.ctx, (self.ctx.ring.zero,) * k + self.coeffs)

    # CRT views

    def crt_form(self) -> list[list[tuple[int, ...]]]:
        return [self.ctx.ring.crt_forward(c) for c in self.coeffs]

    def terms(self) -> list[Term]:
        """Nonzero terms in descending monomial order."""
        ring = self.ctx.ring
        out = []
        for nu in range(len(self.coeffs) - 1, -1, -1):
            residues = ring.crt_forward(self.coeffs[nu])
            for k in range(ring.r, 0, -1):
                if residues[k - 1]:
                    out.append(Term(Monomial(nu, k), ring.in_component(k, residues[k - 1])))
        return out

    def component(self, k: int) -> SkewPoly:
        """e_k * self."""
        return self.left_mul(self.ctx.ring.idempotent(k))

    def support(self) -> frozenset[int]:
        return frozenset(k for k in range(1, self.ctx.ring.r + 1) if self.component(k))

    def leading_term(self) -> Term:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading term")
        ring = self.ctx.ring
        nu = len(self.coeffs) - 1
        residues = ring.crt_forward(self.coeffs[nu])
        k = max(j for j in range(1, ring.r + 1) if residues[j - 1])
        return Term(Monomial(nu, k), ring.in_component(k, residues[k - 1]))

    def leading_monomial(self) -> Monomial:
        return self.leading_term().monomial

    def home_component(self) -> int:
        """The k with e_k f = f, for f nonzero inside a single component."""
        lm = self.leading_monomial()
        k = self.ctx.sigma.power(-lm.zpow).target(lm.component)
        if self.component(k) != self:
            raise ValueError("polynomial is spread over several components")
        return k


def skew_mul(g: SkewPoly, h: SkewPoly) -> SkewPoly:
    """sum_lambda z^lambda sum_{nu+mu=lambda} sigma^mu(g_nu) h_mu."""
    if g.ctx != h.ctx:
        raise ContextMismatch("skew polynomials over different contexts")
    ctx, ring = g.ctx, g.ctx.ring
    if not g.coeffs or not h.coeffs:
        return ctx.zero()
    out = [ring.zero] * (len(g.coeffs) + len(h.coeffs) - 1)
    for mu, hc in enumerate(h.coeffs):
        if hc == ring.zero:
            continue
        power = ctx.sigma.power(mu)
        for nu, gc in enumerate(g.coeffs):
            if gc != ring.zero:
                out[nu + mu] = ring.add(out[nu + mu], ring.mul(power.apply(gc), hc))
    return SkewPoly(ctx, out)


def skew_add(g: SkewPoly, h: SkewPoly) -> SkewPoly:
    return g + h


def component(f: SkewPoly, k: int) -> SkewPoly:
    return f.component(k)


def support(f: SkewPoly) -> frozenset[int]:
    return f.support()


def leading_monomial(f: SkewPoly) -> Monomial:
    return f.leading_monomial()


def leading_term(f: SkewPoly) -> Term:
    return f.leading_term()


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """z^mu e_k right-divides z^nu e_l c iff mu <= nu and k = l."""
    return a.zpow <= b.zpow and a.component == b.component


def _eliminate(f: SkewPoly, term: Term, divisor: SkewPoly) -> SkewPoly:
    """f - z^{nu-mu} a divisor, which cancels ``term`` of f against the
    leading term z^mu b of divisor; a = sigma^{-mu}(c b^{-1})."""
    ctx, ring = f.ctx, f.ctx.ring
    lead = divisor.leading_term()
    k = term.monomial.component
    quotient = ring.mul(term.coeff, ring.component_inverse(lead.coeff, k))
    a = ctx.act(-lead.monomial.zpow, quotient)
    step = divisor.left_mul(a).shift(term.monomial.zpow - lead.monomial.zpow)
    return f - step


def _find_divisor(family, skip: int, mono: Monomial):
    for idx, g in enumerate(family):
        if idx != skip and g and monomial_divides(g.leading_monomial(), mono):
            return idx
    return None


def reduce_family(fs) -> list[SkewPoly]:
    """Reduce a family of polynomials, each lying in a single component.

    First leading terms are reduced: the target is the reducible member with
    the largest leading monomial (ties go to the later index) and the divisor
    is the first member whose leading monomial divides it.  Then lower terms
    are cleared until no term of any member is divisible by the leading
    monomial of another.  Zero members stay in place.
    """
    family = list(fs)
    while True:
        best = None
        for idx, f in enumerate(family):
            if not f:
                continue
            lm = f.leading_monomial()
            if _find_divisor(family, idx, lm) is None:
                continue
            if best is None or lm.key() >= best[1].key():
                best = (idx, lm)
        if best is None:
            break
        idx = best[0]
        div = _find_divisor(family, idx, best[1])
        family[idx] = _eliminate(family[idx], family[idx].leading_term(), family[div])
    changed = True
    while changed:
        changed = False
        for idx, f in enumerate(family):
            if not f:
                continue
            for term in f.terms()[1:]:
                div = _find_divisor(family, idx, term.monomial)
                if div is not None:
                    family[idx] = _eliminate(f, term, family[div])
                    changed = True
                    break
    return family


def is_reduced(fs) -> bool:
    family = [f for f in fs if f]
    for idx, f in enumerate(family):
        for term in f.terms():
            if _find_divisor(family, idx, term.monomial) is not None:
                return False
    return True


def normalizer(g: SkewPoly):
    """The unit a of A with a g normalized."""
    ctx, ring = g.ctx, g.ctx.ring
    residues = []
    for k in range(1, ring.r + 1):
        part = g.component(k)
        if not part:
            residues.append(P.ONE)
            continue
        lead = part.leading_term()
        j = lead.monomial.component
        inv = ring.in_component(j, ring.comp_inv(j, ring.residue(lead.coeff, j)))
        residues.append(ring.residue(ctx.act(-lead.monomial.zpow, inv), k))
    return ring.crt_inverse(residues)


def normalize(g: SkewPoly) -> SkewPoly:
    """Scale each component so its leading coefficient is an idempotent."""
    return g.left_mul(normalizer(g))


def is_normalized(g: SkewPoly) -> bool:
    ring = g.ctx.ring
    for k in g.support():
        lead = g.component(k).leading_term()
        if lead.coeff != ring.idempotent(lead.monomial.component):
            return False
    return True


@dataclass
class ReductionOutcome:
    reduced_family: list[SkewPoly]
    is_principal: bool
    is_delay_free: bool
    generator: SkewPoly | None
    components: list[int]

    def existence_witness(self) -> bool:
        return self.generator is not None and is_delay_free_witness(self.generator)


def split_components(fs) -> list[SkewPoly]:
    out = []
    for f in fs:
        for k in range(1, f.ctx.ring.r + 1):
            out.append(f.component(k))
    return out


def principal_generator(fs) -> ReductionOutcome:
    """Decide whether the left ideal generated by fs is principal and, if so,
    return its reduced normalized generator."""
    fs = list(fs)
    if not fs:
        raise EmptyInput("empty generating family")
    ctx = fs[0].ctx
    for f in fs:
        if f.ctx != ctx:
            raise ContextMismatch("generators over different contexts")
    reduced = [g for g in reduce_family(split_components(fs)) if g]
    labelled = sorted(((g.home_component(), normalize(g)) for g in reduced),
                      key=lambda item: item[0])
    homes = [k for k, _ in labelled]
    family = [g for _, g in labelled]
    principal = len(set(homes)) == len(homes)
    if not principal:
        return ReductionOutcome(family, False, False, None, homes)
    generator = ctx.zero()
    for g in family:
        generator = generator + g
    return ReductionOutcome(family, True, is_delay_free_witness(generator), generator, homes)


def is_delay_free_witness(g: SkewPoly) -> bool:
    """support(g) equals the support of its z-free coefficient."""
    return g.support() == g.ctx.ring.support(g.zfree)


def tilde(g: SkewPoly) -> SkewPoly:
    """sum z^nu sigma^{-nu}(g_nu), an anti-isomorphism onto A[z; sigma^{-1}]."""
    ctx = g.ctx
    return SkewPoly(
        ctx.inverse_context(), [ctx.act(-nu, c) for nu, c in enumerate(g.coeffs)]
    )


def hat_skew(g: SkewPoly) -> SkewPoly:
    """sum z^nu sigma_hat^nu(theta(g_nu)) in A[z; sigma_hat]."""
    target = g.ctx.hat_context()
    ring = g.ctx.ring
    return SkewPoly(
        target, [target.act(nu, ring.theta(c)) for nu, c in enumerate(g.coeffs)]
    )


def pi_of(g: SkewPoly):
    """Product of pi_k over the support of g; it annihilates g from the left."""
    if not g:
        raise ZeroPolynomial("pi_of is undefined for zero")
    ring = g.ctx.ring
    return P.product(ring.field, [ring.factors[k - 1] for k in sorted(g.support())])


def random_unit(ctx: SkewContext, rng, max_zdeg: int = 2) -> tuple[SkewPoly, SkewPoly]:
    """A unit of A[z; sigma] and its inverse.

    Products of constant units of A and elements 1 + z^mu c with
    sigma^mu(c) c = 0, whose inverse is 1 - z^mu c.
    """
    ring = ctx.ring
    F = ring.field

    def rand_residue(k: int, nonzero: bool):
        d = ring.degrees[k - 1]
        while True:
            res = P.trim(rng.randrange(F.q) for _ in range(d))
            if res or not nonzero:
                return res

    unit = ring.crt_inverse([rand_residue(k, True) for k in range(1, ring.r + 1)])
    u, u_inv = ctx.const(unit), ctx.const(ring.unit_inverse(unit))
    for _ in range(rng.randrange(3)):
        mu = rng.randrange(1, max_zdeg + 1)
        moved = [k for k in range(1, ring.r + 1) if ctx.sigma.power(mu).target(k) != k]
        if not moved:
            continue
        k = rng.choice(moved)
        c = ring.in_component(k, rand_residue(k, False))
        factor = ctx.one() + ctx.z(mu, c)
        factor_inv = ctx.one() - ctx.z(mu, c)
        u, u_inv = factor * u, u_inv * factor_inv
    if u * u_inv != ctx.one():
        raise NotAUnit("constructed element is not a unit")
    return u, u_inv

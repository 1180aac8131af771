"""The iterative minimal polynomial / minimal realisation engine.

One pass over s_1..s_n maintains, division-free:

  * mu      -- a minimal polynomial of the prefix, with the polynomial part
               mu2 of mu * (s_1 x^-1 + ...) alongside (a minimal realisation)
  * mu'     -- the prejump pair (the realisation held just before the last
               degree jump)
  * e       -- the exponent n + 1 - 2*deg(mu), the loop's degree bookkeeping
  * nabla   -- the running product of discrepancies, never zero
  * bez     -- a coefficient pair with bez . (mu, mu') = nabla

and a per-step log of (discrepancy, exponent before the step, jumped).
The pair tilde(mu') = (-mu2', mu') satisfies tilde(mu') . (mu, mu2) = nabla,
so Bezout-style coefficients for the realisation come out of the same pass.
"""

from __future__ import annotations

from collections import namedtuple
from dataclasses import dataclass, field

from .poly import (
    PairedPoly,
    Poly,
    add_scaled,
    inner,
    pair_add_scaled,
)
from .ring import Domain, DomainError, check_same_domain
from .sequence import SequenceView

StepRecord = namedtuple("StepRecord", ["delta", "e_before", "jumped"])

MRSnapshot = namedtuple(
    "MRSnapshot",
    ["j", "e", "mu", "mu_prime", "delta_prime", "nabla", "bez", "delta", "jumped"],
)

MRResult = namedtuple(
    "MRResult", ["mu", "mu_prime", "bez_numu", "bez_fg", "nabla", "state"]
)


def discrepancy(f: Poly, s: SequenceView):
    """sum_{k=0}^{d} f_k * s_{n-d+k} with d = deg f; out-of-range terms are 0."""
    if f.is_zero():
        raise DomainError("discrepancy of the zero polynomial is undefined")
    check_same_domain(f.dom, s.dom)
    dom = f.dom
    n = len(s)
    d = f.degree()
    acc = dom.zero
    for k, c in enumerate(f.coeffs):
        if not dom.is_zero(c):
            t = s.get(n - d + k)
            if not dom.is_zero(t):
                acc = dom.add(acc, dom.mul(c, t))
    return acc


def annihilates(f: Poly, s: SequenceView) -> bool:
    """Window check: f_0 s_{j-d} + ... + f_d s_j = 0 for d+1 <= j <= n.

    The zero polynomial annihilates everything by convention.
    """
    if f.is_zero():
        return True
    check_same_domain(f.dom, s.dom)
    dom = f.dom
    d = f.degree()
    cs = f.coeffs
    for j in range(d + 1, len(s) + 1):
        acc = dom.zero
        for k in range(d + 1):
            acc = dom.add(acc, dom.mul(cs[k], s.term(j - d + k)))
        if not dom.is_zero(acc):
            return False
    return True


@dataclass
class MRState:
    """Mutable engine state; one instance per sequence being consumed."""

    dom: Domain
    epsilon: object
    j: int = 0
    e: int = 1
    mu: PairedPoly = None
    mu_prime: PairedPoly = None
    delta_prime: object = None
    nabla: object = None
    bez: PairedPoly = None
    steps: list = field(default_factory=list)
    terms: list = field(default_factory=list)
    count_mults: bool = False
    mults: int = 0

    @property
    def lc(self) -> int:
        return self.mu.f.degree()

    @property
    def last_jump_index(self) -> int:
        """The index function value j' at the current j (or -1)."""
        for j in range(len(self.steps), 0, -1):
            if self.steps[j - 1].jumped:
                return j - 1
        return -1

    def snapshot(self) -> MRSnapshot:
        last = self.steps[-1] if self.steps else None
        return MRSnapshot(
            self.j,
            self.e,
            self.mu,
            self.mu_prime,
            self.delta_prime,
            self.nabla,
            self.bez,
            last.delta if last else self.dom.one,
            last.jumped if last else False,
        )

    def sequence(self) -> SequenceView:
        return SequenceView(self.dom, self.terms)


def mr_init(dom: Domain, epsilon=None) -> MRState:
    """Initial state: mu' = (eps, -1), delta' = 1, e = 1, mu = (1, 0), nabla = 1."""
    if epsilon is None:
        epsilon = dom.zero
    else:
        epsilon = dom.coerce(epsilon)
    st = MRState(dom=dom, epsilon=epsilon)
    st.mu = PairedPoly(Poly.one(dom), Poly.zero(dom))
    st.mu_prime = PairedPoly(
        Poly.constant(dom, epsilon), Poly.constant(dom, dom.neg(dom.one))
    )
    st.delta_prime = dom.one
    st.nabla = dom.one
    st.bez = PairedPoly(Poly.one(dom), Poly.zero(dom))
    return st


def mr_step(st: MRState, s_next) -> MRState:
    """Consume one term: update mu, mu', bez and nabla in place."""
    dom = st.dom
    s_next = dom.coerce(s_next)
    st.terms.append(s_next)
    j = st.j + 1
    e = st.e
    e_before = e

    # Delta = sum_{k=0}^{(j-e)/2} mu_k s_{k+(j+e)/2}
    base = (j + e) // 2
    mu_coeffs = st.mu.f.coeffs
    terms = st.terms
    acc = dom.zero
    for k in range(0, (j - e) // 2 + 1):
        if k < len(mu_coeffs):
            c = mu_coeffs[k]
            if not dom.is_zero(c):
                t = terms[base + k - 1]
                if not dom.is_zero(t):
                    acc = dom.add(acc, dom.mul(c, t))
                    if st.count_mults:
                        st.mults += 1
    delta = acc

    jumped = False
    if not dom.is_zero(delta):
        dp = st.delta_prime
        neg_delta = dom.neg(delta)
        if e <= 0:
            st.mu = pair_add_scaled(dp, 0, st.mu, neg_delta, -e, st.mu_prime)
            st.bez = PairedPoly(
                st.bez.f, add_scaled(dp, 0, st.bez.f2, delta, -e, st.bez.f)
            )
            st.nabla = dom.mul(dp, st.nabla)
        else:
            jumped = True
            prev = st.mu
            st.mu = pair_add_scaled(dp, e, st.mu, neg_delta, 0, st.mu_prime)
            st.mu_prime = prev
            st.bez = PairedPoly(
                -st.bez.f2, add_scaled(dp, e, st.bez.f2, delta, 0, st.bez.f)
            )
            st.nabla = dom.mul(delta, st.nabla)
            st.delta_prime = delta
            e = -e
        if st.count_mults:
            # two scalar-times-polynomial products per pair component update
            st.mults += 2 * (len(st.mu.f.coeffs) + len(st.mu.f2.coeffs))
    st.e = e + 1
    st.j = j
    st.steps.append(StepRecord(delta, e_before, jumped))
    return st


def run(s: SequenceView, epsilon=None, count_mults: bool = False) -> MRState:
    """Fold the engine over a whole sequence."""
    st = mr_init(s.dom, epsilon)
    st.count_mults = count_mults
    for t in s:
        mr_step(st, t)
    return st


def mr_scan(s: SequenceView, epsilon=None):
    """Snapshots of the state after each step j = 1..n."""
    st = mr_init(s.dom, epsilon)
    out = []
    for t in s:
        mr_step(st, t)
        out.append(st.snapshot())
    return out


def minimal_polynomial(s: SequenceView, epsilon=None) -> Poly:
    """A minimal polynomial of s (not normalized monic)."""
    if len(s) < 1:
        raise ValueError("empty sequence")
    return run(s, epsilon).mu.f


def minimal_realisation(s: SequenceView, epsilon=None) -> MRResult:
    """One pass: realisation, prejump pair, and both Bezout coefficient pairs.

    bez_numu = tilde(mu') pairs with (mu, mu2); bez_fg pairs with (mu, mu').
    Both inner products equal nabla exactly.
    """
    if len(s) < 1:
        raise ValueError("empty sequence")
    st = run(s, epsilon)
    return MRResult(
        mu=st.mu,
        mu_prime=st.mu_prime,
        bez_numu=st.mu_prime.tilde(),
        bez_fg=st.bez,
        nabla=st.nabla,
        state=st,
    )


def lc_profile(s: SequenceView, epsilon=None):
    """LC_1..LC_n (degrees of prefix minimal polynomials), non-decreasing."""
    st = mr_init(s.dom, epsilon)
    out = []
    for t in s:
        mr_step(st, t)
        out.append(st.mu.f.degree())
    return out


def next_identity(st_before: MRState, delta):
    """Coefficients for (mu^(n-1), mu^(n)) at a jump step.

    Requires e_{n-1} > 0 and delta != 0; returns (coeffs, nabla_n) with
    coeffs . (mu^(n-1), mu^(n)) = nabla_n.
    """
    dom = st_before.dom
    delta = dom.coerce(delta)
    e = st_before.e
    if e <= 0:
        raise ValueError("identity requires a positive exponent before the step")
    if dom.is_zero(delta):
        raise ValueError("identity requires a nonzero discrepancy")
    f = st_before.bez.f
    f2 = st_before.bez.f2
    dp = st_before.delta_prime
    first = add_scaled(delta, 0, f, dp, e, f2)
    coeffs = PairedPoly(first, -f2)
    nabla_n = dom.mul(delta, st_before.nabla)
    return coeffs, nabla_n


def verify_identity(a: PairedPoly, b: PairedPoly, expected) -> bool:
    """True iff a.f*b.f + a.f2*b.f2 equals the constant `expected`."""
    check_same_domain(a.dom, b.dom)
    return inner(a, b).eq_constant(expected)


def normalize_monic(result: MRResult) -> MRResult:
    """Rescale the realisation monic (fields only), keeping identities exact.

    mu-bar and nabla divide by lead(mu); bez_numu still pairs with the monic
    realisation, and bez_fg's second component rescales to keep the
    (mu, mu') identity at the rescaled nabla.
    """
    dom = result.mu.dom
    if not dom.is_field:
        raise DomainError("monic normalization requires a field")
    c = dom.inv(result.mu.f.lead())
    mu = result.mu.scale(c)
    nabla = dom.mul(c, result.nabla)
    bez_fg = PairedPoly(result.bez_fg.f, result.bez_fg.f2.scale(c))
    return MRResult(
        mu=mu,
        mu_prime=result.mu_prime,
        bez_numu=result.bez_numu,
        bez_fg=bez_fg,
        nabla=nabla,
        state=result.state,
    )


# -- bit-packed GF(2) fast path ---------------------------------------


def mr_gf2_bits(seq_bits: int, n: int):
    """GF(2) realisation with polynomials as bit-packed ints (epsilon = 0).

    seq_bits holds s_i at bit i-1.  Returns (mu, mu2, mu', mu2', e) with the
    same semantics as the generic engine; over GF(2) every nonzero scalar is
    1 so nabla = 1 throughout.  Used by the benchmark path and exhaustive
    scans; tested to agree with the generic engine.
    """
    mu, mu2 = 1, 0
    mup, mup2 = 0, 1
    e = 1
    for j in range(1, n + 1):
        shift = (j + e) // 2 - 1
        if (mu & (seq_bits >> shift)).bit_count() & 1:
            if e <= 0:
                mu ^= mup << -e
                mu2 ^= mup2 << -e
            else:
                mu, mup = (mu << e) ^ mup, mu
                mu2, mup2 = (mu2 << e) ^ mup2, mu2
                e = -e
        e += 1
    return mu, mu2, mup, mup2, e


def poly_from_bits(dom: Domain, bits: int) -> Poly:
    return Poly(dom, [(bits >> k) & 1 for k in range(bits.bit_length())])


def bits_from_sequence(s: SequenceView) -> int:
    bits = 0
    for i, t in enumerate(s):
        if t:
            bits |= 1 << i
    return bits

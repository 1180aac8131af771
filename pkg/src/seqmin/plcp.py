"""Perfect linear-complexity-profile predicates and the binary criterion.

A sequence has a perfect profile when LC_j = floor((j+1)/2) for every
prefix; equivalently every odd-step discrepancy is nonzero, equivalently
the exponent alternates 1, 0, 1, 0, ...  Over GF(2) the profile is perfect
exactly when s_1 = 1 and s_{j+1} = s_j + s_{j/2} for even j.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lfsr import discrepancy, mr_init, mr_step, run
from .poly import PairedPoly, Poly, mul, pair_add_scaled
from .ring import DomainError, GF2, GFp
from .sequence import SequenceView


@dataclass(frozen=True)
class PlcpReport:
    is_plcp: bool
    profile: tuple
    odd_discrepancies: tuple
    exponent_trace: tuple


def is_plcp(s: SequenceView) -> PlcpReport:
    """Evaluate all three perfect-profile criteria and cross-check them."""
    if len(s) < 1:
        raise ValueError("empty sequence")
    dom = s.dom
    st = run(s)
    profile = tuple(snap for snap in _profile_of(st))
    odd = tuple(st.steps[j - 1].delta for j in range(1, len(s) + 1, 2))
    etrace = tuple(_exponents_of(st))
    by_profile = all(lc == (j + 1) // 2 for j, lc in enumerate(profile, start=1))
    by_delta = all(not dom.is_zero(d) for d in odd)
    by_exponent = all(
        e == (1 if j % 2 == 0 else 0) for j, e in enumerate(etrace, start=1)
    )
    if not (by_profile == by_delta == by_exponent):
        raise AssertionError("perfect-profile criteria disagree")
    return PlcpReport(by_profile, profile, odd, etrace)


def _profile_of(st):
    # replay degrees from the step log: LC_j = (j + 1 - e_j) / 2
    for j, rec in enumerate(st.steps, start=1):
        e_after = _e_after(rec)
        yield (j + 1 - e_after) // 2


def _e_after(rec):
    return (-rec.e_before if rec.jumped else rec.e_before) + 1


def _exponents_of(st):
    for rec in st.steps:
        yield _e_after(rec)


def count_plcp(q: int, n: int) -> int:
    """(q-1)^ceil(n/2) * q^floor(n/2): perfect-profile sequences in GF(q)^n."""
    if q < 2 or n < 1:
        raise ValueError("need q >= 2 and n >= 1")
    return (q - 1) ** ((n + 1) // 2) * q ** (n // 2)


def is_stable(s: SequenceView) -> bool:
    """s_1 = 1 and s_{j+1} = s_j + s_{j/2} for even j < n (binary only)."""
    if not isinstance(s.dom, GF2):
        raise DomainError("stability is defined for binary sequences")
    n = len(s)
    if n < 1:
        raise ValueError("empty sequence")
    if s.term(1) != 1:
        return False
    for j in range(2, n, 2):
        if s.term(j + 1) != (s.term(j) + s.term(j // 2)) % 2:
            return False
    return True


def plcp_bits(sbits: int, n: int) -> bool:
    """Perfect-profile test for a bit-packed binary sequence, early exit."""
    mu, mup = 1, 0
    e = 1
    for j in range(1, n + 1):
        nz = (mu & (sbits >> ((j + e) // 2 - 1))).bit_count() & 1
        if j % 2 == 1:
            if not nz:
                return False
        if nz:
            if e <= 0:
                mu ^= mup << -e
            else:
                mu, mup = (mu << e) ^ mup, mu
                e = -e
        e += 1
    return True


def stable_bits(sbits: int, n: int) -> bool:
    if n < 1 or not sbits & 1:
        return False
    for j in range(2, n, 2):
        if ((sbits >> j) ^ (sbits >> (j - 1)) ^ (sbits >> (j // 2 - 1))) & 1:
            return False
    return True


def plcp_mr_specialized(s: SequenceView) -> PairedPoly:
    """Realisation of a perfect-profile sequence by the short recursion.

    Uses only the two-term updates available when every odd discrepancy is
    nonzero (odd j: Delta_{j-2}*x*prev - Delta_j*third-back; even j:
    Delta_{j-1}*prev - Delta_j*second-back), then checks the result against
    the general engine.
    """
    dom = s.dom
    n = len(s)
    if n < 1:
        raise ValueError("empty sequence")
    hist = {0: PairedPoly(Poly.one(dom), Poly.zero(dom))}
    hist[-1] = PairedPoly(Poly.zero(dom), Poly.constant(dom, dom.neg(dom.one)))
    hist[-2] = hist[-1]  # only the j=1 step reads below index 0
    deltas = {0: dom.one}
    for j in range(1, n + 1):
        prev = hist[j - 1]
        d = discrepancy(prev.f, s.prefix(j))
        deltas[j] = d
        if j % 2 == 1:
            if dom.is_zero(d):
                raise DomainError("sequence does not have a perfect profile")
            dp = deltas.get(j - 2, dom.one) if j > 1 else dom.one
            hist[j] = pair_add_scaled(dp, 1, prev, dom.neg(d), 0, hist[j - 3])
        else:
            if dom.is_zero(d):
                hist[j] = prev
            else:
                hist[j] = pair_add_scaled(
                    deltas[j - 1], 0, prev, dom.neg(d), 0, hist[j - 2]
                )
    result = hist[n]
    general = run(s).mu
    if result != general:
        raise AssertionError("specialized recursion diverged from the engine")
    return result


def random_plcp_sequence(dom: GFp, n: int, rng) -> SequenceView:
    """Draw a perfect-profile sequence over GF(p) uniformly.

    Inverts the discrepancy relation term by term: the free choices are a
    nonzero discrepancy at each odd step and an arbitrary one at each even
    step, and each choice pins s_j since lead(mu) multiplies s_j.
    """
    if not isinstance(dom, GFp):
        raise DomainError("perfect-profile sampling needs a prime field")
    st = mr_init(dom)
    terms = []
    for j in range(1, n + 1):
        e = st.e
        # Delta_j = partial + lead(mu) * s_j; solve for s_j
        base = (j + e) // 2
        top = (j - e) // 2
        mu = st.mu.f
        partial = dom.zero
        for k in range(0, top):
            c = mu.coeff(k)
            if not dom.is_zero(c) and base + k <= len(terms):
                partial = dom.add(partial, dom.mul(c, terms[base + k - 1]))
        if j % 2 == 1:
            target = rng.randrange(1, dom.p)
        else:
            target = rng.randrange(dom.p)
        s_j = dom.mul(dom.inv(mu.lead()), dom.sub(target, partial))
        terms.append(s_j)
        mr_step(st, s_j)
        if not st.steps[-1].delta == target:
            raise AssertionError("discrepancy inversion failed")
    return SequenceView(dom, terms)


def check_stable_theorem(n: int) -> bool:
    """Exhaustive GF(2) check that perfect profile == stability at length n.

    Also asserts the count (q-1)^ceil(n/2) * q^floor(n/2) and, along every
    perfect-profile sequence, the invariants sigma_0 = 1 and sigma_2 = 0
    for sigma = nu^2 + (x+1)*nu*mu + mu^2 with nu the prejump polynomial,
    plus the vanishing of s_{j+1} + s_j + s_{j/2} at even j.
    """
    if not 1 <= n <= 18:
        raise ValueError("exhaustive check supports 1 <= n <= 18")
    dom = GF2()
    found = 0
    for sbits in range(1 << n):
        p = plcp_bits(sbits, n)
        if p != stable_bits(sbits, n):
            return False
        if p:
            found += 1
            _check_sigma(dom, sbits, n)
    return found == count_plcp(2, n)


def _check_sigma(dom, sbits, n):
    s = SequenceView(dom, [(sbits >> i) & 1 for i in range(n)])
    x1 = Poly(dom, (1, 1))
    st = mr_init(dom)
    for t in s:
        mr_step(st, t)
        mu, nu = st.mu.f, st.mu.f2
        sigma = mul(nu, nu) + mul(mul(x1, nu), mu) + mul(mu, mu)
        if sigma.coeff(0) != 1 or sigma.coeff(2) != 0:
            raise AssertionError("sigma invariant failed")
    # t-series terms at even negative indices vanish for stable sequences
    for j in range(2, n, 2):
        if (s.term(j // 2) + s.term(j + 1) + s.term(j)) % 2 != 0:
            raise AssertionError("auxiliary series term nonzero at even index")

"""Annihilators with nonzero constant term.

When the minimal polynomial mu of s has mu_0 = 0 it cannot seed an LFSR
whose last cell feeds back, so one asks for the least degree LC* among
annihilators with a nonzero constant term.  LC* is LC itself unless the
exponent is positive and mu_0 = 0, in which case it is n + 1 - LC; members
are built from (mu, mu') without re-running the engine, or by extending
the sequence one term to force a jump.
"""

from __future__ import annotations

from collections import namedtuple

from .lfsr import annihilates, mr_step, run
from .poly import PairedPoly, Poly, inner, pair_add_scaled, pseudo_divide
from .ring import DomainError
from .sequence import SequenceView

ExtendResult = namedtuple("ExtendResult", ["s_next", "mu_ext", "nabla"])

CharResult = namedtuple("CharResult", ["q", "r", "scale", "verdict"])


def lc_bullet(s: SequenceView, epsilon=None) -> int:
    """Least degree of an annihilator with nonzero constant term."""
    st = _run_nonzero(s, epsilon)
    lc = st.mu.f.degree()
    if st.e <= 0 or not s.dom.is_zero(st.mu.f.constant_term()):
        return lc
    return len(s) + 1 - lc


def min_nonvanishing(s: SequenceView, epsilon=None) -> PairedPoly:
    """A least-degree realisation pair whose first entry has nonzero f_0.

    mu itself when mu_0 != 0; otherwise mu + mu' (exponent <= 0) or
    x^e * mu + mu' (exponent e > 0).
    """
    st = _run_nonzero(s, epsilon)
    dom = s.dom
    if not dom.is_zero(st.mu.f.constant_term()):
        out = st.mu
    elif st.e <= 0:
        out = st.mu + st.mu_prime
    else:
        out = pair_add_scaled(dom.one, st.e, st.mu, dom.one, 0, st.mu_prime)
    if dom.is_zero(out.f.constant_term()):
        raise AssertionError("constant term still vanishes")
    if out.f.degree() != lc_bullet(s, epsilon):
        raise AssertionError("degree does not meet the minimum")
    return out


def mr_bullet_family(s: SequenceView, q: Poly, a, epsilon=None) -> PairedPoly:
    """The member q*mu + a*mu' (exponent > 0) or mu + a*mu' (exponent <= 0).

    Requires mu_0 = 0 and a != 0; when the exponent e is positive q must
    have degree exactly e, otherwise q is ignored (pass None or 1).  The
    exact pairings tilde(mu') . result = nabla (e <= 0) and
    tilde(mu) . result = -a * nabla (e > 0) are asserted before returning.
    """
    st = _run_nonzero(s, epsilon)
    dom = s.dom
    a = dom.coerce(a)
    if dom.is_zero(a):
        raise DomainError("a must be nonzero")
    if not dom.is_zero(st.mu.f.constant_term()):
        raise DomainError("mu already has a nonzero constant term")
    e = st.e
    if e > 0:
        if q is None or q.is_zero() or q.degree() != e:
            raise DomainError("q must have degree %d" % e)
        out = PairedPoly(
            q * st.mu.f + st.mu_prime.f.scale(a),
            q * st.mu.f2 + st.mu_prime.f2.scale(a),
        )
        check = inner(st.mu.tilde(), out)
        if not check.eq_constant(dom.neg(dom.mul(a, st.nabla))):
            raise AssertionError("pairing identity failed")
    else:
        out = st.mu + st.mu_prime.scale(a)
        check = inner(st.mu_prime.tilde(), out)
        if not check.eq_constant(st.nabla):
            raise AssertionError("pairing identity failed")
    if dom.is_zero(out.f.constant_term()):
        raise AssertionError("constant term vanishes")
    return out


def extend_by_jump(s: SequenceView, epsilon=None, f_prime: Poly = None) -> ExtendResult:
    """Append one term forcing a jump, yielding a nonzero constant term.

    Requires exponent e > 0 and mu_0 = 0.  The appended s_{n+1} makes the
    next discrepancy nonzero (1 over a field, via the leading coefficient;
    the smallest workable value otherwise), and the new realisation --
    optionally shifted by f_prime * mu with deg(f_prime) <= e - 1 -- lies
    in the nonzero-constant-term family of both the extended and the
    original sequence.
    """
    st = _run_nonzero(s, epsilon)
    dom = s.dom
    e = st.e
    if e <= 0:
        raise DomainError("exponent must be positive")
    if not dom.is_zero(st.mu.f.constant_term()):
        raise DomainError("mu already has a nonzero constant term")
    if f_prime is not None and not f_prime.is_zero() and f_prime.degree() > e - 1:
        raise DomainError("deg(f_prime) must be at most %d" % (e - 1))
    n = len(s)
    mu = st.mu.f
    lead = mu.lead()
    # discrepancy of the extended prefix: c + lead(mu) * s_{n+1}
    base = (n + 1 + e) // 2
    c = dom.zero
    for k in range(0, (n + 1 - e) // 2):
        coeff = mu.coeff(k)
        if not dom.is_zero(coeff):
            c = dom.add(c, dom.mul(coeff, s.term(base + k)))
    if dom.is_field:
        s_next = dom.mul(dom.inv(lead), dom.sub(dom.one, c))
    else:
        s_next = dom.zero if not dom.is_zero(c) else dom.one
    prev_mu = st.mu
    mr_step(st, s_next)
    if not st.steps[-1].jumped:
        raise AssertionError("appended term did not force a jump")
    out = st.mu
    if f_prime is not None and not f_prime.is_zero():
        out = PairedPoly(
            out.f + f_prime * prev_mu.f, out.f2 + f_prime * prev_mu.f2
        )
    if dom.is_zero(out.f.constant_term()):
        raise AssertionError("constant term vanishes")
    if not inner(prev_mu.tilde(), out).eq_constant(st.nabla):
        raise AssertionError("pairing identity failed")
    return ExtendResult(s_next=s_next, mu_ext=out, nabla=st.nabla)


def char_decompose(f: Poly, s: SequenceView, epsilon=None) -> CharResult:
    """Pseudo-divide f by mu and test least-degree membership.

    Preconditions: n >= 2, mu_0 = 0, exponent > 0, f_0 != 0 and f
    annihilates s.  The verdict is true exactly when deg(f) = n + 1 - LC,
    the last jump happened at step >= 2, and the pseudo-remainder r has
    nonzero constant term and minimal degree among annihilators of the
    prefix up to that jump's predecessor.
    """
    st = _run_nonzero(s, epsilon)
    dom = s.dom
    n = len(s)
    if n < 2:
        raise DomainError("need at least two terms")
    if st.e <= 0:
        raise DomainError("exponent must be positive")
    if not dom.is_zero(st.mu.f.constant_term()):
        raise DomainError("mu must have zero constant term")
    if dom.is_zero(f.constant_term()):
        raise DomainError("f must have a nonzero constant term")
    if not annihilates(f, s):
        raise DomainError("f does not annihilate the sequence")
    lc = st.mu.f.degree()
    q, r, scale = pseudo_divide(f, st.mu.f)
    n_prime = st.last_jump_index
    verdict = (
        f.degree() == n + 1 - lc
        and n_prime >= 1
        and not r.is_zero()
        and not dom.is_zero(r.constant_term())
        and _is_minimal_annihilator(r, s.prefix(n_prime))
    )
    return CharResult(q=q, r=r, scale=scale, verdict=verdict)


def _is_minimal_annihilator(r: Poly, s: SequenceView) -> bool:
    if not annihilates(r, s):
        return False
    return r.degree() == run(s).mu.f.degree()


def _run_nonzero(s: SequenceView, epsilon):
    if len(s) < 1 or s.is_zero():
        raise ValueError("sequence must have a nonzero term")
    return run(s, epsilon)

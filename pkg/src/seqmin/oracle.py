"""Independent reference implementations used only by the test suite.

Nothing here is imported by the production modules.  The brute-force
annihilator search enumerates polynomials by ascending degree and checks
the defining windows directly; the extended Euclidean routine is the
classical division-based algorithm over a field.
"""

from __future__ import annotations

from itertools import product

from .poly import Poly, divmod_field
from .ring import Domain, DomainError, GFp
from .sequence import SequenceView

# search limits keeping the q^(d+1) enumeration affordable
_MAX_N = {2: 12, 3: 8}


def brute_min_annihilator(s: SequenceView, require_nonzero_constant: bool = False):
    """Smallest-degree annihilator set of a sequence over GF(p).

    Returns (degree, polys, any_nonzero_constant_term) where polys is the
    set of all annihilators of minimal degree d (each with nonzero lead),
    found by enumerating every coefficient vector of each degree in turn.
    With the flag set, the search is restricted to candidates with a
    nonzero constant term.
    """
    dom = s.dom
    if not isinstance(dom, GFp):
        raise DomainError("brute-force search only supports prime fields")
    p = dom.p
    n = len(s)
    if n > _MAX_N.get(p, 0):
        raise DomainError("sequence too long for brute force over GF(%d)" % p)
    if s.is_zero():
        return 0, {Poly.constant(dom, c) for c in range(1, p)}, True
    if p == 2:
        return _brute_gf2(dom, s, require_nonzero_constant)
    return _brute_gfp(dom, s, require_nonzero_constant)


def _windows_ok(dom, coeffs, d, s):
    for j in range(d + 1, len(s) + 1):
        acc = dom.zero
        for k in range(d + 1):
            acc = dom.add(acc, dom.mul(coeffs[k], s.term(j - d + k)))
        if not dom.is_zero(acc):
            return False
    return True


def _brute_gfp(dom, s, star):
    n = len(s)
    for d in range(0, n + 1):
        found = set()
        for tail in product(range(dom.p), repeat=d):
            if star and d > 0 and tail[0] == 0:
                continue
            for lead in range(1, dom.p):
                coeffs = tail + (lead,)
                # d = n has no windows: everything annihilates vacuously
                if d >= n or _windows_ok(dom, coeffs, d, s):
                    found.add(Poly(dom, coeffs))
        if found:
            return d, found, any(f.coeff(0) != 0 for f in found)
    raise AssertionError("unreachable")


def _brute_gf2(dom, s, star):
    """Bit-packed GF(2) path: candidate and sequence windows as ints."""
    n = len(s)
    sbits = 0
    for i, t in enumerate(s):
        if t:
            sbits |= 1 << i
    for d in range(0, n + 1):
        found = set()
        for tail in range(1 << d):
            if star and d > 0 and not tail & 1:
                continue
            cand = tail | (1 << d)
            ok = True
            for j in range(d + 1, n + 1):
                # window s_{j-d}..s_j sits at bits j-d-1..j-1
                if (cand & (sbits >> (j - d - 1))).bit_count() & 1:
                    ok = False
                    break
            if ok:
                found.add(_poly_bits(dom, cand))
        if found:
            return d, found, any(f.coeff(0) != 0 for f in found)
    raise AssertionError("unreachable")


def _poly_bits(dom, bits):
    return Poly(dom, [(bits >> k) & 1 for k in range(bits.bit_length())])


def ext_euclid(u: Poly, u2: Poly):
    """Classical extended gcd over a field: (g, a, b) with a*u + b*u2 = g monic.

    Conventions: gcd(u, 0) = monic u with (lead(u)^-1, 0); when the inputs
    are equal the first argument wins the same way.
    """
    dom = u.dom
    if not dom.is_field:
        raise DomainError("extended gcd requires a field")
    if u.is_zero() and u2.is_zero():
        raise DomainError("gcd(0, 0) is undefined")
    if u2.is_zero() or u == u2:
        c = dom.inv(u.lead())
        return u.scale(c), Poly.constant(dom, c), Poly.zero(dom)
    if u.is_zero():
        c = dom.inv(u2.lead())
        return u2.scale(c), Poly.zero(dom), Poly.constant(dom, c)
    r0, r1 = u, u2
    a0, a1 = Poly.one(dom), Poly.zero(dom)
    b0, b1 = Poly.zero(dom), Poly.one(dom)
    while not r1.is_zero():
        q, r = divmod_field(r0, r1)
        r0, r1 = r1, r
        a0, a1 = a1, a0 - q * a1
        b0, b1 = b1, b0 - q * b1
    c = dom.inv(r0.lead())
    return r0.scale(c), a0.scale(c), b0.scale(c)

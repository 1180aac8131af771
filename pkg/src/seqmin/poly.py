"""Dense univariate polynomials over a domain, ascending coefficients.

Also provides the Laurent-side helpers the sequence machinery needs:
reciprocal, x-adic valuation, the polynomial part of f * (s_1 x^-1 + ...),
the prefix of the series u2/u, and pseudo-division.
"""

from __future__ import annotations

from .ring import Domain, DomainError, check_same_domain
from .sequence import SequenceView, _split_terms


class Poly:
    """Canonical dense polynomial: empty coeffs = 0, otherwise lead != 0."""

    __slots__ = ("dom", "coeffs")

    def __init__(self, dom: Domain, coeffs=(), _canonical=False):
        object.__setattr__(self, "dom", dom)
        if _canonical:
            object.__setattr__(self, "coeffs", tuple(coeffs))
            return
        cs = [dom.coerce(c) for c in coeffs]
        while cs and dom.is_zero(cs[-1]):
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, dom):
        return cls(dom, (), _canonical=True)

    @classmethod
    def one(cls, dom):
        return cls(dom, (dom.one,), _canonical=True)

    @classmethod
    def x(cls, dom):
        return cls(dom, (dom.zero, dom.one), _canonical=True)

    @classmethod
    def constant(cls, dom, c):
        return cls(dom, (c,))

    @classmethod
    def monomial(cls, dom, c, k: int):
        return cls(dom, (dom.zero,) * k + (c,))

    # -- basics -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self):
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def coeff(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.dom.zero

    def lead(self):
        if not self.coeffs:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant_term(self):
        return self.coeff(0)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.dom.one

    def x_valuation(self) -> int:
        """Largest k with x^k | f; rejects the zero polynomial."""
        if not self.coeffs:
            raise DomainError("x-adic valuation of 0 is undefined")
        for k, c in enumerate(self.coeffs):
            if not self.dom.is_zero(c):
                return k
        raise AssertionError("non-canonical polynomial")

    def reciprocal(self) -> "Poly":
        """x^deg(f) * f(1/x); the reciprocal of 0 is 0."""
        return Poly(self.dom, self.coeffs[::-1])

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        return add_scaled(self.dom.one, 0, self, self.dom.one, 0, other)

    def __sub__(self, other):
        return add_scaled(self.dom.one, 0, self, self.dom.neg(self.dom.one), 0, other)

    def __neg__(self):
        return Poly(self.dom, [self.dom.neg(c) for c in self.coeffs], _canonical=True)

    def scale(self, c) -> "Poly":
        dom = self.dom
        if dom.is_zero(c):
            return Poly.zero(dom)
        return Poly(dom, [dom.mul(c, a) for a in self.coeffs])

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k, k >= 0."""
        if k < 0:
            raise ValueError("negative shift")
        if not self.coeffs:
            return self
        return Poly(self.dom, (self.dom.zero,) * k + self.coeffs, _canonical=True)

    def __mul__(self, other):
        return mul(self, other)

    def monic(self) -> "Poly":
        """Divide by the leading coefficient (fields only)."""
        return self.scale(self.dom.inv(self.lead()))

    def divide_exact(self, other: "Poly") -> "Poly":
        """Exact quotient over a field; raises if the division has a remainder."""
        q, r = divmod_field(self, other)
        if not r.is_zero():
            raise DomainError("division is not exact")
        return q

    def eq_constant(self, c) -> bool:
        c = self.dom.coerce(c)
        if self.dom.is_zero(c):
            return self.is_zero()
        return self.degree() == 0 and self.coeffs[0] == c

    def __eq__(self, other):
        return isinstance(other, Poly) and self.dom == other.dom and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.dom, self.coeffs))

    def __repr__(self):
        return "Poly(%s, %s)" % (self.dom.descriptor(), format_poly(self))


def add_scaled(a, e: int, f: Poly, b, e2: int, g: Poly) -> Poly:
    """a * x^e * f + b * x^e2 * g, canonical."""
    check_same_domain(f.dom, g.dom)
    dom = f.dom
    n = max(len(f.coeffs) + e, len(g.coeffs) + e2)
    out = [dom.zero] * n
    if not dom.is_zero(a):
        for k, c in enumerate(f.coeffs):
            if not dom.is_zero(c):
                out[k + e] = dom.mul(a, c)
    if not dom.is_zero(b):
        for k, c in enumerate(g.coeffs):
            if not dom.is_zero(c):
                out[k + e2] = dom.add(out[k + e2], dom.mul(b, c))
    return Poly(dom, out)


def mul(f: Poly, g: Poly) -> Poly:
    check_same_domain(f.dom, g.dom)
    dom = f.dom
    if f.is_zero() or g.is_zero():
        return Poly.zero(dom)
    out = [dom.zero] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, c in enumerate(f.coeffs):
        if dom.is_zero(c):
            continue
        for j, d in enumerate(g.coeffs):
            if not dom.is_zero(d):
                out[i + j] = dom.add(out[i + j], dom.mul(c, d))
    return Poly(dom, out, _canonical=True)


def divmod_field(f: Poly, g: Poly):
    """(q, r) with f = q*g + r, deg r < deg g; requires a field and g != 0."""
    dom = f.dom
    check_same_domain(dom, g.dom)
    if g.is_zero():
        raise DomainError("division by the zero polynomial")
    if not dom.is_field:
        raise DomainError("polynomial division needs a field; use pseudo_divide")
    inv_lead = dom.inv(g.lead())
    r = list(f.coeffs)
    dg = g.degree()
    q = [dom.zero] * max(len(f.coeffs) - dg, 0)
    for k in range(len(r) - 1 - dg, -1, -1):
        c = r[k + dg]
        if dom.is_zero(c):
            continue
        t = dom.mul(c, inv_lead)
        q[k] = t
        for i, gc in enumerate(g.coeffs):
            r[k + i] = dom.sub(r[k + i], dom.mul(t, gc))
    return Poly(dom, q), Poly(dom, r)


def pseudo_divide(f: Poly, g: Poly):
    """(q, r, scale) with scale*f = q*g + r and r = 0 or deg r < deg g.

    scale = lead(g)^(deg f - deg g + 1) when deg f >= deg g, else the
    trivial (0, f, 1).  Division-free, so valid over any integral domain.
    """
    dom = f.dom
    check_same_domain(dom, g.dom)
    if g.is_zero():
        raise DomainError("pseudo-division by the zero polynomial")
    if f.is_zero() or f.degree() < g.degree():
        return Poly.zero(dom), f, dom.one
    ell = g.lead()
    dg = g.degree()
    q = Poly.zero(dom)
    r = f
    for k in range(f.degree() - dg, -1, -1):
        if r.degree() is not None and r.degree() == dg + k:
            t = r.lead()
            q = add_scaled(ell, 0, q, t, k, Poly.one(dom))
            r = add_scaled(ell, 0, r, dom.neg(t), k, g)
        else:
            q = q.scale(ell)
            r = r.scale(ell)
    scale = dom.pow(ell, f.degree() - dg + 1)
    return q, r, scale


class PairedPoly:
    """A pair (f, f2) of polynomials over one domain."""

    __slots__ = ("f", "f2")

    def __init__(self, f: Poly, f2: Poly):
        check_same_domain(f.dom, f2.dom)
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "f2", f2)

    def __setattr__(self, name, value):
        raise AttributeError("PairedPoly is immutable")

    @property
    def dom(self):
        return self.f.dom

    def tilde(self) -> "PairedPoly":
        """(f, f2) -> (-f2, f)."""
        return PairedPoly(-self.f2, self.f)

    def scale(self, c) -> "PairedPoly":
        return PairedPoly(self.f.scale(c), self.f2.scale(c))

    def __add__(self, other):
        return PairedPoly(self.f + other.f, self.f2 + other.f2)

    def __eq__(self, other):
        return isinstance(other, PairedPoly) and self.f == other.f and self.f2 == other.f2

    def __hash__(self):
        return hash((self.f, self.f2))

    def __repr__(self):
        return "(%s, %s)" % (format_poly(self.f), format_poly(self.f2))


def pair_add_scaled(a, e: int, p: PairedPoly, b, e2: int, q: PairedPoly) -> PairedPoly:
    """a * x^e * p + b * x^e2 * q, componentwise."""
    return PairedPoly(
        add_scaled(a, e, p.f, b, e2, q.f),
        add_scaled(a, e, p.f2, b, e2, q.f2),
    )


def inner(p: PairedPoly, q: PairedPoly) -> Poly:
    """The inner product p.f * q.f + p.f2 * q.f2."""
    return mul(p.f, q.f) + mul(p.f2, q.f2)


def scale_pair_poly(g: Poly, p: PairedPoly) -> PairedPoly:
    """Polynomial multiple g * p, componentwise."""
    return PairedPoly(mul(g, p.f), mul(g, p.f2))


# -- sequence-facing helpers -----------------------------------------


def poly_part(f: Poly, s: SequenceView) -> Poly:
    """The polynomial summand of f * (s_1 x^-1 + ... + s_n x^-n).

    Coefficient j of the Laurent product is sum_i f_{j+i} * s_i; the
    polynomial part keeps exponents 0 .. v + deg f where v = -(index of the
    first nonzero term).  Zero for f = 0 or an all-zero sequence.
    """
    check_same_domain(f.dom, s.dom)
    dom = f.dom
    first = s.first_nonzero_index()
    if f.is_zero() or first is None:
        return Poly.zero(dom)
    top = f.degree() - first
    out = []
    for j in range(0, top + 1):
        acc = dom.zero
        for i in range(1, len(s) + 1):
            if j + i <= f.degree():
                acc = dom.add(acc, dom.mul(f.coeff(j + i), s.term(i)))
        out.append(acc)
    return Poly(dom, out)


def series_prefix(u2: Poly, u: Poly, m: int) -> SequenceView:
    """First m terms of the expansion u2/u = sum_{j>=1} s_j x^-j.

    Requires u monic with deg(u2) < deg(u) = d >= 1.  Uses the recurrence
    s_j = (u2)_{d-j} - sum_{i=1}^{j-1} u_{d-i} * s_{j-i}, coefficients out
    of range reading as 0, so only subtractions/multiplications in D.
    """
    check_same_domain(u2.dom, u.dom)
    dom = u.dom
    if not u.is_monic():
        raise DomainError("series expansion requires a monic denominator")
    d = u.degree()
    if d < 1:
        raise DomainError("denominator must have degree >= 1")
    if not u2.is_zero() and u2.degree() >= d:
        raise DomainError("numerator degree must be below the denominator's")
    terms = []
    for j in range(1, m + 1):
        acc = u2.coeff(d - j) if d - j >= 0 else dom.zero
        for i in range(1, j):
            c = u.coeff(d - i) if d - i >= 0 else dom.zero
            if not dom.is_zero(c):
                acc = dom.sub(acc, dom.mul(c, terms[j - i - 1]))
        terms.append(acc)
    return SequenceView(dom, terms)


# -- text formats -----------------------------------------------------


def parse_poly(dom: Domain, text: str) -> Poly:
    """Comma-separated ascending coefficients, e.g. '1,0,0,1' = x^3+1."""
    text = text.strip()
    if not text:
        return Poly.zero(dom)
    return Poly(dom, [dom.parse(tok) for tok in _split_terms(text)])


def format_poly(f: Poly) -> str:
    """The parseable ascending-coefficient form."""
    if f.is_zero():
        return "0"
    return ",".join(f.dom.format(c) for c in f.coeffs)


def pretty_poly(f: Poly, var: str = "x") -> str:
    """Human-readable form like x^4 + x^2 + x."""
    if f.is_zero():
        return "0"
    dom = f.dom
    out = ""
    for k in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[k]
        if dom.is_zero(c):
            continue
        cs = dom.format(c)
        sign = " + "
        if cs.startswith("-"):
            sign, cs = " - ", cs[1:]
        if k == 0:
            term = cs
        else:
            xs = var if k == 1 else "%s^%d" % (var, k)
            term = xs if cs == "1" else "%s*%s" % (cs, xs)
        if not out:
            out = term if sign == " + " else "-" + term
        else:
            out += sign + term
    return out

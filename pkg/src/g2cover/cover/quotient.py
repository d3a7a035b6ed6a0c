"""Quotient of the triple cover by its deck group.

The deck-invariant function z = w + Q(u)/w satisfies the plane cubic
z^3 - 3 Q(u) z - 2 P(u) = 0.  The verification clears w^3 and works in
the coordinate ring k[u, v, w] / (v^2 - f, w^3 - v - P), where it closes
because Q^3 = P^2 - f = (P - v)(P + v): modulo the relations, Q^3/w^3 is
exactly P - v, so cubing z reproduces 2P + 3Qz term by term with no
division at all.
"""

from ..errors import DomainError
from ..exactalg import Poly
from ..elliptic import PlaneCubic


def _merge(acc, key, inc):
    if key in acc:
        acc[key] = acc[key] + inc
    else:
        acc[key] = inc


class _CoverElement:
    """Element of k[u, v, w] / (v^2 - f, w^3 - v - P).

    Stored as {(i, j): Poly in u} with i < 2 and j < 3 after reduction;
    both rewrite rules are monic, so reduction never divides.
    """

    __slots__ = ("P", "f", "terms")

    def __init__(self, P, f, terms):
        self.P = P
        self.f = f
        work = dict(terms)
        done = {}
        while work:
            (i, j), c = work.popitem()
            if c.is_zero():
                continue
            if j >= 3:
                _merge(work, (i + 1, j - 3), c)
                _merge(work, (i, j - 3), c * P)
            elif i >= 2:
                _merge(work, (i - 2, j), c * f)
            else:
                _merge(done, (i, j), c)
        self.terms = {k: c for k, c in done.items() if not c.is_zero()}

    def _wrap(self, x):
        if isinstance(x, _CoverElement):
            return x
        if not isinstance(x, Poly):
            x = Poly.constant(self.P.domain, self.P.var, x)
        return _CoverElement(self.P, self.f, {(0, 0): x})

    def __add__(self, other):
        o = self._wrap(other)
        acc = dict(self.terms)
        for key, c in o.terms.items():
            _merge(acc, key, c)
        return _CoverElement(self.P, self.f, acc)

    __radd__ = __add__

    def __neg__(self):
        return _CoverElement(self.P, self.f,
                             {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __mul__(self, other):
        o = self._wrap(other)
        acc = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in o.terms.items():
                _merge(acc, (i1 + i2, j1 + j2), c1 * c2)
        return _CoverElement(self.P, self.f, acc)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = self._wrap(1)
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self):
        return not self.terms


class EllipticQuotient:
    """Plane cubic z^3 - 3 Q z - 2 P with the projection z = w + Q/w.

    Holds only the (P, Q) pair and the cubic, so the degenerate Q = 0
    shape (where the projection is just z = w and the cubic is z^3 = 2P)
    can be written down even though no unramified cover sits above it.
    """

    __slots__ = ("P", "Q", "cubic")

    def __init__(self, P, Q, cubic):
        self.P = P
        self.Q = Q
        self.cubic = cubic

    @property
    def domain(self):
        return self.cubic.domain

    def z_value(self, p):
        """z-coordinate of the image of a cover point (u, v, w).

        When Q is identically zero the projection is just w; otherwise w
        must be invertible, and the triple fiber collapsed at w = 0 maps
        out to infinity, which is reported as an error here.
        """
        u, v, w = p
        if self.Q.is_zero():
            return w
        if w == 0:
            raise DomainError("projection pole: w = 0 maps to infinity on the cubic")
        return w + self.Q(u) / w

    def image(self, p):
        """Projective image (1 : u : z) of a cover point."""
        u = p[0]
        one = u * 0 + 1
        return (one, u, self.z_value(p))

    def __repr__(self):
        return "EllipticQuotient(%r)" % (self.cubic,)


def quotient_cubic(P, Q):
    """The plane cubic z^3 - 3 Q(u) z - 2 P(u) = 0, homogenized by t."""
    dom = P.domain
    if Q.domain != dom or Q.var != P.var:
        raise DomainError("P and Q must live in one ring")
    if P.degree > 3 or Q.degree > 2:
        raise DomainError("the cubic needs deg P <= 3 and deg Q <= 2")
    if P.var in ("t", "z"):
        raise DomainError("model variable clashes with the cubic coordinates t, z")
    three = dom.coerce(3)
    two = dom.coerce(2)
    cs = {(0, 0, 3): dom.one}
    for e, c in Q.coeffs.items():
        cs[(2 - e, e, 1)] = -(three * c)
    for e, c in P.coeffs.items():
        cs[(3 - e, e, 0)] = -(two * c)
    return PlaneCubic.from_coeffs(dom, cs, vars=("t", P.var, "z"))


def elliptic_quotient(C):
    """Quotient of a cover by its deck group, with the identity certified.

    The certificate is the exact vanishing of
    (w^2 + Q)^3 - 3 Q (w^2 + Q) w^2 - 2 P w^3 in the coordinate ring,
    which is the cubic relation for z multiplied through by w^3.
    """
    f, P, Q = C.f, C.P, C.Q
    one = Poly.constant(f.domain, f.var, 1)
    w = _CoverElement(P, f, {(0, 1): one})
    s = w * w + Q
    certificate = s ** 3 - (s * w * w) * (3 * Q) - (w ** 3) * (2 * P)
    if not certificate.is_zero():
        raise DomainError("projection identity failed for the given cover data")
    return EllipticQuotient(P, Q, quotient_cubic(P, Q))

"""Hyperelliptic genus-2 models v^2 = f(u) with deg f in {5, 6}.

The model carries its scalar domain (usually Q, sometimes a tower level or
a rational function field), so points and curve functions stay exact.
Ramification points of the double cover u are the roots of f, plus the
point at infinity when deg f = 5; a degree-6 model has two smooth points
at infinity swapped by the hyperelliptic involution.
"""

from ..errors import DomainError, SingularModelError
from ..exactalg import QQ, Poly, Tower, poly_gcd, rational_factors


class SexticModel:
    """v^2 = f(u) with f squarefree of degree 5 or 6."""

    __slots__ = ("f",)

    def __init__(self, f):
        if f.degree not in (5, 6):
            raise DomainError("model polynomial must have degree 5 or 6, got %d"
                              % f.degree)
        g = poly_gcd(f, f.derivative())
        if g.degree > 0:
            raise SingularModelError("model polynomial has a repeated root")
        self.f = f

    @property
    def domain(self):
        return self.f.domain

    @property
    def var(self):
        return self.f.var

    def contains(self, q):
        """Exact on-curve test; infinity is on-curve by convention."""
        if q.at_infinity:
            return True
        dom = self.domain
        return dom.is_zero(q.v * q.v - self.f(q.u))

    def infinity_points(self):
        if self.f.degree == 5:
            return [CurvePoint.infinity()]
        return [CurvePoint.infinity(+1), CurvePoint.infinity(-1)]

    def __eq__(self, other):
        return isinstance(other, SexticModel) and other.f == self.f

    def __repr__(self):
        return "SexticModel(%r)" % (self.f,)


class CurvePoint:
    """Affine point (u, v), or a point at infinity.

    On a degree-6 model the two infinite points are tagged branch=+1 and
    branch=-1 (the sign of v/u^3 relative to a fixed square root of the
    leading coefficient); a degree-5 model has a single infinite point with
    branch None.
    """

    __slots__ = ("u", "v", "at_infinity", "branch")

    def __init__(self, u, v):
        self.u = u
        self.v = v
        self.at_infinity = False
        self.branch = None

    @classmethod
    def infinity(cls, branch=None):
        p = cls.__new__(cls)
        p.u = None
        p.v = None
        p.at_infinity = True
        if branch not in (None, 1, -1):
            raise DomainError("infinity branch must be +1, -1 or None")
        p.branch = branch
        return p

    def involute(self):
        """Image under the hyperelliptic involution (u, v) -> (u, -v)."""
        if self.at_infinity:
            if self.branch is None:
                return self
            return CurvePoint.infinity(-self.branch)
        return CurvePoint(self.u, -self.v)

    def __eq__(self, other):
        if not isinstance(other, CurvePoint):
            return NotImplemented
        if self.at_infinity or other.at_infinity:
            return self.at_infinity == other.at_infinity and self.branch == other.branch
        return self.u == other.u and self.v == other.v

    def __repr__(self):
        if self.at_infinity:
            tag = "" if self.branch is None else ("+" if self.branch == 1 else "-")
            return "CurvePoint(infinity%s)" % tag
        return "CurvePoint(%r, %r)" % (self.u, self.v)


class CurveFunction:
    """Element a(u) + b(u) v of the function field, polynomial part only.

    Multiplication reduces v^2 to f(u), so products stay in this shape.
    Enough for verifying relations and expanding local series; no division.
    """

    __slots__ = ("model", "a", "b")

    def __init__(self, model, a, b=None):
        dom = model.domain
        var = model.var
        if not isinstance(a, Poly):
            a = Poly.constant(dom, var, a)
        if b is None:
            b = Poly(dom, var, {})
        elif not isinstance(b, Poly):
            b = Poly.constant(dom, var, b)
        if a.domain != dom or b.domain != dom or a.var != var or b.var != var:
            raise DomainError("curve function parts must live in the model's ring")
        self.model = model
        self.a = a
        self.b = b

    def _lift(self, other):
        if isinstance(other, CurveFunction):
            if other.model != self.model:
                raise DomainError("curve functions on different models")
            return other
        return CurveFunction(self.model, self.model.f * 0 + other)

    def __add__(self, other):
        o = self._lift(other)
        return CurveFunction(self.model, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return CurveFunction(self.model, -self.a, -self.b)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        f = self.model.f
        return CurveFunction(self.model,
                             self.a * o.a + self.b * o.b * f,
                             self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise DomainError("negative powers of curve functions are not supported")
        out = CurveFunction(self.model, self.model.domain.one)
        base = self
        while n:
            if n & 1:
                out = out * base
            if n > 1:
                base = base * base
            n >>= 1
        return out

    def is_zero(self):
        return self.a.is_zero() and self.b.is_zero()

    def value_at(self, q):
        if q.at_infinity:
            raise DomainError("curve function evaluation needs an affine point")
        return self.a(q.u) + self.b(q.u) * q.v

    def __eq__(self, other):
        o = self._lift(other)
        return self.a == o.a and self.b == o.b

    def __repr__(self):
        return "CurveFunction(%r + (%r)v)" % (self.a, self.b)


def weierstrass_points(model):
    """Ramification points of u: roots of f as points with v = 0, plus the
    unique infinite point when deg f = 5.

    Over Q the roots are made exact by factoring f: rational roots become
    rational points, each quadratic factor contributes both of its roots
    over a fresh tower level, and each irreducible factor of higher degree
    contributes its canonical generator root (conjugates share that minimal
    polynomial and are not duplicated).  Over any other scalar domain only
    the structural points (infinity for degree 5) are known exactly, and a
    DomainError explains the limitation.
    """
    f = model.f
    if f.domain != QQ:
        raise DomainError("exact Weierstrass points need rational coefficients")
    out = []
    zero = QQ.coerce(0)
    counter = 0
    for g, _ in rational_factors(f):
        if g.degree == 1:
            out.append(CurvePoint(-g.coeff(0), zero))
            continue
        counter += 1
        name = "%s%d" % (f.var, counter)
        tower = Tower.over(QQ).extend(name, g.rename(name))
        root = tower.gen(1)
        out.append(CurvePoint(root, root * 0))
        if g.degree == 2:
            # the conjugate root is rational in the first: they sum to -b
            out.append(CurvePoint(-root - g.coeff(1), root * 0))
    if f.degree == 5:
        out.append(CurvePoint.infinity())
    return out


def is_special(model, q):
    """Weierstrass test: v = 0, or the ramified infinity of a degree-5 model."""
    if q.at_infinity:
        if model.f.degree == 5:
            if q.branch is not None:
                raise DomainError("degree-5 models have a single unbranched infinity")
            return True
        return False
    if not model.contains(q):
        raise DomainError("point is not on the curve")
    return model.domain.is_zero(q.v)

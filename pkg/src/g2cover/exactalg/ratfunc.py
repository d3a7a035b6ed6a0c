"""Rational functions: the fraction field of a polynomial ring.

Normalization is canonical: gcd(num, den) = 1 and den monic, so equal values
compare equal.  Nesting is allowed (the coefficient domain may itself be a
fraction field), which is how multi-parameter fields like Q(a)(b)(x) are
built.
"""

from ..errors import DomainError
from .domains import Domain
from .poly import Poly, poly_gcd


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num, den, normalize=True):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if normalize:
            if num.is_zero():
                den = Poly.constant(den.domain, den.var, 1)
            else:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num = num.exact_div(g)
                    den = den.exact_div(g)
                c = den.lc()
                if not den.domain.is_zero(c - den.domain.one):
                    num = num * (den.domain.one / c)
                    den = den * (den.domain.one / c)
        self.num = num
        self.den = den

    @property
    def var(self):
        return self.num.var

    def is_zero(self):
        return self.num.is_zero()

    def is_poly(self):
        return self.den.degree == 0

    def as_poly(self):
        if not self.is_poly():
            raise DomainError("denominator has positive degree")
        return self.num

    def _lift(self, other):
        if isinstance(other, RatFunc):
            if other.num.domain == self.num.domain and other.var == self.var:
                return other
            # fall through: maybe it coerces into our coefficient domain
        elif isinstance(other, Poly):
            if other.domain == self.num.domain and other.var == self.var:
                one = Poly.constant(other.domain, other.var, 1)
                return RatFunc(other, one, normalize=False)
            # a poly OVER this fraction field must handle the operation
            if other.domain == FractionField(self.num.domain, self.var):
                return NotImplemented
        try:
            c = self.num.domain.coerce(other)
        except (DomainError, TypeError, ValueError):
            return NotImplemented
        one = Poly.constant(self.num.domain, self.var, 1)
        return RatFunc(Poly.constant(self.num.domain, self.var, c), one, normalize=False)

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, normalize=False)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._lift(other)
        return o / self

    def __pow__(self, n):
        if n < 0:
            return (self._lift(1) / self) ** (-n)
        return RatFunc(self.num**n, self.den**n, normalize=False)

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        dnum = self.num(x)
        dden = self.den(x)
        return dnum / dden

    def derivative(self):
        n = self.num.derivative() * self.den - self.num * self.den.derivative()
        return RatFunc(n, self.den * self.den)

    def __repr__(self):
        if self.is_poly():
            return repr(self.num)
        return "(%r)/(%r)" % (self.num, self.den)


class FractionField(Domain):
    """Field of fractions of base_domain[var]; elements are RatFunc."""

    def __init__(self, base_domain, var):
        self.base = base_domain
        self.var = var

    @property
    def characteristic(self):
        return self.base.characteristic

    def poly_one(self):
        return Poly.constant(self.base, self.var, 1)

    def gen(self):
        return RatFunc(Poly.gen(self.base, self.var), self.poly_one(), normalize=False)

    def from_poly(self, p):
        if p.domain != self.base or p.var != self.var:
            raise DomainError("polynomial from a different ring")
        return RatFunc(p, self.poly_one(), normalize=False)

    def coerce(self, x):
        if isinstance(x, RatFunc):
            if x.num.domain != self.base or x.var != self.var:
                raise DomainError("rational function from a different field")
            return x
        if isinstance(x, Poly):
            return self.from_poly(x)
        c = self.base.coerce(x)
        return RatFunc(Poly.constant(self.base, self.var, c), self.poly_one(),
                       normalize=False)

    def is_zero(self, x):
        return x.num.is_zero()

    def __eq__(self, other):
        return (isinstance(other, FractionField) and other.base == self.base
                and other.var == self.var)

    def __hash__(self):
        return hash(("FF", self.base, self.var))

    def __repr__(self):
        return "Frac(%r[%s])" % (self.base, self.var)

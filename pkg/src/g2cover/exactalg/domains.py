"""Coefficient domains.

A domain is a lightweight object supplying coercion, zero/one, and a zero
test; the elements themselves carry the arithmetic through operator
overloading.  Exact domains compare with ==, the approximate complex domain
uses a tolerance.
"""

from fractions import Fraction

from ..errors import DomainError


class Domain:
    is_field = True
    is_exact = True
    characteristic = 0

    def coerce(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def is_zero(self, x):
        return x == self.zero

    def invert(self, x):
        if self.is_zero(x):
            raise ZeroDivisionError("inverting zero")
        return self.one / x


class RationalField(Domain):
    """The rationals; elements are fractions.Fraction (already canonical)."""

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise DomainError("cannot coerce %r into QQ" % (x,))

    def is_zero(self, x):
        return x == 0

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


def _is_prime(n):
    # trial division; domain guarantees p < 2^31
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class FFElem:
    __slots__ = ("p", "val")

    def __init__(self, p, val):
        self.p = p
        self.val = val % p

    def _lift(self, other):
        if isinstance(other, FFElem):
            if other.p != self.p:
                raise DomainError("mixed characteristics %d / %d" % (self.p, other.p))
            return other
        if isinstance(other, int):
            return FFElem(self.p, other)
        if isinstance(other, Fraction):
            den = other.denominator % self.p
            if den == 0:
                raise ZeroDivisionError("denominator divisible by %d" % self.p)
            return FFElem(self.p, other.numerator * pow(den, -1, self.p))
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return FFElem(self.p, self.val + o.val)

    __radd__ = __add__

    def __neg__(self):
        return FFElem(self.p, -self.val)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return FFElem(self.p, self.val - o.val)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return FFElem(self.p, self.val * o.val)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if o.val == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return FFElem(self.p, self.val * pow(o.val, -1, self.p))

    def __rtruediv__(self, other):
        o = self._lift(other)
        return o / self

    def __pow__(self, n):
        if n < 0:
            return FFElem(self.p, pow(self.val, n, self.p))
        return FFElem(self.p, pow(self.val, n, self.p))

    def __eq__(self, other):
        if isinstance(other, FFElem):
            return self.p == other.p and self.val == other.val
        if isinstance(other, int):
            return self.val == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.val))

    def __repr__(self):
        return "%d" % self.val


class PrimeField(Domain):
    def __init__(self, p):
        if not isinstance(p, int) or p >= 2**31:
            raise DomainError("prime must be a machine-word integer")
        if not _is_prime(p):
            raise DomainError("%d is not prime" % p)
        self.p = p

    @property
    def characteristic(self):
        return self.p

    def coerce(self, x):
        if isinstance(x, FFElem):
            if x.p != self.p:
                raise DomainError("element of GF(%d) in GF(%d)" % (x.p, self.p))
            return x
        if isinstance(x, (int, Fraction)):
            return FFElem(self.p, 0)._lift(x)
        raise DomainError("cannot coerce %r into GF(%d)" % (x, self.p))

    def is_zero(self, x):
        return x.val == 0

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return "GF(%d)" % self.p


class ComplexField(Domain):
    """Approximate complex numbers (mpmath mpc or python complex).

    is_zero uses an absolute tolerance; suitable only for the numeric code
    paths (scans, certification), never for exact identities.
    """

    is_exact = False

    def __init__(self, tol=1e-12, ctx=None):
        self.tol = tol
        self.ctx = ctx  # optional mpmath context

    def coerce(self, x):
        if self.ctx is not None:
            return self.ctx.mpc(x)
        return complex(x)

    def is_zero(self, x):
        return abs(x) <= self.tol

    def __eq__(self, other):
        return isinstance(other, ComplexField) and other.tol == self.tol and other.ctx is self.ctx

    def __hash__(self):
        return hash(("CC", self.tol, id(self.ctx)))

    def __repr__(self):
        return "CC(tol=%g)" % self.tol

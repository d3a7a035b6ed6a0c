"""Sparse univariate polynomials over a declared coefficient domain.

The zero polynomial has degree -1 (sentinel).  Division, gcd and resultants
assume the coefficient domain is a field; everything else works over any
commutative coefficient ring whose elements overload +, -, *.
"""

import math
from fractions import Fraction

from ..errors import DomainError
from .domains import QQ, RationalField


class Poly:
    __slots__ = ("domain", "var", "coeffs")

    def __init__(self, domain, var, coeffs):
        self.domain = domain
        self.var = var
        clean = {}
        for e, c in coeffs.items():
            if e < 0:
                raise DomainError("negative exponent %d" % e)
            if not domain.is_zero(c):
                clean[int(e)] = c
        self.coeffs = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def constant(cls, domain, var, value):
        return cls(domain, var, {0: domain.coerce(value)})

    @classmethod
    def gen(cls, domain, var):
        return cls(domain, var, {1: domain.one})

    @classmethod
    def from_list(cls, domain, var, ascending):
        """Build from a dense ascending coefficient list."""
        return cls(domain, var, {i: domain.coerce(c) for i, c in enumerate(ascending)})

    # -- structure ----------------------------------------------------

    @property
    def degree(self):
        return max(self.coeffs) if self.coeffs else -1

    def is_zero(self):
        return not self.coeffs

    def lc(self):
        if not self.coeffs:
            return self.domain.zero
        return self.coeffs[self.degree]

    def coeff(self, e):
        return self.coeffs.get(e, self.domain.zero)

    def to_dense(self, length=None):
        n = self.degree + 1 if length is None else length
        out = [self.domain.zero] * max(n, 0)
        for e, c in self.coeffs.items():
            if e < len(out):
                out[e] = c
        return out

    def terms(self):
        return sorted(self.coeffs.items())

    def _same_ring(self, other):
        if not isinstance(other, Poly):
            return None
        if other.var != self.var or other.domain != self.domain:
            raise DomainError("polynomials from different rings: %s[%s] vs %s[%s]"
                              % (self.domain, self.var, other.domain, other.var))
        return other

    def _coerce_scalar(self, x):
        try:
            return self.domain.coerce(x)
        except (DomainError, TypeError, ValueError):
            return None

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        o = self._same_ring(other)
        if o is None:
            s = self._coerce_scalar(other)
            if s is None:
                return NotImplemented
            o = Poly(self.domain, self.var, {0: s})
        out = dict(self.coeffs)
        for e, c in o.coeffs.items():
            out[e] = out[e] + c if e in out else c
        return Poly(self.domain, self.var, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.domain, self.var, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, Poly) else -self.domain.coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._same_ring(other)
        if o is None:
            s = self._coerce_scalar(other)
            if s is None:
                return NotImplemented
            if self.domain.is_zero(s):
                return Poly(self.domain, self.var, {})
            return Poly(self.domain, self.var, {e: c * s for e, c in self.coeffs.items()})
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in o.coeffs.items():
                e = e1 + e2
                prod = c1 * c2
                out[e] = out[e] + prod if e in out else prod
        return Poly(self.domain, self.var, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise DomainError("negative polynomial power")
        result = Poly.constant(self.domain, self.var, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return (self.var == other.var and self.domain == other.domain
                    and self.coeffs == other.coeffs)
        s = self._coerce_scalar(other)
        if s is None:
            return NotImplemented
        if self.domain.is_zero(s):
            return not self.coeffs
        return self.coeffs == {0: s}

    def __hash__(self):
        return hash((self.var, tuple(sorted(self.coeffs.items(), key=lambda t: t[0]))))

    def __bool__(self):
        return bool(self.coeffs)

    # -- euclidean structure (field coefficients) ----------------------

    def __divmod__(self, other):
        o = self._same_ring(other)
        if o is None:
            raise DomainError("divmod needs a polynomial divisor")
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if not self.domain.is_field:
            raise DomainError("division needs field coefficients")
        q = {}
        rem = dict(self.coeffs)
        dlead = o.degree
        clead = o.lc()
        while rem:
            dr = max(rem)
            if dr < dlead:
                break
            factor = rem[dr] / clead
            q[dr - dlead] = factor
            for e, c in o.coeffs.items():
                k = e + dr - dlead
                v = rem.get(k, self.domain.zero) - factor * c
                if self.domain.is_zero(v):
                    rem.pop(k, None)
                else:
                    rem[k] = v
        return (Poly(self.domain, self.var, q), Poly(self.domain, self.var, rem))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if not r.is_zero():
            raise DomainError("inexact polynomial division")
        return q

    def monic(self):
        if self.is_zero():
            return self
        c = self.lc()
        return Poly(self.domain, self.var, {e: v / c for e, v in self.coeffs.items()})

    # -- calculus / evaluation ----------------------------------------

    def derivative(self):
        return Poly(self.domain, self.var,
                    {e - 1: c * e for e, c in self.coeffs.items() if e >= 1})

    def __call__(self, x):
        """Horner evaluation; x may live in any ring compatible with the
        coefficients (scalar, series, tower element, another polynomial)."""
        if not self.coeffs:
            if isinstance(x, Poly):
                return Poly(x.domain, x.var, {})
            return x * 0
        items = sorted(self.coeffs.items(), reverse=True)
        acc = None
        prev = None
        for e, c in items:
            if acc is None:
                acc = (x * 0 + c) if isinstance(x, Poly) else c
            else:
                acc = acc * x ** (prev - e) + c
            prev = e
        if prev:
            acc = acc * x ** prev
        return acc

    def map_coefficients(self, func, new_domain, new_var=None):
        out = {}
        for e, c in self.coeffs.items():
            out[e] = func(c)
        return Poly(new_domain, new_var or self.var, out)

    def rename(self, var):
        return Poly(self.domain, var, dict(self.coeffs))

    def shift_exponents(self, k):
        """Multiply by var**k (k >= 0) or strip a known factor var**-k."""
        if k >= 0:
            return Poly(self.domain, self.var, {e + k: c for e, c in self.coeffs.items()})
        if any(e + k < 0 for e in self.coeffs):
            raise DomainError("shift would create negative exponents")
        return Poly(self.domain, self.var, {e + k: c for e, c in self.coeffs.items()})

    def reverse(self, degree=None):
        """Coefficient reversal x^d * f(1/x)."""
        d = self.degree if degree is None else degree
        return Poly(self.domain, self.var, {d - e: c for e, c in self.coeffs.items()})

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in sorted(self.coeffs.items(), reverse=True):
            if e == 0:
                parts.append("(%s)" % (c,))
            elif e == 1:
                parts.append("(%s)%s" % (c, self.var))
            else:
                parts.append("(%s)%s^%d" % (c, self.var, e))
        return " + ".join(parts)


# -- gcd / resultants ------------------------------------------------


def _content_qq(f):
    num = 0
    den = 1
    for c in f.coeffs.values():
        num = math.gcd(num, c.numerator)
        den = den * c.denominator // math.gcd(den, c.denominator)
    if num == 0:
        return Fraction(0)
    return Fraction(num, den)


def _pseudo_rem(f, g):
    """lc(g)^(deg f - deg g + 1) * f mod g without coefficient division."""
    d = f.degree - g.degree
    lg = g.lc()
    rem = f
    for _ in range(d + 1):
        if rem.degree < g.degree:
            rem = rem * lg
            continue
        k = rem.degree - g.degree
        rem = rem * lg - g * Poly(g.domain, g.var, {k: rem.lc()})
    return rem


def _gcd_qq(f, g):
    """Subresultant PRS over Q, returned monic. Controls growth better than
    naive monic Euclid on big inputs."""
    a = f * (1 / _content_qq(f))
    b = g * (1 / _content_qq(g))
    if a.degree < b.degree:
        a, b = b, a
    if b.degree == 0:
        return Poly.constant(f.domain, f.var, 1)
    gpart = Fraction(1)
    hpart = Fraction(1)
    while True:
        d = a.degree - b.degree
        r = _pseudo_rem(a, b)
        if r.is_zero():
            return b.monic()
        if r.degree == 0:
            return Poly.constant(f.domain, f.var, 1)
        a = b
        divisor = gpart * hpart**d
        b = r * (1 / divisor)
        cb = _content_qq(b)
        b = b * (1 / cb)  # keep primitive; gcd is only defined up to units
        gpart = a.lc()
        hpart = hpart ** (1 - d) * gpart**d if d <= 1 else gpart**d / hpart ** (d - 1)


def poly_gcd(f, g):
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    if isinstance(f.domain, RationalField):
        return _gcd_qq(f, g)
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_lcm(f, g):
    if f.is_zero() or g.is_zero():
        return Poly(f.domain, f.var, {})
    return f.exact_div(poly_gcd(f, g)) * g


def poly_xgcd(f, g):
    """(d, s, t) with s*f + t*g = d, d monic."""
    dom, var = f.domain, f.var
    zero = Poly(dom, var, {})
    one = Poly.constant(dom, var, 1)
    r0, r1 = f, g
    s0, s1 = one, zero
    t0, t1 = zero, one
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        raise DomainError("xgcd of two zero polynomials")
    c = r0.lc()
    inv = dom.one / c
    return r0 * inv, s0 * inv, t0 * inv


def poly_resultant(f, g):
    """Resultant over a field, by the Euclidean remainder ladder."""
    dom = f.domain
    if f.is_zero() or g.is_zero():
        if f.is_zero() and g.is_zero():
            raise DomainError("resultant of two zero polynomials")
        other = g if f.is_zero() else f
        return dom.one if other.degree == 0 else dom.zero
    acc = dom.one
    a, b = f, g
    if a.degree < b.degree:
        if (a.degree * b.degree) % 2 == 1:
            acc = -acc
        a, b = b, a
    while b.degree > 0:
        r = a % b
        if r.is_zero():
            return dom.zero
        if (a.degree * b.degree) % 2 == 1:
            acc = -acc
        acc = acc * b.lc() ** (a.degree - r.degree)
        a, b = b, r
    return acc * b.lc() ** a.degree


def squarefree_part(f):
    """f / gcd(f, f'); same roots, multiplicity one.  Characteristic 0."""
    if f.is_zero():
        raise DomainError("squarefree part of zero input")
    if f.domain.characteristic != 0:
        raise DomainError("squarefree_part needs characteristic 0")
    g = poly_gcd(f, f.derivative())
    if g.degree <= 0:
        return f
    return f.exact_div(g)


def fraction_sqrt(x):
    """Exact square root of a Fraction, or None."""
    if x < 0:
        return None
    a = math.isqrt(x.numerator)
    b = math.isqrt(x.denominator)
    if a * a == x.numerator and b * b == x.denominator:
        return Fraction(a, b)
    return None


def poly_sqrt_exact(s, scalar_sqrt=fraction_sqrt):
    """Exact square root of a polynomial over Q (or None).

    Triangular recovery from the leading coefficient down, then a full
    verification multiply.
    """
    if s.is_zero():
        return Poly(s.domain, s.var, {})
    if s.degree % 2 == 1:
        return None
    d = s.degree // 2
    lead = scalar_sqrt(s.lc())
    if lead is None:
        return None
    p = {d: lead}
    for k in range(2 * d - 1, d - 1, -1):
        j = k - d
        acc = s.coeff(k)
        for i in range(j + 1, d):
            if k - i > j:
                acc -= p[i] * p[k - i]
        p[j] = acc / (2 * lead)
    cand = Poly(s.domain, s.var, p)
    if cand * cand == s:
        return cand
    return None


def rational_roots(f):
    """All rational roots with multiplicity: list of (Fraction, int)."""
    if f.is_zero():
        raise DomainError("rational roots of zero polynomial")
    if not isinstance(f.domain, RationalField):
        raise DomainError("rational_roots is for Q coefficients")
    roots = []
    work = f
    v = min(work.coeffs) if work.coeffs else 0
    if v > 0:
        roots.append((Fraction(0), v))
        work = work.shift_exponents(-v)
    den = 1
    for c in work.coeffs.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    iw = work * den
    a0 = int(iw.coeff(0))
    an = int(iw.lc())
    if a0 == 0:
        return roots
    for p in _divisors(abs(a0)):
        for q in _divisors(abs(an)):
            if math.gcd(p, q) != 1:
                continue
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if work(cand) == 0:
                    mult = 0
                    lin = Poly.from_list(QQ, work.var, [-cand, 1])
                    while work(cand) == 0:
                        work = work.exact_div(lin)
                        mult += 1
                    roots.append((cand, mult))
    return roots


def _divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)

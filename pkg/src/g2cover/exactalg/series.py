"""Truncated power series with explicit precision tracking.

A series is known modulo x^prec; prec None means the series is an exact
polynomial.  Precision of a product accounts for the valuations of both
factors, so multiplying by x never loses known coefficients.
"""

from ..errors import DomainError
from .domains import QQ


class PowerSeries:
    __slots__ = ("domain", "var", "coeffs", "prec")

    def __init__(self, domain, var, coeffs, prec=None):
        if prec is not None:
            coeffs = {e: c for e, c in coeffs.items() if e < prec}
        self.domain = domain
        self.var = var
        self.coeffs = {e: c for e, c in coeffs.items() if not domain.is_zero(c)}
        self.prec = prec

    @classmethod
    def from_poly(cls, p, prec=None):
        return cls(p.domain, p.var, dict(p.coeffs), prec)

    @classmethod
    def gen(cls, domain, var, prec=None):
        return cls(domain, var, {1: domain.one}, prec)

    @classmethod
    def constant(cls, domain, var, c, prec=None):
        return cls(domain, var, {0: domain.coerce(c)}, prec)

    @classmethod
    def big_oh(cls, domain, var, prec):
        """The zero series known only modulo x^prec."""
        return cls(domain, var, {}, prec)

    def coeff(self, e):
        if self.prec is not None and e >= self.prec:
            raise DomainError("coefficient of x^%d beyond precision O(x^%d)" % (e, self.prec))
        return self.coeffs.get(e, self.domain.zero)

    def valuation(self):
        """Order of vanishing; for a series with no known nonzero coefficient
        this is the precision (all we can certify)."""
        if not self.coeffs:
            return self.prec
        return min(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def truncate(self, n):
        p = n if self.prec is None else min(self.prec, n)
        return PowerSeries(self.domain, self.var, self.coeffs, p)

    def _lift(self, other):
        if isinstance(other, PowerSeries):
            if other.var != self.var or other.domain != self.domain:
                raise DomainError("mixed series rings")
            return other
        c = self.domain.coerce(other)
        return PowerSeries(self.domain, self.var, {0: c}, None)

    def __add__(self, other):
        o = self._lift(other)
        prec = _min_prec(self.prec, o.prec)
        cs = dict(self.coeffs)
        for e, c in o.coeffs.items():
            cs[e] = cs.get(e, self.domain.zero) + c
        return PowerSeries(self.domain, self.var, cs, prec)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(self.domain, self.var,
                           {e: -c for e, c in self.coeffs.items()}, self.prec)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._lift(other)
        prec = _prod_prec(self, o)
        cs = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in o.coeffs.items():
                e = e1 + e2
                if prec is not None and e >= prec:
                    continue
                if e in cs:
                    cs[e] = cs[e] + c1 * c2
                else:
                    cs[e] = c1 * c2
        return PowerSeries(self.domain, self.var, cs, prec)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = PowerSeries(self.domain, self.var, {0: self.domain.one}, None)
        base = self
        while n:
            if n & 1:
                out = out * base
            if n > 1:
                base = base * base
            n >>= 1
        return out

    def inverse(self, prec=None):
        """Reciprocal of a unit series (nonzero constant term)."""
        if prec is None:
            prec = self.prec
        if prec is None:
            raise DomainError("inverse of an exact polynomial needs a target precision")
        c0 = self.coeffs.get(0, self.domain.zero)
        if self.domain.is_zero(c0):
            raise DomainError("series has positive valuation, no inverse")
        inv0 = self.domain.invert(c0)
        out = {0: inv0}
        for n in range(1, prec):
            s = self.domain.zero
            for k in range(1, n + 1):
                a = self.coeffs.get(k)
                if a is None:
                    continue
                b = out.get(n - k)
                if b is None:
                    continue
                s = s + a * b
            out[n] = -inv0 * s
        return PowerSeries(self.domain, self.var, out, prec)

    def __truediv__(self, other):
        o = self._lift(other)
        if o.coeffs and min(o.coeffs) > 0:
            v = min(o.coeffs)
            sv = self.valuation()
            if sv is None or sv < v:
                raise DomainError("division would leave negative exponents")
            return self.shift(-v) / o.shift(-v)
        prec = _prod_prec(self, o)
        if prec is None:
            prec = _min_prec(self.prec, o.prec)
        if prec is None:
            raise DomainError("dividing exact polynomials as series needs truncation")
        return self.truncate(prec) * o.inverse(prec)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def shift(self, k):
        """Multiply by x^k (k may be negative if the valuation allows)."""
        cs = {}
        for e, c in self.coeffs.items():
            if e + k < 0:
                raise DomainError("shift would leave negative exponents")
            cs[e + k] = c
        prec = None if self.prec is None else self.prec + k
        return PowerSeries(self.domain, self.var, cs, prec)

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except (DomainError, TypeError, ValueError):
            return NotImplemented
        return self.coeffs == o.coeffs and self.prec == o.prec

    def __repr__(self):
        if not self.coeffs:
            body = "0"
        else:
            parts = []
            for e in sorted(self.coeffs):
                c = self.coeffs[e]
                if e == 0:
                    parts.append(repr(c))
                elif e == 1:
                    parts.append("%r*%s" % (c, self.var))
                else:
                    parts.append("%r*%s^%d" % (c, self.var, e))
            body = " + ".join(parts)
        if self.prec is None:
            return body
        return "%s + O(%s^%d)" % (body, self.var, self.prec)


def _min_prec(p1, p2):
    if p1 is None:
        return p2
    if p2 is None:
        return p1
    return min(p1, p2)


def _prod_prec(f, g):
    if f.prec is None and g.prec is None:
        return None
    vals = []
    if g.prec is not None:
        vf = min(f.coeffs) if f.coeffs else (f.prec if f.prec is not None else 0)
        vals.append(g.prec + vf)
    if f.prec is not None:
        vg = min(g.coeffs) if g.coeffs else (g.prec if g.prec is not None else 0)
        vals.append(f.prec + vg)
    return min(vals)


def series_sqrt(f, c0=None):
    """Square root of a series with square constant term, by Newton iteration.

    c0 optionally picks the branch; it must square to the constant term.
    """
    prec = f.prec
    if prec is None:
        prec = (max(f.coeffs) + 1) if f.coeffs else 1
        f = f.truncate(prec)
    a0 = f.coeffs.get(0, f.domain.zero)
    if f.domain.is_zero(a0):
        raise DomainError("series has positive valuation; square root needs a unit")
    if c0 is None:
        c0 = _scalar_sqrt(f.domain, a0)
    else:
        c0 = f.domain.coerce(c0)
        if not f.domain.is_zero(c0 * c0 - a0):
            raise DomainError("branch constant does not square to the constant term")
    half = f.domain.invert(f.domain.coerce(2))
    g = PowerSeries(f.domain, f.var, {0: c0}, 1)
    n = 1
    while n < prec:
        n = min(2 * n, prec)
        # quadratic convergence lets us pad g with unknown-as-zero
        # coefficients up to the doubled precision before correcting
        g_lift = PowerSeries(f.domain, f.var, g.coeffs, n)
        fg = f.truncate(n) / g_lift
        g = (g_lift + fg) * half
    return g.truncate(prec)


def _scalar_sqrt(domain, a):
    from fractions import Fraction
    from math import isqrt
    if domain == QQ:
        fr = Fraction(a)
        if fr < 0:
            raise DomainError("negative constant term has no rational square root")
        rn, rd = isqrt(fr.numerator), isqrt(fr.denominator)
        if rn * rn != fr.numerator or rd * rd != fr.denominator:
            raise DomainError("constant term is not a rational square")
        return Fraction(rn, rd)
    raise DomainError("provide c0 for square roots over this domain")

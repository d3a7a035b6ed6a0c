"""Division polynomials for y² = x³ + ax + b.

psi_n is computed in the coordinate ring modulo y² - (x³+ax+b), where odd
indices give pure x-polynomials and even indices a single factor of y.  The
public form strips that y, which keeps everything univariate.
"""

from ..errors import DomainError
from ..exactalg import Poly


class _XYElem:
    """p(x) + q(x)·y with y² reduced to the curve cubic."""

    __slots__ = ("p", "q", "rhs")

    def __init__(self, p, q, rhs):
        self.p = p
        self.q = q
        self.rhs = rhs

    def __add__(self, other):
        return _XYElem(self.p + other.p, self.q + other.q, self.rhs)

    def __sub__(self, other):
        return _XYElem(self.p - other.p, self.q - other.q, self.rhs)

    def __mul__(self, other):
        p = self.p * other.p + self.q * other.q * self.rhs
        q = self.p * other.q + self.q * other.p
        return _XYElem(p, q, self.rhs)

    def pow(self, n):
        out = _XYElem(self.p * 0 + 1, self.q * 0, self.rhs)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out


class _DivPolyTable:
    def __init__(self, E, var="x"):
        dom = E.domain
        x = Poly.gen(dom, var)
        zero = x * 0
        one = zero + 1
        self.rhs = x**3 + E.a * x + E.b
        a, b = E.a, E.b
        self.cache = {
            0: _XYElem(zero, zero, self.rhs),
            1: _XYElem(one, zero, self.rhs),
            2: _XYElem(zero, one * 2, self.rhs),
            3: _XYElem(3 * x**4 + 6 * a * x**2 + 12 * b * x - a * a * one,
                       zero, self.rhs),
            4: _XYElem(zero,
                       4 * (x**6 + 5 * a * x**4 + 20 * b * x**3
                            - 5 * a * a * x**2 - 4 * a * b * x
                            - (8 * b * b + a**3) * one),
                       self.rhs),
        }

    def psi(self, n):
        if n in self.cache:
            return self.cache[n]
        m = n // 2
        if n % 2:
            # psi_{2m+1} = psi_{m+2} psi_m³ - psi_{m-1} psi_{m+1}³
            v = self.psi(m + 2) * self.psi(m).pow(3) \
                - self.psi(m - 1) * self.psi(m + 1).pow(3)
        else:
            # psi_{2m} = (psi_m / 2y)(psi_{m+2} psi_{m-1}² - psi_{m-2} psi_{m+1}²)
            inner = self.psi(m + 2) * self.psi(m - 1).pow(2) \
                - self.psi(m - 2) * self.psi(m + 1).pow(2)
            pm = self.psi(m)
            dom = self.rhs.domain
            half = dom.invert(dom.coerce(2))
            zero = self.rhs * 0
            if m % 2:
                # pure·pure: dividing by 2y leaves y·(product / (2·rhs)),
                # and the rhs factor is present because the even psi's in
                # `inner` each carried a squared y
                qpart = (pm.p * inner.p * half).exact_div(self.rhs)
            else:
                # (q_m·y)·(q_inner·y) = q_m·q_inner·rhs; /(2y) cancels to
                # y·q_m·q_inner/2
                qpart = pm.q * inner.q * half
            v = _XYElem(zero, qpart, self.rhs)
        self.cache[n] = v
        return v


def division_poly(E, n, var="x"):
    """psi_n as a polynomial in x alone: psi_n itself for odd n, psi_n / y
    for even n.  deg = (n²-1)/2 for odd n, (n²-4)/2 for even n."""
    if n < 1:
        raise DomainError("division polynomial index must be positive")
    table = _DivPolyTable(E, var)
    v = table.psi(n)
    if n % 2:
        return v.p
    return v.q


def order_condition(E, n, var="x"):
    """Polynomial in x whose vanishing at x(P) is equivalent to nP = O for
    affine P: psi_n for odd n, (x³+ax+b)·(psi_n/y) for even n."""
    f = division_poly(E, n, var)
    if n % 2:
        return f
    x = Poly.gen(E.domain, var)
    return (x**3 + E.a * x + E.b) * f

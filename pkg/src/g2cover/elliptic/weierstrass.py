"""Short Weierstrass curves y² = x³ + ax + b and the chord-tangent law.

The scalar domain is any field-like Domain (rationals, prime fields, towers,
rational function fields).  Division by a zero divisor inside a tower
propagates ZeroDivisorError so callers can split the tower and retry.
"""

from ..errors import DomainError, SingularModelError


class WeierstrassCurve:
    __slots__ = ("domain", "a", "b")

    def __init__(self, domain, a, b, check_smooth=False):
        self.domain = domain
        self.a = domain.coerce(a)
        self.b = domain.coerce(b)
        if check_smooth and domain.is_zero(self.disc_quantity()):
            raise SingularModelError("4a³ + 27b² = 0")

    def disc_quantity(self):
        """4a³ + 27b², the vanishing locus of the discriminant."""
        return 4 * self.a**3 + 27 * self.b**2

    def discriminant(self):
        return -16 * self.disc_quantity()

    def rhs(self, x):
        return x**3 + self.a * x + self.b

    def contains(self, P):
        if P.is_infinity():
            return True
        return self.domain.is_zero(P.y * P.y - self.rhs(P.x))

    def point(self, x, y):
        P = ECPoint(self.domain.coerce(x), self.domain.coerce(y))
        if not self.contains(P):
            raise DomainError("point (%r, %r) is not on the curve" % (x, y))
        return P

    def __eq__(self, other):
        return (isinstance(other, WeierstrassCurve) and other.domain == self.domain
                and self.domain.is_zero(other.a - self.a)
                and self.domain.is_zero(other.b - self.b))

    def __hash__(self):
        return hash(("W", self.a, self.b))

    def __repr__(self):
        return "WeierstrassCurve(a=%r, b=%r)" % (self.a, self.b)


class ECPoint:
    __slots__ = ("x", "y", "inf")

    def __init__(self, x=None, y=None, inf=False):
        self.inf = bool(inf)
        self.x = x
        self.y = y

    @classmethod
    def infinity(cls):
        return cls(inf=True)

    def is_infinity(self):
        return self.inf

    def pair(self):
        if self.inf:
            raise DomainError("the point at infinity has no affine pair")
        return (self.x, self.y)

    def __repr__(self):
        if self.inf:
            return "O"
        return "(%r, %r)" % (self.x, self.y)


def ec_neg(P):
    if P.is_infinity():
        return P
    return ECPoint(P.x, -P.y)


def ec_equal(dom, P, Q):
    if P.is_infinity() or Q.is_infinity():
        return P.is_infinity() and Q.is_infinity()
    return dom.is_zero(P.x - Q.x) and dom.is_zero(P.y - Q.y)


def ec_add(E, P, Q, checked=True):
    """Chord-tangent addition.  checked=False skips the on-curve validation
    for internal chains whose operands are on the curve by construction."""
    dom = E.domain
    if checked:
        if not E.contains(P):
            raise DomainError("first summand is off the curve")
        if not E.contains(Q):
            raise DomainError("second summand is off the curve")
    if P.is_infinity():
        return Q
    if Q.is_infinity():
        return P
    if dom.is_zero(P.x - Q.x):
        if dom.is_zero(P.y + Q.y):
            return ECPoint.infinity()
        # tangent: 2y ≠ 0 here since y = -y would have matched above
        s = (3 * P.x * P.x + E.a) / (2 * P.y)
    else:
        s = (Q.y - P.y) / (Q.x - P.x)
    x3 = s * s - P.x - Q.x
    y3 = s * (P.x - x3) - P.y
    return ECPoint(x3, y3)


def ec_mul(E, n, P, trace=None):
    """n·P by double-and-add.  A list passed as trace receives the op chain
    ("dbl" or "add") replayed MSB-first, for certificates."""
    if not E.contains(P):
        raise DomainError("multiplying a point off the curve")
    if n < 0:
        return ec_mul(E, -n, ec_neg(P), trace)
    if n == 0:
        return ECPoint.infinity()
    bits = bin(n)[3:]
    Q = P
    for bit in bits:
        Q = ec_add(E, Q, Q, checked=False)
        if trace is not None:
            trace.append("dbl")
        if bit == "1":
            Q = ec_add(E, Q, P, checked=False)
            if trace is not None:
                trace.append("add")
    return Q


def replay_chain(E, P, chain):
    """Re-run a certificate chain with exact arithmetic."""
    Q = P
    for op in chain:
        if op == "dbl":
            Q = ec_add(E, Q, Q, checked=False)
        elif op == "add":
            Q = ec_add(E, Q, P, checked=False)
        else:
            raise DomainError("unknown chain op %r" % (op,))
    return Q

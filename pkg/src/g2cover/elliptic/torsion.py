"""Torsion certification by reduction at degree-1 residues.

A prime p is usable when every tower level's defining polynomial has a
simple root mod p along some chain (simple root => unramified residue, and
for odd p with good reduction the torsion subgroup injects into E(F_p), so
the reduced order equals the true order).  Orders at two such primes either
disagree (non-torsion) or propose a candidate verified by one exact scalar
multiplication over the tower.
"""

from fractions import Fraction
from math import isqrt

from ..errors import DomainError, ZeroDivisorError
from ..exactalg import PrimeField, Poly, ff_poly_roots
from ..exactalg.domains import QQ
from ..exactalg.tower import TowerDomain, TowerElement
from .weierstrass import (ECPoint, WeierstrassCurve, ec_add, ec_mul, ec_neg,
                          replay_chain)


def _tower_of(dom):
    if isinstance(dom, TowerDomain):
        t = dom.tower
        if t.base != QQ:
            raise DomainError("reduction needs a tower over the rationals")
        return t, dom.level
    if dom == QQ:
        return None, 0
    raise DomainError("domain %r does not support reduction mod p" % (dom,))


def _reduce_base(c, fp):
    return fp.coerce(Fraction(c))


def residue_chains(tower, depth, p):
    """All chains of simple degree-1 residues of the tower levels mod p.
    Returns a list of FFElem lists (one image per level)."""
    fp = PrimeField(p)
    chains = [[]]
    for k in range(depth):
        minpoly = tower.levels[k].minpoly
        new = []
        for chain in chains:
            try:
                coeffs = {}
                for e, c in minpoly.coeffs.items():
                    if isinstance(c, TowerElement):
                        coeffs[e] = c.apply(lambda q: _reduce_base(q, fp), chain)
                    else:
                        coeffs[e] = _reduce_base(c, fp)
                f = Poly(fp, minpoly.var, coeffs)
                if f.degree != minpoly.degree:
                    continue
            except ZeroDivisionError:
                continue
            for root, mult in ff_poly_roots(f):
                if mult == 1:
                    new.append(chain + [root])
        chains = new
        if not chains:
            break
    return chains


def _reduce_elem(x, fp, chain):
    if isinstance(x, TowerElement):
        return x.apply(lambda q: _reduce_base(q, fp), chain)
    return _reduce_base(x, fp)


def _reduce_point(P, fp, chain):
    if P.is_infinity():
        return ECPoint.infinity()
    return ECPoint(_reduce_elem(P.x, fp, chain), _reduce_elem(P.y, fp, chain))


def _hasse_bound(p):
    return p + 1 + 2 * (isqrt(4 * p) // 2 + 1)


def reduced_order(Ep, Pp, p):
    """Order of a point on a curve over F_p by naive multiple scanning."""
    bound = _hasse_bound(p)
    Q = Pp
    for n in range(1, bound + 2):
        if Q.is_infinity():
            return n
        Q = ec_add(Ep, Q, Pp, checked=False)
    raise DomainError("no order below the Hasse bound; reduction is inconsistent")


class TorsionCertificate:
    """Exact torsion order with a replayable double-and-add chain and the
    maximal-proper-divisor checks establishing minimality."""

    def __init__(self, order, point, chain, primes, divisor_checks, miller=None):
        self.order = order
        self.point = point
        self.chain = list(chain)
        self.primes = list(primes)
        self.divisor_checks = list(divisor_checks)
        self.miller = miller

    def verify(self, E):
        if not E.contains(self.point):
            return False
        if self.order == 1:
            return self.point.is_infinity()
        if not replay_chain(E, self.point, self.chain).is_infinity():
            return False
        for d in _maximal_proper_divisors(self.order):
            if ec_mul(E, d, self.point).is_infinity():
                return False
        return True

    def to_json(self):
        out = {"kind": "torsion", "order": self.order,
               "chain": self.chain, "primes": self.primes}
        if self.miller is not None:
            out["miller"] = self.miller.to_json()
        return out

    def __repr__(self):
        return "TorsionCertificate(order=%d, primes=%r)" % (self.order, self.primes)


class NonTorsionWitness:
    """Either reduced orders at two good primes disagree, or an exact scalar
    multiple at the agreed candidate failed to vanish."""

    def __init__(self, primes, orders, mode, note=""):
        self.primes = list(primes)
        self.orders = list(orders)
        self.mode = mode
        self.note = note

    def verify(self, E, P):
        tower, depth = _tower_of(E.domain)
        seen = []
        for p in self.primes:
            fp = PrimeField(p)
            chains = residue_chains(tower, depth, p) if tower else [[]]
            if not chains:
                return False
            chain = chains[0]
            a, b = _reduce_elem(E.a, fp, chain), _reduce_elem(E.b, fp, chain)
            if fp.is_zero(4 * a**3 + 27 * b**2):
                return False
            Ep = WeierstrassCurve(fp, a, b)
            Pp = _reduce_point(P, fp, chain)
            seen.append(reduced_order(Ep, Pp, p))
        if seen != self.orders:
            return False
        if self.mode == "order-mismatch":
            return (len(self.orders) == 2 and self.orders[0] != self.orders[1]
                    and min(self.primes) > max(self.orders) + 1)
        if self.mode == "exact-failure":
            n = self.orders[0]
            Q = ECPoint.infinity()
            for _ in range(n):
                Q = ec_add(E, Q, P, checked=False)
                if Q.is_infinity():
                    return False
            return True
        return False

    def to_json(self):
        return {"kind": "non-torsion", "primes": self.primes,
                "orders": self.orders, "mode": self.mode, "note": self.note}

    def __repr__(self):
        return "NonTorsionWitness(primes=%r, orders=%r, mode=%s)" % (
            self.primes, self.orders, self.mode)


def _maximal_proper_divisors(n):
    out = []
    for q in _prime_factors(n):
        out.append(n // q)
    return sorted(set(out))


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _iter_primes(start, bound):
    p = start
    while p <= bound:
        if all(p % q for q in range(2, isqrt(p) + 1)):
            yield p
        p += 1


def _exact_decision(E, P, p, n, extra_prime=None):
    """Settle the candidate order n by exact arithmetic over the tower."""
    chain_ops = []
    Q = ec_mul(E, n, P, trace=chain_ops)
    if not Q.is_infinity():
        return NonTorsionWitness(
            [p], [n], "exact-failure",
            "candidate n=%d from the reduced order fails the exact check" % n)
    order = n
    while True:
        for d in _maximal_proper_divisors(order):
            if ec_mul(E, d, P).is_infinity():
                order = d
                break
        else:
            break
    if order != n:
        chain_ops = []
        ec_mul(E, order, P, trace=chain_ops)
    checks = [(d, not ec_mul(E, d, P).is_infinity())
              for d in _maximal_proper_divisors(order)]
    primes = [p] if extra_prime is None else [p, extra_prime]
    return TorsionCertificate(order, P, chain_ops, primes, checks)


def torsion_order(E, P, prime_bound=300, max_usable=6):
    """TorsionCertificate or NonTorsionWitness for P on E over QQ or a
    tower over QQ.  Raises on fewer than two usable primes below the bound
    (the caller should raise prime_bound)."""
    if not E.contains(P):
        raise DomainError("point is not on the curve")
    if P.is_infinity():
        return TorsionCertificate(1, P, [], [], [])
    tower, depth = _tower_of(E.domain)
    found = []
    for p in _iter_primes(5, prime_bound):
        fp = PrimeField(p)
        try:
            chains = residue_chains(tower, depth, p) if tower else [[]]
        except ZeroDivisionError:
            continue
        if not chains:
            continue
        chain = chains[0]
        try:
            a = _reduce_elem(E.a, fp, chain)
            b = _reduce_elem(E.b, fp, chain)
            if fp.is_zero(4 * a**3 + 27 * b**2):
                continue
            Ep = WeierstrassCurve(fp, a, b)
            Pp = _reduce_point(P, fp, chain)
            if not Ep.contains(Pp):
                continue
        except ZeroDivisionError:
            continue
        found.append((p, reduced_order(Ep, Pp, p)))
        # any pair of usable primes dominating both orders settles it
        for i in range(len(found) - 1):
            p1, n1 = found[i]
            p2, n2 = found[-1]
            if min(p1, p2) > max(n1, n2) + 1:
                if n1 != n2:
                    return NonTorsionWitness(
                        [p1, p2], [n1, n2], "order-mismatch",
                        "reduced orders disagree at two unramified good primes")
                return _exact_decision(E, P, p1, n1, extra_prime=p2)
        if len(found) >= max_usable:
            break
    if len(found) < 2:
        raise DomainError("insufficient primes below %d for reduction"
                          % prime_bound)
    # no dominating pair (orders grow with p, the non-torsion signature);
    # one exact check at the smallest reduced order still decides soundly,
    # since a torsion point's order would equal every reduced order
    p_min, n_min = min(found, key=lambda t: t[1])
    return _exact_decision(E, P, p_min, n_min)

"""Representations f = P^2 - Q^3 with deg P = 3, deg Q = 2.

A squarefree sextic admits only finitely many such representations; the
search here is a bounded brute force over the three coefficients of Q
(P is then pinned down as an exact polynomial square root), with the
bound exposed as a parameter.  rigidity_check runs the one-parameter
deformation argument: a family P(u;t), Q(u;t) with P^2 - Q^3 fixed and
gcd(P,Q) = 1 must be constant in t.
"""

from fractions import Fraction

from ..errors import DomainError
from ..exactalg import QQ, FractionField, Poly, poly_gcd, poly_sqrt_exact


class PowerGapRep:
    """One representation f = P^2 - Q^3; degenerate marks deg Q < 2."""

    __slots__ = ("P", "Q", "degenerate")

    def __init__(self, P, Q):
        self.P = P
        self.Q = Q
        self.degenerate = Q.degree < 2

    def __eq__(self, other):
        return (isinstance(other, PowerGapRep)
                and other.P == self.P and other.Q == self.Q)

    def __hash__(self):
        return hash((tuple(sorted(self.P.coeffs.items())),
                     tuple(sorted(self.Q.coeffs.items()))))

    def to_json(self):
        from ..exactalg import poly_to_json
        return {"P": poly_to_json(self.P), "Q": poly_to_json(self.Q),
                "degenerate": self.degenerate}

    def __repr__(self):
        tag = ", degenerate" if self.degenerate else ""
        return "PowerGapRep(P=%r, Q=%r%s)" % (self.P, self.Q, tag)


def power_gap_verify(f, P, Q):
    """Exact identity test f = P^2 - Q^3."""
    if f.degree > 6:
        raise DomainError("power-gap identities are for degree <= 6")
    return (P * P - Q * Q * Q - f).is_zero()


def _bounded_fractions(height_bound):
    vals = {Fraction(0)}
    for num in range(1, height_bound + 1):
        for den in range(1, height_bound + 1):
            q = Fraction(num, den)
            if abs(q.numerator) <= height_bound and q.denominator <= height_bound:
                vals.add(q)
                vals.add(-q)
    return sorted(vals)


def _height_ok(p, bound):
    return all(abs(c.numerator) <= bound and c.denominator <= bound
               for c in p.coeffs.values())


def power_gap_search(f, height_bound):
    """All representations f = P^2 - Q^3 whose P and Q coefficients have
    numerator and denominator bounded by height_bound in absolute value.

    Complete within the bound: for each candidate Q (a full grid over the
    three coefficients), f + Q^3 either is an exact polynomial square or
    the candidate dies.  P is canonicalized to positive leading
    coefficient, since (P, Q) and (-P, Q) are the same representation.
    """
    if f.domain != QQ or f.degree != 6:
        raise DomainError("search expects a rational sextic")
    if height_bound < 1:
        raise DomainError("height bound must be positive")
    # no squarefreeness demand: a repeated-root sextic like (u^3-1)^2 still
    # has the representation P = u^3-1, Q = 0, just with the degenerate flag
    grid = _bounded_fractions(height_bound)
    var = f.var
    found = []
    seen = set()
    for q2 in grid:
        for q1 in grid:
            for q0 in grid:
                Q = Poly(QQ, var, {2: q2, 1: q1, 0: q0})
                s = f + Q * Q * Q
                if s.degree != 6:
                    continue
                P = poly_sqrt_exact(s)
                if P is None:
                    continue
                if P.lc() < 0:
                    P = -P
                if not _height_ok(P, height_bound):
                    continue
                rep = PowerGapRep(P, Q)
                if rep not in seen:
                    seen.add(rep)
                    found.append(rep)
    found.sort(key=lambda r: (r.degenerate, repr(r.Q)))
    return found


def rigidity_check(P, Q):
    """Deformation argument for a family P(u;t), Q(u;t) over Q(t).

    Differentiating P^2 - Q^3 = f in t gives 2 P dP/dt = 3 Q^2 dQ/dt, so
    with gcd(P,Q) = 1 the square Q^2 (degree 4) must divide dP/dt (degree
    at most 3): both derivatives vanish and the family is constant.  The
    verdict is "constant family" in that case and "contradiction" when a
    nonzero derivative survives, which the degree count forbids.
    """
    dom = P.domain
    if not isinstance(dom, FractionField) or Q.domain != dom:
        raise DomainError("rigidity check expects coefficients rational in a parameter")
    dP = P.map_coefficients(lambda c: c.derivative(), dom)
    dQ = Q.map_coefficients(lambda c: c.derivative(), dom)
    df = (P * P - Q * Q * Q).map_coefficients(lambda c: c.derivative(), dom)
    if not df.is_zero():
        raise DomainError("not a family over fixed f: P^2 - Q^3 depends on the parameter")
    g = poly_gcd(P, Q)
    identity = (dP * P * 2 - dQ * Q * Q * 3).is_zero()
    report = {
        "gcd_degree": g.degree,
        "identity_2PdP_eq_3Q2dQ": identity,
        "dP_zero": dP.is_zero(),
        "dQ_zero": dQ.is_zero(),
    }
    if dP.is_zero() and dQ.is_zero():
        report["verdict"] = "constant family"
        report["detail"] = "both derivatives vanish; the representation is rigid"
    else:
        report["verdict"] = "contradiction"
        report["detail"] = ("Q^2 of degree %d would divide dP/dt of degree %d"
                            % (2 * Q.degree, dP.degree))
    return report

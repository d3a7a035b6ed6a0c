"""Cyclic triple covers w^3 = v + P(u) of genus-2 sextic models.

On the curve v^2 = f with f = P^2 - Q^3 the product (v + P)(v - P)
equals -Q^3, so away from common zeros of P and f every place sees
v + P with order divisible by three and the cover is unramified;
Riemann-Hurwitz then puts the cover in genus 4.  A common zero of P and
f would be a Weierstrass point where v + P has order one, but such f
cannot be squarefree in the first place: P(u0) = 0 forces Q(u0) = 0 and
a double root of f, so the squarefree gate already excludes it and the
resultant test below is a consistency check, not an extra hypothesis.
"""

from ..errors import DomainError
from ..exactalg import FractionField, Poly, poly_resultant, poly_to_json
from ..genus2 import SexticModel, power_gap_verify


class CoverData:
    """The curve {v^2 = f(u), w^3 = v + P(u)} over a genus-2 base.

    Points are plain coordinate triples (u, v, w); the deck group sends w
    to theta*w for a primitive cube root of unity theta, so coordinates
    must live in a ring containing theta before the deck action can be
    evaluated (see deck_transform).
    """

    __slots__ = ("base", "rep", "genus")

    def __init__(self, base, rep, genus):
        self.base = base
        self.rep = rep
        self.genus = genus

    @property
    def f(self):
        return self.base.f

    @property
    def P(self):
        return self.rep.P

    @property
    def Q(self):
        return self.rep.Q

    def contains(self, p):
        """Exact membership test for a coordinate triple (u, v, w)."""
        u, v, w = p
        return v * v == self.f(u) and w ** 3 == v + self.P(u)

    def to_json(self):
        return {
            "f": poly_to_json(self.f),
            "P": poly_to_json(self.P),
            "Q": poly_to_json(self.Q),
            "genus": self.genus,
        }

    def __eq__(self, other):
        if not isinstance(other, CoverData):
            return NotImplemented
        return self.base == other.base and self.rep == other.rep

    def __repr__(self):
        return "CoverData(w^3 = v + %r over v^2 = %r)" % (self.P, self.f)


def ramification_resultant(f, P):
    """Scalar whose vanishing detects branch points of the cover.

    Eliminates v from the pair (v + P, v - P), whose v-resultant is -2P,
    and then eliminates u against f.  A zero answer means v + P and v - P
    meet somewhere on the curve, i.e. P and f share a root, which is also
    exactly where f picks up a repeated root.
    """
    Ku = FractionField(f.domain, f.var)
    vplus = Poly(Ku, "v", {1: Ku.one, 0: Ku.coerce(P)})
    vminus = Poly(Ku, "v", {1: Ku.one, 0: Ku.coerce(-P)})
    eliminated = poly_resultant(vplus, vminus)
    return poly_resultant(eliminated.num, f)


def build_cover(model, rep):
    """Assemble the triple cover of a sextic model from a gap representation.

    Checks, in order: the rep lives in the model's ring with deg P = 3 and
    deg Q <= 2; f = P^2 - Q^3 holds exactly; and the branch locus is empty.
    An unramified degree-3 cover of a genus-2 curve has genus 4, which is
    recorded on the result.
    """
    f, P, Q = model.f, rep.P, rep.Q
    for g in (P, Q):
        if g.domain != f.domain or g.var != f.var:
            raise DomainError("gap representation must live in the ring of f")
    if P.degree != 3:
        raise DomainError("the gap polynomial P must be a cubic")
    if Q.degree > 2:
        raise DomainError("the gap polynomial Q must have degree at most 2")
    if not power_gap_verify(f, P, Q):
        raise DomainError("relation failure: f does not equal P^2 - Q^3")
    if f.domain.is_zero(ramification_resultant(f, P)):
        raise DomainError("cover ramified: v + P and v - P meet on the curve")

    # Riemann-Hurwitz with an empty ramification divisor over genus 2
    doubled = 3 * (2 * 2 - 2)
    genus = (doubled + 2) // 2
    return CoverData(model, rep, genus)

"""Plane cubics and elliptic curves.

Flex loci via the Hessian, reduction of a flexed cubic to short
Weierstrass form, the chord-tangent group law, division polynomials,
torsion certification by reduction at good primes, Miller-style divisor
functions, and numeric period lattices with Betti coordinates.
"""

from .betti import betti_coordinates, elliptic_log, period_lattice
from .cubic import (BirationalChange, FlexLocus, PlaneCubic, TriPoly,
                    cubic_to_weierstrass, discriminant, hessian_flex_locus)
from .divpoly import division_poly, order_condition
from .miller import Line, MillerFunction, miller_function
from .torsion import (NonTorsionWitness, TorsionCertificate, reduced_order,
                      residue_chains, torsion_order)
from .weierstrass import (ECPoint, WeierstrassCurve, ec_add, ec_equal,
                          ec_mul, ec_neg, replay_chain)

__all__ = [
    "BirationalChange", "ECPoint", "FlexLocus", "Line", "MillerFunction",
    "NonTorsionWitness", "PlaneCubic", "TorsionCertificate", "TriPoly",
    "WeierstrassCurve", "betti_coordinates", "cubic_to_weierstrass",
    "discriminant", "division_poly", "ec_add", "ec_equal", "ec_mul",
    "ec_neg", "elliptic_log", "hessian_flex_locus", "miller_function",
    "order_condition", "period_lattice", "reduced_order", "replay_chain",
    "residue_chains", "torsion_order",
]

"""Genus-2 models, power-gap representations, and the nodal quartic."""

from .family import quartic_family_checks, quintic_reduction_check
from .model import (CurveFunction, CurvePoint, SexticModel, is_special,
                    weierstrass_points)
from .powergap import (PowerGapRep, power_gap_search, power_gap_verify,
                       rigidity_check)
from .quartic import BiPoly, QuarticModel, quartic_model

__all__ = [
    "BiPoly", "CurveFunction", "CurvePoint", "PowerGapRep", "QuarticModel",
    "SexticModel", "is_special", "power_gap_search", "power_gap_verify",
    "quartic_family_checks", "quartic_model", "quintic_reduction_check",
    "rigidity_check", "weierstrass_points",
]

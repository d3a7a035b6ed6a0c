"""Unramified triple covers of genus-2 models and their elliptic quotients."""

from .bounds import DegreeBoundsReport, image_degree_bounds
from .data import CoverData, build_cover, ramification_resultant
from .quotient import EllipticQuotient, elliptic_quotient, quotient_cubic
from .sigma import cover_fiber, deck_transform, sigma_eval, sum_map_check

__all__ = [
    "CoverData", "DegreeBoundsReport", "EllipticQuotient", "build_cover",
    "cover_fiber", "deck_transform", "elliptic_quotient",
    "image_degree_bounds", "quotient_cubic", "ramification_resultant",
    "sigma_eval", "sum_map_check",
]

"""Exact arithmetic: rationals, primes fields, polynomials, fraction
fields, quotient towers, truncated series, and root finding."""

from .domains import QQ, ComplexField, FFElem, PrimeField, RationalField
from .factor import rational_factors
from .finitefield import ff_factor_degree_profile, ff_poly_roots, ff_simple_roots
from .linalg import mat_det, mat_inverse, mat_mul, mat_vec, nullspace, solve, sylvester_matrix
from .poly import (Poly, poly_gcd, poly_lcm, poly_resultant, poly_sqrt_exact,
                   poly_xgcd, rational_roots, squarefree_part)
from .ratfunc import FractionField, RatFunc
from .roots import certify_roots, complex_roots, solve_complex_coeffs
from .series import PowerSeries, series_sqrt
from .textform import (format_poly, parse_poly, poly_from_json, poly_to_json,
                       ratfunc_from_json, ratfunc_to_json)
from .tower import Tower, TowerElement, numeric_embeddings, tower_invert, tower_norm

__all__ = [
    "QQ", "ComplexField", "FFElem", "PrimeField", "RationalField",
    "rational_factors",
    "ff_factor_degree_profile", "ff_poly_roots", "ff_simple_roots",
    "mat_det", "mat_inverse", "mat_mul", "mat_vec", "nullspace", "solve",
    "sylvester_matrix",
    "Poly", "poly_gcd", "poly_lcm", "poly_resultant", "poly_sqrt_exact",
    "poly_xgcd", "rational_roots", "squarefree_part",
    "FractionField", "RatFunc",
    "certify_roots", "complex_roots", "solve_complex_coeffs",
    "PowerSeries", "series_sqrt",
    "format_poly", "parse_poly", "poly_from_json", "poly_to_json",
    "ratfunc_from_json", "ratfunc_to_json",
    "Tower", "TowerElement", "numeric_embeddings", "tower_invert", "tower_norm",
]

"""Exact polynomial arithmetic, root isolation, factorization and the delta transform."""

from .factor import factor_rational, is_irreducible
from .laurent import LaurentPoly
from .ratpoly import RatPoly, poly_gcd, poly_xgcd, squarefree_decomposition, squarefree_part
from .roots import RealRoot, count_roots, isolate_real_roots, separate, sort_roots
from .text import format_laurent, format_poly, parse_laurent, parse_poly
from .transforms import delta_inverse, delta_transform, is_square, mu_root_map, normalize_alexander

__all__ = [
    "LaurentPoly",
    "RatPoly",
    "RealRoot",
    "count_roots",
    "delta_inverse",
    "delta_transform",
    "factor_rational",
    "format_laurent",
    "format_poly",
    "is_irreducible",
    "is_square",
    "isolate_real_roots",
    "mu_root_map",
    "normalize_alexander",
    "parse_laurent",
    "parse_poly",
    "poly_gcd",
    "poly_xgcd",
    "separate",
    "sort_roots",
    "squarefree_decomposition",
    "squarefree_part",
]

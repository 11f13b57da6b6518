"""Exact algebra over Z[u], Z[u][t, 1/t] and Q(u)[T]."""

from .laurent import LaurentPoly, XPoly, laurent_det, poly_det, to_x_basis
from .poly import ONE, U, ZERO, Poly, chebyshev_t, poly_gcd, squarefree_part
from .ratfn import RationalFn
from .tpoly import TPoly, deflate_repeated_factors, discriminant_T, tpoly_gcd, yun_factors

__all__ = [
    "LaurentPoly", "XPoly", "laurent_det", "poly_det", "to_x_basis",
    "ONE", "U", "ZERO", "Poly", "chebyshev_t", "poly_gcd", "squarefree_part",
    "RationalFn", "TPoly", "deflate_repeated_factors", "discriminant_T",
    "tpoly_gcd", "yun_factors",
]

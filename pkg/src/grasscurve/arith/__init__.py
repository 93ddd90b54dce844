"""Exact arithmetic over Q: scalars, polynomials, forms, rational functions, matrices."""

from .homo import HomoPoly, homo_gcd
from .poly import Poly, poly_gcd, poly_lcm
from .ratfun import RatFun, ratfun_reduce
from .ratmatrix import RatMatrix, SingularMatrixError, ratmatrix_inverse
from .scalar import ONE, ZERO, Q, rational, to_str

__all__ = [
    "HomoPoly",
    "ONE",
    "Poly",
    "Q",
    "RatFun",
    "RatMatrix",
    "SingularMatrixError",
    "ZERO",
    "homo_gcd",
    "poly_gcd",
    "poly_lcm",
    "ratfun_reduce",
    "ratmatrix_inverse",
    "rational",
    "to_str",
]

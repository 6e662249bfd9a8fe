"""Exact coefficient field: rationals and reduced multivariate rational expressions."""

from .variables import Variable, var
from .laurent import LaurentPoly, ZERO, ONE, divide_exact, poly_from_terms
from .polygcd import gcd, lcm
from .scalar import Scalar, ZERO_SCALAR, ONE_SCALAR, specialize
from .series import TruncatedSeries, series_truncate, geometric_inverse
from .bracket import bracket, indexed_constant
from .determinant import det_exact, det_fractions

__all__ = [
    "Variable", "var",
    "LaurentPoly", "ZERO", "ONE", "divide_exact", "poly_from_terms",
    "gcd", "lcm",
    "Scalar", "ZERO_SCALAR", "ONE_SCALAR", "specialize",
    "TruncatedSeries", "series_truncate", "geometric_inverse",
    "bracket", "indexed_constant",
    "det_exact", "det_fractions",
]

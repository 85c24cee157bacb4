"""Exact arithmetic substrate: polynomials, truncated series, rational functions, linear algebra."""

from .linalg import RatMatrix, RowEchelon, nullspace, primitive_vector, rank, rref_vectors
from .poly import NEG_INF, Poly, format_poly, poly_gcd, poly_substitute_power
from .ratfun import RationalFn, pade, series_of_rational
from .series import TruncatedSeries, series_from_values, series_substitute_power

__all__ = [
    "NEG_INF",
    "Poly",
    "RatMatrix",
    "RationalFn",
    "RowEchelon",
    "TruncatedSeries",
    "format_poly",
    "nullspace",
    "pade",
    "poly_gcd",
    "poly_substitute_power",
    "primitive_vector",
    "rank",
    "rref_vectors",
    "series_from_values",
    "series_of_rational",
    "series_substitute_power",
]

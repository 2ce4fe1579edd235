"""Exact arithmetic substrate: scalars, multivariate polynomials and truncated series."""

from algebra.multipoly import MultiPoly, binom_poly, poly_sum, variables
from algebra.scalar import ExactScalar, as_scalar, binom, binom_int, factorial, is_integral
from algebra.series import (
    TruncSeries,
    ring_inverse,
    series_inverse,
    series_mul,
    series_pow,
    series_reversion,
)

__all__ = [
    "ExactScalar",
    "MultiPoly",
    "TruncSeries",
    "as_scalar",
    "binom",
    "binom_int",
    "binom_poly",
    "factorial",
    "is_integral",
    "poly_sum",
    "ring_inverse",
    "series_inverse",
    "series_mul",
    "series_pow",
    "series_reversion",
    "variables",
]

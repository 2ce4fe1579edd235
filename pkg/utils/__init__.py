"""Shared helpers for the tightmaps packages."""

from utils.errors import (
    MalformedMapError,
    MalformedTreeError,
    NonInvertibleError,
    OracleLimitExceeded,
    OutsideTheoremRange,
    TightMapsError,
)

__all__ = [
    "MalformedMapError",
    "MalformedTreeError",
    "NonInvertibleError",
    "OracleLimitExceeded",
    "OutsideTheoremRange",
    "TightMapsError",
]

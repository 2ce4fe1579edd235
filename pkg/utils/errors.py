"""Exception hierarchy shared by every tightmaps package.

Each error also derives from the closest built-in exception so that callers
catching ``ValueError`` or ``ZeroDivisionError`` keep working.
"""


class TightMapsError(Exception):
    """Base class for all errors raised by tightmaps."""


class NonInvertibleError(TightMapsError, ZeroDivisionError):
    """Division by zero, or inversion of a series with non-invertible constant term."""


class OutsideTheoremRange(TightMapsError, ValueError):
    """A counting formula was called outside the range where it is defined."""


class MalformedMapError(TightMapsError, ValueError):
    """A rotation system is inconsistent or could not be parsed."""


class MalformedTreeError(TightMapsError, ValueError):
    """A decorated tree or arrow tree violates the local rules, or could not be parsed."""


class OracleLimitExceeded(TightMapsError, ValueError):
    """A brute-force oracle was asked for an instance above its configured size limit."""

    def __init__(self, what: str, value: int, limit: int, override: str):
        super().__init__(
            f"{what} = {value} exceeds the oracle limit {limit}; "
            f"raise it with {override} if you really want to wait."
        )
        self.value = value
        self.limit = limit

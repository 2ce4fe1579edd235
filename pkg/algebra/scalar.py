"""Exact scalar arithmetic: rationals, factorials and binomials.

Every count in tightmaps is an exact integer; intermediate series coefficients
are rationals. ``fractions.Fraction`` is the scalar type throughout, and plain
``int`` values are accepted wherever a scalar is expected.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Any, Union

from utils.errors import NonInvertibleError

ExactScalar = Fraction
Scalar = Union[int, Fraction]


def as_scalar(value: Scalar) -> Fraction:
    """Coerce an int or Fraction to a Fraction.

    Raises:
        TypeError: If ``value`` is a float or any other non-exact type.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact scalar, got {type(value).__name__}")


def is_scalar(value: Any) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def is_integral(value: Any) -> bool:
    """True for ints and for Fractions with denominator one."""
    if isinstance(value, Fraction):
        return value.denominator == 1
    return is_scalar(value)


def normalize(value: Scalar) -> Scalar:
    """Return integral Fractions as ints, everything else unchanged."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


def exact_div(numerator: Scalar, denominator: Scalar) -> Fraction:
    if denominator == 0:
        raise NonInvertibleError("division by zero")
    return Fraction(numerator) / Fraction(denominator)


@lru_cache(maxsize=None)
def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative integer {n}")
    return 1 if n < 2 else n * factorial(n - 1)


def binom_int(a: int, k: int) -> int:
    """Binomial coefficient with the falling-factorial extension to negative ``a``.

    Args:
        a: Upper argument, any integer.
        k: Lower argument, any integer.

    Returns:
        0 if ``k < 0`` or ``0 <= a < k``; otherwise ``a(a-1)...(a-k+1)/k!``.
    """
    if k < 0 or (a >= 0 and k > a):
        return 0
    numerator = 1
    for i in range(k):
        numerator *= a - i
    return numerator // factorial(k)


def falling_binomial(x: Any, k: int) -> Any:
    """``x(x-1)...(x-k+1)/k!`` for any ring element ``x`` admitting int arithmetic."""
    result: Any = 1
    for i in range(k):
        result = result * (x - i)
    return result * Fraction(1, factorial(k))


def binom(x: Any, k: int) -> Any:
    """Ring-generic binomial: exact integers for integral ``x``, polynomials otherwise."""
    if is_integral(x):
        return binom_int(int(x), k)
    if k < 0:
        return 0
    return falling_binomial(x, k)

"""Elementary counting polynomials.

All functions are generic over the coefficient ring: integer or ``Fraction``
arguments give exact scalars, ``MultiPoly`` arguments give polynomials.
"""

from fractions import Fraction
from typing import Any

from algebra.multipoly import MultiPoly
from algebra.scalar import factorial, is_integral, normalize
from utils.errors import OutsideTheoremRange


def _finish(value: Any) -> Any:
    if isinstance(value, Fraction):
        return normalize(value)
    if isinstance(value, MultiPoly) and value.is_constant():
        return value.constant_value()
    return value


def _equals(value: Any, target: int) -> bool:
    """Exact equality; a non-constant polynomial never equals an integer."""
    return bool(value == target)


def p_univ(b: Any, k: int, m: Any) -> Any:
    """``(1/k!^2) prod_{i=1..k} (m^2 - (b+i)^2)``.

    For integers ``m >= b+1`` this is ``binom(m-b-1, k) * binom(m+b+k, k)``, the
    number of words over {M, D, U} avoiding UD (see ``trees.words``).
    """
    if k < 0:
        raise OutsideTheoremRange(f"p_univ needs k >= 0, got {k}")
    result: Any = 1
    for i in range(1, k + 1):
        result = result * (m * m - (b + i) * (b + i))
    return _finish(result * Fraction(1, factorial(k) ** 2))


def q_univ(b: Any, k: int, m: Any) -> Any:
    """``(1/k!^2) prod_{i=0..k-1} (m^2 - (b-i)^2)``."""
    if k < 0:
        raise OutsideTheoremRange(f"q_univ needs k >= 0, got {k}")
    result: Any = 1
    for i in range(k):
        result = result * (m * m - (b - i) * (b - i))
    return _finish(result * Fraction(1, factorial(k) ** 2))


def r_poly(b: Any, ell: int) -> Any:
    """``(1/(l!(l+1)!)) prod_{i=1..l} (b-i+1)(b-i)``, of degree ``2l`` in ``b``."""
    if ell < 1:
        raise OutsideTheoremRange(f"r_poly needs l >= 1, got {ell}")
    result: Any = 1
    for i in range(1, ell + 1):
        result = result * ((b - i + 1) * (b - i))
    return _finish(result * Fraction(1, factorial(ell) * factorial(ell + 1)))


def two_face_count(c: Any, k: int, m1: Any, m2: Any) -> Any:
    """Tight two-face maps with ``k+1`` marked vertices (one distinguished) whose
    cycle has length at least ``2(c+1)``: ``sum_{k1+k2=k} p_k1(m1) q_k2(m2)``."""
    if k < 0:
        raise OutsideTheoremRange(f"two_face_count needs k >= 0, got {k}")
    total: Any = 0
    for k1 in range(k + 1):
        total = total + p_univ(c, k1, m1) * q_univ(c, k - k1, m2)
    return _finish(total)


def fixed_cycle_count(d: int, k: int, m1: Any, m2: Any) -> Any:
    """Tight two-face maps with ``k+1`` marks whose unique cycle has length exactly ``2d``.

    The kappa-sum counts maps with marks strictly inside both faces, the
    ``p_k(m1) delta(m2, d)`` term those with no mark off the cycle on the
    second side, and ``delta(m1, d) q_k(m2)`` those whose first face is the bare
    cycle. The first two terms only apply when ``m1 > d``: at ``m1 = d`` the
    polynomial ``p^(d)_j(d)`` does not vanish although no such map exists.

    With integer half-degrees the count is zero once ``2d`` exceeds a face
    degree. Symbolic half-degrees are treated as generic (``m1 > d``, ``m2 != d``).
    """
    if d < 1 or k < 0:
        raise OutsideTheoremRange(f"fixed_cycle_count needs d >= 1 and k >= 0, got d={d}, k={k}")
    if is_integral(m1) and is_integral(m2) and d > min(m1, m2):
        return 0
    if _equals(m1, d):
        return _finish(q_univ(d - 1, k, m2))
    total: Any = 0
    for kappa1 in range(1, k + 1):
        kappa2 = k + 1 - kappa1
        weight = Fraction(2 * d * (kappa1 + kappa2), kappa1 * kappa2)
        total = total + weight * p_univ(d, kappa1 - 1, m1) * q_univ(d - 1, kappa2 - 1, m2)
    if _equals(m2, d):
        total = total + p_univ(d, k, m1)
    return _finish(total)

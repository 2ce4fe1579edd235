"""The arrow-tree numbers alpha^(b)_{k,n} and the series around them.

``alpha(b, k, n)`` counts (up to normalization) forests of ``k+1`` simplified
``b``-arrow trees of excess 0 with ``n+1`` attaching points in total. Three
independent evaluations are provided and must agree.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Any

from algebra.scalar import binom_int, is_integral, normalize
from algebra.series import TruncSeries, series_reversion
from config import U_CACHE_SIZE
from counts.formulas import r_poly
from counts.types import AlphaMethod
from utils.errors import OutsideTheoremRange

logger = logging.getLogger(__name__)


def h_series(b: int, order: int) -> TruncSeries:
    """``h_b(u) = sum_{j=1..b} ((-1)^(j-1)/b) binom(b,j) binom(b,j-1) u^j``.

    Raises:
        OutsideTheoremRange: If ``b < 1``.
    """
    if not is_integral(b) or b < 1:
        raise OutsideTheoremRange(f"h_series needs an integer b >= 1, got {b}")
    b = int(b)
    coefficients: list = [0] * (order + 1)
    for j in range(1, min(b, order) + 1):
        coefficients[j] = Fraction((-1) ** (j - 1) * binom_int(b, j) * binom_int(b, j - 1), b)
    return TruncSeries(coefficients, order)


def u0_series(b: int, order: int) -> TruncSeries:
    """``U_0(z)``, defined by ``z = h_b(U_0(z))``."""
    return series_reversion(h_series(b, order))


@lru_cache(maxsize=None)
def _alpha_polysum(b: Any, k: int, n: int) -> Any:
    top = n - k
    if top == 0:
        return 1
    r_series = TruncSeries([0] + [r_poly(b, ell) for ell in range(1, top + 1)], top)
    total: Any = 0
    power = TruncSeries.constant(1, top)
    for s in range(1, top + 1):
        power = power * r_series
        coefficient = power.coefficient(top)
        if coefficient != 0:
            total = total + (-1) ** (top + s) * binom_int(n + s, n) * coefficient
    return normalize(total) if isinstance(total, Fraction) else total


def _alpha_lagrange(b: int, k: int, n: int) -> Any:
    top = n - k
    ratio = h_series(b, top + 1).shift_down().inverse()
    return (ratio ** (n + 1)).coefficient(top)


def _alpha_recurrence(b: int, k: int, n: int) -> Any:
    order = n + 1
    trees = TruncSeries([0] + [u_count(b, 0, j) for j in range(1, order + 1)], order)
    pointed = TruncSeries([j * trees.coefficient(j) for j in range(order + 1)], order)
    return (pointed * trees**k).coefficient(order)


def alpha(b: Any, k: int, n: int, method: AlphaMethod = AlphaMethod.POLYSUM) -> Any:
    """alpha^(b)_{k,n}.

    Args:
        b: Integer ``b >= 0`` or a ``MultiPoly`` (PolySum only).
        k: First index, ``k >= 0``.
        n: Second index, ``n >= 0``.
        method: Which evaluation to use.

    Returns:
        The exact value; 0 whenever ``k > n``; ``delta(k, n)`` for ``b`` in {0, 1}.

    Raises:
        OutsideTheoremRange: For negative indices, negative ``b``, or a method
            that needs an integer ``b``.
    """
    method = AlphaMethod(method)
    if k < 0 or n < 0:
        raise OutsideTheoremRange(f"alpha needs k, n >= 0, got k={k}, n={n}")
    if k > n:
        return 0
    if is_integral(b):
        b = int(b)
        if b < 0:
            raise OutsideTheoremRange(f"alpha needs b >= 0, got {b}")
        if b <= 1:
            value = 1 if k == n else 0
            if method is AlphaMethod.POLYSUM:
                assert _alpha_polysum(b, k, n) == value
            return value
    elif method is not AlphaMethod.POLYSUM:
        raise OutsideTheoremRange(f"the {method.value} method needs an integer b")
    if method is AlphaMethod.POLYSUM:
        return _alpha_polysum(b, k, n)
    if method is AlphaMethod.LAGRANGE:
        return normalize(Fraction(_alpha_lagrange(b, k, n)))
    return _alpha_recurrence(b, k, n)


def alpha_special(b: Any, k: int, n: int) -> Any:
    """Closed forms for ``alpha_{n-j,n}`` with ``j`` in 0..3.

    Raises:
        OutsideTheoremRange: For any other offset ``n - k``.
    """
    offset = n - k
    if offset == 0:
        return 1
    spread = b * (b - 1)
    if offset == 1:
        return spread * Fraction(n + 1, 2)
    if offset == 2:
        inner = b * Fraction(3 * n + 4, 4) + 1
        return inner * spread * (b - 1) * Fraction(n + 1, 6)
    if offset == 3:
        inner = (
            b * b * b * Fraction(3 * n * n + 9 * n + 7, 12)
            - b * b * Fraction(3 * n * n - 3 * n - 11, 12)
            - b * Fraction(3 * n + 2, 3)
            - 1
        )
        return inner * spread * (b - 1) * Fraction(n + 1, 12)
    raise OutsideTheoremRange(f"no closed form for alpha_(n-{offset}, n)")


def alpha_from_u0(b: int, k: int, n: int) -> Any:
    """``[z^n] U_0'(z) U_0(z)^k``, which equals alpha^(b)_{k,n}."""
    u0 = u0_series(b, n + 1)
    return (u0.derivative() * u0.truncate(n) ** k).coefficient(n)


@lru_cache(maxsize=U_CACHE_SIZE)
def u_count(b: int, p: int, n: int) -> int:
    """Number of simplified ``b``-arrow trees of excess ``p`` with ``n`` attaching points.

    ``U_{p,1} = 1`` (for ``p = b-1`` this is the degenerate single edge-vertex),
    and for ``n >= 2`` the root vertex has ``q >= 2`` subtrees whose excesses
    ``p_i >= 1`` add up to some ``s`` in ``p+1..b`` and whose attaching points add
    up to ``n``.

    Raises:
        OutsideTheoremRange: Unless ``b >= 2``, ``0 <= p <= b-1`` and ``n >= 1``.
    """
    if b < 2 or not 0 <= p <= b - 1 or n < 1:
        raise OutsideTheoremRange(f"u_count needs b >= 2, 0 <= p < b, n >= 1; got b={b}, p={p}, n={n}")
    if n == 1:
        return 1
    return sum(_subtree_sequences(b, n, s, 2) for s in range(p + 1, b + 1))


@lru_cache(maxsize=U_CACHE_SIZE)
def _subtree_sequences(b: int, n: int, s: int, min_parts: int) -> int:
    """Weighted count of sequences ``(p_i, n_i)`` with ``sum p_i = s``, ``sum n_i = n``
    and at least ``min_parts`` terms, each weighted by ``U_{p_i, n_i}``."""
    if n == 0 and s == 0:
        return 1 if min_parts == 0 else 0
    if n <= 0 or s <= 0:
        return 0
    total = 0
    for p_first in range(1, min(s, b - 1) + 1):
        for n_first in range(1, n + 1):
            rest = _subtree_sequences(b, n - n_first, s - p_first, max(min_parts - 1, 0))
            if rest:
                total += u_count(b, p_first, n_first) * rest
    return total

"""Series identities linking the main count to its integral form.

The main count can be read off a single series ``S(z)``::

    N = (n-2)! [z^(n-2)] S,
    S = sum_k p_k1(m1) q_k2(m2) ... q_kn(mn) U_0^(1+K) / (1+K),   K = sum k_i

and rewriting ``p`` in terms of ``q`` turns ``S`` into an integral of a
product of the generating series ``I(b, m; r) = sum_k q_k(m) r^k``.
"""

import logging
from typing import Any, List, Sequence

from algebra.scalar import binom, factorial
from algebra.series import TruncSeries
from counts.alpha import u0_series
from counts.enumeration import _p_cap, _pick_large_face, _q_cap, _vectors
from counts.formulas import p_univ, q_univ
from utils.errors import OutsideTheoremRange

logger = logging.getLogger(__name__)

Matrix = List[List[Any]]


def i_series(b: Any, m: Any, order: int) -> TruncSeries:
    """``I(b, m; r)`` truncated at ``r^order``."""
    return TruncSeries([q_univ(b, k, m) for k in range(order + 1)], order)


def s_series_direct(b: int, half_degrees: Sequence[Any], order: int) -> TruncSeries:
    """``S(z)`` from the ``p``/``q`` sum, with ``p`` applied to the first face."""
    u0 = u0_series(b, order)
    caps = [_p_cap(b, half_degrees[0])] + [_q_cap(b, m) for m in half_degrees[1:]]
    powers = [TruncSeries.constant(1, order)]
    for _ in range(order):
        powers.append(powers[-1] * u0)
    total = TruncSeries.constant(0, order)
    for vector in _vectors(caps, order - 1):
        weight: Any = p_univ(b, vector[0], half_degrees[0])
        for k_i, m in zip(vector[1:], half_degrees[1:]):
            weight = weight * q_univ(b, k_i, m)
        if weight == 0:
            continue
        exponent = 1 + sum(vector)
        total = total + powers[exponent] * weight / exponent
    return total


def s_series_integral(b: int, half_degrees: Sequence[Any], order: int) -> TruncSeries:
    """``S(z) = int_0^{U_0(z)} (1+r)^(-(2b+1)) prod_i I(b, m_i; r) dr``."""
    inner_order = max(order - 1, 0)
    r = TruncSeries.variable(inner_order)
    integrand = (r + 1) ** (-(2 * b + 1))
    for m in half_degrees:
        integrand = integrand * i_series(b, m, inner_order)
    return integrand.integral().compose(u0_series(b, order))


def budd_identity_residual(b: int, half_degrees: Sequence[Any], order: int) -> TruncSeries:
    """Coefficient-wise difference of the two evaluations of ``S``; always zero.

    Raises:
        OutsideTheoremRange: If ``order < n - 2`` or ``b < 1``.
    """
    n = len(half_degrees)
    if order < n - 2:
        raise OutsideTheoremRange(f"order must be at least n-2 = {n - 2}, got {order}")
    if b < 1:
        raise OutsideTheoremRange(f"b must be >= 1, got {b}")
    residual = s_series_direct(b, half_degrees, order) - s_series_integral(b, half_degrees, order)
    logger.debug("residual for b=%s, m=%s, order=%d: %s", b, list(half_degrees), order, residual)
    return residual


def n_count_via_integral(b: int, half_degrees: Sequence[Any]) -> Any:
    """``(n-2)! [z^(n-2)] S`` with the integral form of ``S``.

    Raises:
        OutsideTheoremRange: If ``n < 3`` or every face has degree ``2b`` (the
            angulation count carries an extra term this form does not see).
    """
    n = len(half_degrees)
    if n < 3:
        raise OutsideTheoremRange(f"outside theorem range: n must be >= 3, got {n}")
    ordered = _pick_large_face(b, half_degrees)
    if all(bool(m == b) for m in ordered):
        raise OutsideTheoremRange("the integral form does not cover 2b-angulations")
    series = s_series_integral(b, ordered, n - 2)
    return series.coefficient(n - 2) * factorial(n - 2)


def qk_from_pk_matrix(c: Any, size: int) -> Matrix:
    """Lower-triangular ``T`` with ``q_k = sum_i T[k][i] p_i``, entries ``binom(2c+1, k-i)``."""
    return [[binom(2 * c + 1, i - j) if j <= i else 0 for j in range(size)] for i in range(size)]


def pk_from_qk_matrix(b: Any, size: int) -> Matrix:
    """Lower-triangular ``T`` with ``p_k = sum_j T[k][j] q_j``, entries
    ``(-1)^(k-j) binom(2b+k-j, k-j)``."""
    return [
        [(-1) ** (i - j) * binom(2 * b + i - j, i - j) if j <= i else 0 for j in range(size)]
        for i in range(size)
    ]


def matrix_product(left: Matrix, right: Matrix) -> Matrix:
    size = len(left)
    return [
        [sum((left[i][t] * right[t][j] for t in range(size)), 0) for j in range(size)]
        for i in range(size)
    ]


def transforms_compose_to_identity(b: Any, size: int) -> bool:
    """Whether the two triangular transforms (with ``c = b``) are mutually inverse."""
    forward = matrix_product(pk_from_qk_matrix(b, size), qk_from_pk_matrix(b, size))
    backward = matrix_product(qk_from_pk_matrix(b, size), pk_from_qk_matrix(b, size))
    for i in range(size):
        for j in range(size):
            expected = 1 if i == j else 0
            if not (bool(forward[i][j] == expected) and bool(backward[i][j] == expected)):
                return False
    return True

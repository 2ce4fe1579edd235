"""Closed-form counts of tight 2b-irreducible maps and their relatives.

Each count is a finite sum over vectors ``(k_1, ..., k_n)`` of products of the
``p``/``q`` polynomials times an ``alpha`` number. The sums are cut by the
vanishing of ``alpha_{K,N}`` for ``K > N`` and, for integer half-degrees, by
the vanishing of ``p``/``q`` at small arguments.
"""

import logging
from fractions import Fraction
from typing import Any, Iterator, List, Optional, Sequence, Tuple

from algebra.multipoly import MultiPoly
from algebra.scalar import binom, factorial, is_integral, normalize
from algebra.series import TruncSeries
from counts.alpha import alpha, u0_series
from counts.formulas import p_univ, q_univ, two_face_count
from utils.errors import OutsideTheoremRange

logger = logging.getLogger(__name__)


def _finish(value: Any) -> Any:
    return normalize(value) if isinstance(value, Fraction) else value


def _vectors(caps: Sequence[Optional[int]], max_total: int) -> Iterator[Tuple[int, ...]]:
    """Non-negative integer vectors with entry-wise caps and bounded sum."""
    if not caps:
        yield ()
        return
    head_cap = caps[0] if caps[0] is not None else max_total
    for head in range(min(head_cap, max_total) + 1):
        for tail in _vectors(caps[1:], max_total - head):
            yield (head,) + tail


def _q_cap(b: Any, m: Any) -> Optional[int]:
    """Largest ``k`` with ``q^(b)_k(m)`` possibly nonzero, or None if unknown."""
    if is_integral(m) and is_integral(b):
        return 0 if m == b else int(m + b)
    return None


def _p_cap(b: Any, m: Any) -> Optional[int]:
    if is_integral(m) and is_integral(b) and m >= b + 1:
        return int(m - b - 1)
    return None


def _check_half_degrees(b: Any, half_degrees: Sequence[Any], minimum: int = 1) -> None:
    if len(half_degrees) < minimum:
        raise OutsideTheoremRange(f"outside theorem range: need at least {minimum} faces, got {len(half_degrees)}")
    if is_integral(b) and b < 1:
        raise OutsideTheoremRange(f"outside theorem range: b must be >= 1, got {b}")
    for m in half_degrees:
        if is_integral(m) and is_integral(b) and m < b:
            raise OutsideTheoremRange(
                f"outside theorem range: half-degree {m} is smaller than b = {b}"
            )


def f_count(b: Any, k: int, half_degrees: Sequence[Any]) -> Any:
    """Number of ``(k+1)``-tuples of tight ``b``-decorated trees with blossoming
    vertices of half-degrees ``half_degrees`` (label 1 in the first tree).

    Raises:
        OutsideTheoremRange: If ``b < 1``, ``k < 0`` or some ``m_i < b``.
    """
    _check_half_degrees(b, half_degrees)
    if k < 0:
        raise OutsideTheoremRange(f"f_count needs k >= 0, got {k}")
    n = len(half_degrees)
    top = n - 1
    if k > top:
        return 0
    total: Any = 0
    caps = [_q_cap(b, m) for m in half_degrees]
    for vector in _vectors(caps, top - k):
        term: Any = alpha(b, k + sum(vector), top)
        for k_i, m in zip(vector, half_degrees):
            term = term * q_univ(b, k_i, m)
        total = total + term
    return _finish(total * factorial(top))


def _pick_large_face(b: Any, half_degrees: Sequence[Any]) -> List[Any]:
    """Reorder so that the first half-degree exceeds ``b`` (integers preferred)."""
    ordered = list(half_degrees)
    for index, m in enumerate(ordered):
        if is_integral(m) and is_integral(b) and m >= b + 1:
            return [m] + ordered[:index] + ordered[index + 1 :]
    for index, m in enumerate(ordered):
        if not bool(m == b):
            return [m] + ordered[:index] + ordered[index + 1 :]
    return ordered


def angulation_formula(b: Any, n: int) -> Any:
    """Number of 2b-irreducible 2b-angulations with ``n`` labeled faces."""
    if n < 3:
        raise OutsideTheoremRange(f"outside theorem range: n must be >= 3, got {n}")
    top = n - 3
    total: Any = 0
    for k in range(top + 1):
        total = total + (-1) ** k * binom(2 * b + k, k) * alpha(b, k, top)
    total = total * factorial(top)
    if n >= 4:
        total = total + Fraction(factorial(n - 1), 2) * (-1) ** n
    return _finish(total)


def n_count(b: Any, half_degrees: Sequence[Any]) -> Any:
    """Number of planar bipartite tight 2b-irreducible maps with ``n`` labeled
    faces of degrees ``2 m_i``.

    When every ``m_i`` equals ``b`` the angulation formula is used, which adds
    the correction term for ``n >= 4``.

    Raises:
        OutsideTheoremRange: If ``n < 3``, ``b < 1`` or some ``m_i < b``.
    """
    n = len(half_degrees)
    if n < 3:
        raise OutsideTheoremRange(f"outside theorem range: n must be >= 3, got {n}")
    _check_half_degrees(b, half_degrees, minimum=3)
    if all(bool(m == b) for m in half_degrees):
        return angulation_formula(b, n)
    ordered = _pick_large_face(b, half_degrees)
    top = n - 3
    caps = [_p_cap(b, ordered[0])] + [_q_cap(b, m) for m in ordered[1:]]
    total: Any = 0
    for vector in _vectors(caps, top):
        term: Any = alpha(b, sum(vector), top) * p_univ(b, vector[0], ordered[0])
        for k_i, m in zip(vector[1:], ordered[1:]):
            term = term * q_univ(b, k_i, m)
        total = total + term
    return _finish(total * factorial(top))


def n_essential(b: Any, c: Any, half_degrees: Sequence[Any]) -> Any:
    """Tight maps, 2b-irreducible away from cycles separating faces 1 and 2,
    whose separating girth is at least ``2(c+1)``.

    Raises:
        OutsideTheoremRange: If ``n < 3``, ``b`` or ``c`` is below 1,
            ``m_1``/``m_2`` below ``c+1``, or another ``m_i`` below ``b``.
    """
    n = len(half_degrees)
    if n < 3:
        raise OutsideTheoremRange(f"outside theorem range: n must be >= 3, got {n}")
    if is_integral(c) and c < 1:
        raise OutsideTheoremRange(f"outside theorem range: c must be >= 1, got {c}")
    m1, m2 = half_degrees[0], half_degrees[1]
    for m in (m1, m2):
        if is_integral(m) and is_integral(c) and m < c + 1:
            raise OutsideTheoremRange(f"outside theorem range: half-degree {m} is below c+1 = {c + 1}")
    _check_half_degrees(b, half_degrees[2:])
    top = n - 3
    caps: List[Optional[int]] = [None] + [_q_cap(b, m) for m in half_degrees[2:]]
    total: Any = 0
    for vector in _vectors(caps, top):
        term: Any = alpha(b, sum(vector), top) * two_face_count(c, vector[0], m1, m2)
        for k_i, m in zip(vector[1:], half_degrees[2:]):
            term = term * q_univ(b, k_i, m)
        total = total + term
    return _finish(total * factorial(top))


essential_count = n_essential


def beta_count(b: Any, n: int) -> Any:
    """Tight 2b-irreducible maps with ``n`` faces of degree ``2b`` (two of them
    distinguished) whose separating girth equals ``2b``."""
    if n < 3:
        raise OutsideTheoremRange(f"outside theorem range: n must be >= 3, got {n}")
    if is_integral(b) and b < 1:
        raise OutsideTheoremRange(f"outside theorem range: b must be >= 1, got {b}")
    top = n - 3
    total: Any = 0
    for k in range(top + 1):
        total = total + binom(2 * b - 1, k) * alpha(b, k, top)
    return _finish(total * factorial(top))


def angulation_series(b: int, order: int) -> TruncSeries:
    """``N_b(z) = 2 - (1+U_0)^(-2b) + 2bz - b(2z+z^2)/(1+z)^2``.

    ``(n-2)!/(2b) [z^(n-2)] N_b(z)`` is the number of 2b-irreducible
    2b-angulations with ``n`` labeled faces.
    """
    if not is_integral(b) or b < 1:
        raise OutsideTheoremRange(f"angulation_series needs an integer b >= 1, got {b}")
    b = int(b)
    z = TruncSeries.variable(order)
    one_plus_u0 = u0_series(b, order) + 1
    correction = (z * 2 + z * z) * b / ((z + 1) ** 2)
    return 2 - one_plus_u0 ** (-2 * b) + z * (2 * b) - correction


def angulation_count(b: int, n: int) -> Any:
    if n < 3:
        raise OutsideTheoremRange(f"outside theorem range: n must be >= 3, got {n}")
    series = angulation_series(b, n - 2)
    return _finish(series.coefficient(n - 2) * Fraction(factorial(n - 2), 2 * b))


def beta_series(b: int, order: int) -> TruncSeries:
    """``sum_n beta_n/(n-3)! z^(n-3) = U_0'(z) (1 + U_0(z))^(2b-1)``."""
    u0 = u0_series(b, order + 1)
    return u0.derivative() * (u0.truncate(order) + 1) ** (2 * b - 1)


def n_count_symbolic(n: int, b: Optional[int] = None) -> Any:
    """``n_count`` as a polynomial in ``m1 .. mn``, and in ``b`` unless it is given."""
    if n < 3:
        raise OutsideTheoremRange(f"outside theorem range: n must be >= 3, got {n}")
    girth: Any = MultiPoly.variable("b") if b is None else b
    return n_count(girth, [MultiPoly.variable(f"m{i}") for i in range(1, n + 1)])


__all__ = [
    "angulation_count",
    "angulation_formula",
    "angulation_series",
    "beta_count",
    "beta_series",
    "essential_count",
    "f_count",
    "n_count",
    "n_count_symbolic",
    "n_essential",
]

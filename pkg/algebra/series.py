"""Truncated power series in one formal variable.

A ``TruncSeries`` stores the coefficients of ``x^0 .. x^order`` of a power
series, with coefficients in any commutative ring whose elements support
``+ - *`` with ints (ints, ``Fraction`` and ``MultiPoly`` are used here).
Binary operations truncate to the smaller order, so every coefficient that is
reported is exact.
"""

from fractions import Fraction
from typing import Any, Callable, Iterable, List, Mapping, Sequence

from algebra.multipoly import MultiPoly
from algebra.scalar import is_scalar, normalize
from utils.errors import NonInvertibleError


def ring_inverse(value: Any) -> Any:
    """Multiplicative inverse of a unit of the coefficient ring.

    Raises:
        NonInvertibleError: If ``value`` is zero or a non-constant polynomial.
    """
    if isinstance(value, MultiPoly):
        if value.is_zero() or not value.is_constant():
            raise NonInvertibleError(f"{value} is not invertible in the coefficient ring")
        value = value.constant_value()
    if not is_scalar(value) or value == 0:
        raise NonInvertibleError(f"{value!r} is not invertible")
    return normalize(Fraction(1) / Fraction(value))


def _is_zero(value: Any) -> bool:
    return value == 0


class TruncSeries:
    """Power series known up to and including ``x^order``."""

    __slots__ = ("_coefficients", "_order")

    def __init__(self, coefficients: Iterable[Any], order: int):
        if order < 0:
            raise ValueError(f"series order must be non-negative, got {order}")
        padded: List[Any] = list(coefficients)[: order + 1]
        padded.extend([0] * (order + 1 - len(padded)))
        self._coefficients = tuple(normalize(c) if isinstance(c, Fraction) else c for c in padded)
        self._order = order

    @classmethod
    def constant(cls, value: Any, order: int) -> "TruncSeries":
        return cls([value], order)

    @classmethod
    def variable(cls, order: int) -> "TruncSeries":
        """The series ``x`` itself."""
        return cls([0, 1], order)

    @property
    def order(self) -> int:
        return self._order

    @property
    def coefficients(self) -> tuple:
        return self._coefficients

    def coefficient(self, index: int) -> Any:
        if index < 0:
            return 0
        if index > self._order:
            raise IndexError(f"coefficient {index} is beyond truncation order {self._order}")
        return self._coefficients[index]

    def valuation(self) -> int:
        """Index of the first nonzero coefficient, or ``order + 1`` for zero."""
        for index, value in enumerate(self._coefficients):
            if not _is_zero(value):
                return index
        return self._order + 1

    def is_zero(self) -> bool:
        return all(_is_zero(c) for c in self._coefficients)

    def truncate(self, order: int) -> "TruncSeries":
        return TruncSeries(self._coefficients, min(order, self._order))

    def map(self, function: Callable[[Any], Any]) -> "TruncSeries":
        return TruncSeries([function(c) for c in self._coefficients], self._order)

    def evaluate_coefficients(self, assignment: Mapping[str, Any]) -> "TruncSeries":
        return self.map(lambda c: c.evaluate(assignment) if isinstance(c, MultiPoly) else c)

    def _coerce(self, other: Any) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            return other
        return TruncSeries.constant(other, self._order)

    def __add__(self, other: Any) -> "TruncSeries":
        other = self._coerce(other)
        order = min(self._order, other._order)
        return TruncSeries(
            [self._coefficients[i] + other._coefficients[i] for i in range(order + 1)], order
        )

    __radd__ = __add__

    def __neg__(self) -> "TruncSeries":
        return self.map(lambda c: -c)

    def __sub__(self, other: Any) -> "TruncSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "TruncSeries":
        return self._coerce(other) + (-self)

    def __mul__(self, other: Any) -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return self.map(lambda c: c * other)
        order = min(self._order, other._order)
        left, right = self._coefficients, other._coefficients
        product: List[Any] = [0] * (order + 1)
        for i in range(order + 1):
            if _is_zero(left[i]):
                continue
            for j in range(order + 1 - i):
                if not _is_zero(right[j]):
                    product[i + j] = product[i + j] + left[i] * right[j]
        return TruncSeries(product, order)

    __rmul__ = __mul__

    def inverse(self) -> "TruncSeries":
        """Multiplicative inverse.

        Raises:
            NonInvertibleError: If the constant term is not a unit.
        """
        inv0 = ring_inverse(self._coefficients[0])
        result: List[Any] = [inv0]
        for n in range(1, self._order + 1):
            total: Any = 0
            for i in range(1, n + 1):
                if not _is_zero(self._coefficients[i]):
                    total = total + self._coefficients[i] * result[n - i]
            result.append(-(total * inv0))
        return TruncSeries(result, self._order)

    def __truediv__(self, other: Any) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            return self * other.inverse()
        return self * ring_inverse(other)

    def __rtruediv__(self, other: Any) -> "TruncSeries":
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "TruncSeries":
        if not isinstance(exponent, int):
            raise TypeError("series powers must be integers")
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = TruncSeries.constant(1, self._order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def derivative(self) -> "TruncSeries":
        order = max(self._order - 1, 0)
        return TruncSeries([i * self._coefficients[i] for i in range(1, self._order + 1)], order)

    def integral(self) -> "TruncSeries":
        """Formal antiderivative with zero constant term (order grows by one)."""
        return TruncSeries(
            [0] + [self._coefficients[i] * Fraction(1, i + 1) for i in range(self._order + 1)],
            self._order + 1,
        )

    def shift_down(self) -> "TruncSeries":
        """Divide by the variable; requires a zero constant term."""
        if not _is_zero(self._coefficients[0]):
            raise ValueError("shift_down needs a zero constant term")
        return TruncSeries(self._coefficients[1:], max(self._order - 1, 0))

    def compose(self, inner: "TruncSeries") -> "TruncSeries":
        """``self(inner(x))``; ``inner`` must have zero constant term."""
        if not _is_zero(inner.coefficient(0)):
            raise ValueError("composition needs an inner series with zero constant term")
        order = min(self._order, inner.order)
        inner = inner.truncate(order)
        result = TruncSeries.constant(self._coefficients[order], order)
        for index in range(order - 1, -1, -1):
            result = result * inner + self._coefficients[index]
        return result

    def __call__(self, inner: "TruncSeries") -> "TruncSeries":
        return self.compose(inner)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self._order == other._order and all(
            a == c for a, c in zip(self._coefficients, other._coefficients)
        )

    def __hash__(self) -> int:
        return hash((self._order, self._coefficients))

    def __repr__(self) -> str:
        terms = [f"({c})*x^{i}" for i, c in enumerate(self._coefficients) if not _is_zero(c)]
        return f"TruncSeries({' + '.join(terms) or '0'} + O(x^{self._order + 1}))"


def series_mul(left: TruncSeries, right: TruncSeries) -> TruncSeries:
    return left * right


def series_pow(series: TruncSeries, exponent: int) -> TruncSeries:
    return series**exponent


def series_inverse(series: TruncSeries) -> TruncSeries:
    return series.inverse()


def series_reversion(series: TruncSeries) -> TruncSeries:
    """Compositional inverse by Lagrange inversion.

    If ``z = s(u)`` with ``s(0) = 0`` and ``s'(0)`` a unit, the reversion ``t``
    satisfies ``[z^n] t = (1/n) [u^(n-1)] (u / s(u))^n``.

    Raises:
        ValueError: If the constant term is nonzero.
        NonInvertibleError: If the linear coefficient is not a unit.
    """
    if not _is_zero(series.coefficient(0)):
        raise ValueError("reversion needs a zero constant term")
    if series.order < 1:
        raise ValueError("reversion needs order >= 1")
    order = series.order
    ratio = series.shift_down().inverse()
    coefficients: List[Any] = [0]
    power = TruncSeries.constant(1, ratio.order)
    for n in range(1, order + 1):
        power = power * ratio
        coefficients.append(power.coefficient(n - 1) * Fraction(1, n))
    return TruncSeries(coefficients, order)


def polynomial_series(coefficients: Sequence[Any], order: int) -> TruncSeries:
    """Series whose coefficients are given by a finite list, zero-padded."""
    return TruncSeries(coefficients, order)

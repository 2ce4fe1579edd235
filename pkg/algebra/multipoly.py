"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is a mapping from monomials to nonzero ``Fraction`` coefficients.
A monomial is a tuple of ``(variable, exponent)`` pairs with positive exponents,
sorted in the global variable order: ``b``, ``c``, ``d``, then ``m1, m2, ...``
by index, then any other name alphabetically.
"""

import re
from fractions import Fraction
from typing import Any, Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from algebra.scalar import Scalar, as_scalar, falling_binomial, is_scalar, normalize
from utils.errors import NonInvertibleError

Monomial = Tuple[Tuple[str, int], ...]

_INDEXED = re.compile(r"^m(\d+)$")
_LEADING = {"b": 0, "c": 1, "d": 2}


def variable_key(name: str) -> Tuple[int, int, str]:
    """Sort key implementing the global variable order."""
    if name in _LEADING:
        return (0, _LEADING[name], "")
    match = _INDEXED.match(name)
    if match:
        return (1, int(match.group(1)), "")
    return (2, 0, name)


def _monomial_product(left: Monomial, right: Monomial) -> Monomial:
    exponents: Dict[str, int] = dict(left)
    for name, power in right:
        exponents[name] = exponents.get(name, 0) + power
    return tuple(sorted(exponents.items(), key=lambda item: variable_key(item[0])))


def _monomial_degree(monomial: Monomial) -> int:
    return sum(power for _, power in monomial)


class MultiPoly:
    """Immutable exact multivariate polynomial.

    Supports ``+ - *`` with other polynomials, ints and Fractions on either
    side, non-negative integer powers, and division by nonzero scalars.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Monomial, Scalar]] = None):
        cleaned: Dict[Monomial, Fraction] = {}
        for monomial, coefficient in (terms or {}).items():
            value = as_scalar(coefficient)
            if value != 0:
                key = tuple(sorted(((n, p) for n, p in monomial if p), key=lambda item: variable_key(item[0])))
                cleaned[key] = cleaned.get(key, Fraction(0)) + value
                if cleaned[key] == 0:
                    del cleaned[key]
        self._terms: Dict[Monomial, Fraction] = cleaned
        self._hash: Optional[int] = None

    @classmethod
    def constant(cls, value: Scalar) -> "MultiPoly":
        return cls({(): value})

    @classmethod
    def variable(cls, name: str) -> "MultiPoly":
        return cls({((name, 1),): 1})

    @classmethod
    def coerce(cls, value: Union["MultiPoly", Scalar]) -> "MultiPoly":
        if isinstance(value, MultiPoly):
            return value
        if is_scalar(value):
            return cls.constant(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to MultiPoly")

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    @property
    def variables(self) -> Tuple[str, ...]:
        names = {name for monomial in self._terms for name, _ in monomial}
        return tuple(sorted(names, key=variable_key))

    def total_degree(self) -> int:
        """Total degree; the zero polynomial has degree -1."""
        if not self._terms:
            return -1
        return max(_monomial_degree(monomial) for monomial in self._terms)

    def degree(self, name: str) -> int:
        """Degree in one variable; the zero polynomial has degree -1."""
        if not self._terms:
            return -1
        return max(dict(monomial).get(name, 0) for monomial in self._terms)

    def coefficient(self, monomial: Union[Monomial, Mapping[str, int]]) -> Fraction:
        if isinstance(monomial, Mapping):
            monomial = tuple(monomial.items())
        key = tuple(sorted(((n, p) for n, p in monomial if p), key=lambda item: variable_key(item[0])))
        return self._terms.get(key, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(monomial == () for monomial in self._terms)

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return normalize(self._terms.get((), Fraction(0)))

    def __iter__(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(sorted(self._terms.items(), key=lambda item: self._order_key(item[0])))

    def __add__(self, other: Any) -> "MultiPoly":
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        terms = dict(self._terms)
        for monomial, coefficient in other._terms.items():
            terms[monomial] = terms.get(monomial, Fraction(0)) + coefficient
        return MultiPoly(terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly({monomial: -coefficient for monomial, coefficient in self._terms.items()})

    def __pos__(self) -> "MultiPoly":
        return self

    def __sub__(self, other: Any) -> "MultiPoly":
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "MultiPoly":
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Any) -> "MultiPoly":
        if is_scalar(other):
            factor = as_scalar(other)
            return MultiPoly({m: c * factor for m, c in self._terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        terms: Dict[Monomial, Fraction] = {}
        for left, a in self._terms.items():
            for right, c in other._terms.items():
                monomial = _monomial_product(left, right)
                terms[monomial] = terms.get(monomial, Fraction(0)) + a * c
        return MultiPoly(terms)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if not other.is_constant():
                return NotImplemented
            other = other.constant_value()
        if not is_scalar(other):
            return NotImplemented
        if other == 0:
            raise NonInvertibleError("polynomial division by zero")
        factor = Fraction(1) / as_scalar(other)
        return self * factor

    def __pow__(self, exponent: int) -> "MultiPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("MultiPoly powers must be non-negative integers")
        result = MultiPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def substitute(self, mapping: Mapping[str, Any]) -> "MultiPoly":
        """Simultaneously replace variables by polynomials or scalars."""
        result = MultiPoly()
        for monomial, coefficient in self._terms.items():
            term: Any = MultiPoly.constant(coefficient)
            for name, power in monomial:
                value = mapping.get(name)
                factor = MultiPoly.variable(name) if value is None else MultiPoly.coerce(value)
                term = term * factor**power
            result = result + term
        return result

    def evaluate(self, assignment: Mapping[str, Any]) -> Union["MultiPoly", Scalar]:
        """Substitute values; returns a scalar when no variable is left."""
        result = self.substitute(assignment)
        if result.is_constant():
            return result.constant_value()
        return result

    def rename(self, mapping: Mapping[str, str]) -> "MultiPoly":
        return self.substitute({old: MultiPoly.variable(new) for old, new in mapping.items()})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            return self._terms == other._terms
        if is_scalar(other):
            if other == 0:
                return not self._terms
            return self._terms == {(): as_scalar(other)}  # type: ignore[arg-type]
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self._terms.get((), Fraction(0)))
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    @staticmethod
    def _order_key(monomial: Monomial) -> Tuple[Any, ...]:
        return (-_monomial_degree(monomial), [(variable_key(n), -p) for n, p in monomial])

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for monomial, coefficient in self:
            factors = [name if power == 1 else f"{name}^{power}" for name, power in monomial]
            magnitude = abs(coefficient)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = f"{magnitude}*" + "*".join(factors)
            sign = "-" if coefficient < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


def variables(*names: str) -> Tuple[MultiPoly, ...]:
    """Convenience constructor: ``b, m1 = variables("b", "m1")``."""
    return tuple(MultiPoly.variable(name) for name in names)


def binom_poly(x: Union[MultiPoly, Scalar], k: int) -> MultiPoly:
    """``x(x-1)...(x-k+1)/k!`` as a polynomial.

    Raises:
        ValueError: If ``k`` is negative.
    """
    if k < 0:
        raise ValueError(f"binom_poly needs k >= 0, got {k}")
    return MultiPoly.coerce(falling_binomial(MultiPoly.coerce(x), k))


def poly_sum(values: Iterable[Any]) -> Any:
    """Sum that starts from int 0 so scalar inputs stay scalar."""
    total: Any = 0
    for value in values:
        total = total + value
    return total

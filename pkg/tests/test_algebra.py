"""Exact scalars, multivariate polynomials and truncated series."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from algebra import (
    MultiPoly,
    TruncSeries,
    as_scalar,
    binom,
    binom_int,
    binom_poly,
    factorial,
    is_integral,
    poly_sum,
    ring_inverse,
    series_reversion,
    variables,
)
from utils.errors import NonInvertibleError


def test_as_scalar_rejects_floats_and_bools():
    assert as_scalar(3) == Fraction(3)
    with pytest.raises(TypeError):
        as_scalar(0.5)
    with pytest.raises(TypeError):
        as_scalar(True)


def test_binomials_extend_to_negative_upper_argument():
    assert binom_int(5, 2) == 10
    assert binom_int(2, 5) == 0
    assert binom_int(-1, 3) == -1
    assert binom_int(-2, 2) == 3
    assert binom_int(4, -1) == 0
    assert factorial(6) == 720


def test_binom_of_polynomial_evaluates_like_integers():
    (b,) = variables("b")
    poly = binom(2 * b + 1, 3)
    for value in range(-3, 6):
        assert poly.evaluate({"b": value}) == binom_int(2 * value + 1, 3)


def test_multipoly_arithmetic_and_display():
    b, m1 = variables("b", "m1")
    poly = (b + m1) ** 2 - 2 * b * m1
    assert poly == b**2 + m1**2
    assert poly.total_degree() == 2
    assert poly.degree("m1") == 2
    assert str(b * 3 - 1) == "3*b - 1"
    assert (b - b).is_zero()
    assert MultiPoly.constant(4) == 4
    assert (b / 2).coefficient({"b": 1}) == Fraction(1, 2)


def test_multipoly_substitute_is_simultaneous():
    b, m1 = variables("b", "m1")
    swapped = (b + 2 * m1).substitute({"b": m1, "m1": b})
    assert swapped == m1 + 2 * b
    assert (b * m1).evaluate({"b": 2, "m1": 3}) == 6
    assert (b * m1).evaluate({"b": 2}) == 2 * m1


def test_binom_poly_rejects_negative_k():
    with pytest.raises(ValueError):
        binom_poly(MultiPoly.variable("b"), -1)


def test_poly_sum_keeps_scalars_scalar():
    assert poly_sum([1, 2, Fraction(1, 2)]) == Fraction(7, 2)
    assert poly_sum([]) == 0


def test_ring_inverse():
    assert ring_inverse(Fraction(2, 3)) == Fraction(3, 2)
    assert ring_inverse(MultiPoly.constant(4)) == Fraction(1, 4)
    with pytest.raises(NonInvertibleError):
        ring_inverse(0)
    with pytest.raises(NonInvertibleError):
        ring_inverse(MultiPoly.variable("b"))


def test_series_inverse_of_one_minus_x():
    x = TruncSeries.variable(6)
    geometric = (1 - x).inverse()
    assert geometric.coefficients == (1,) * 7
    with pytest.raises(NonInvertibleError):
        x.inverse()


def test_catalan_by_reversion():
    # u = z(1+u)^2 reverses z = u/(1+u)^2; the coefficients are Catalan numbers.
    u = TruncSeries.variable(7)
    z = u / (1 + u) ** 2
    assert series_reversion(z).coefficients == (0, 1, 2, 5, 14, 42, 132, 429)


def test_reversion_needs_zero_constant_term():
    with pytest.raises(ValueError):
        series_reversion(TruncSeries([1, 1], 3))


def test_calculus():
    series = TruncSeries([1, 2, 3], 2)
    assert series.derivative().coefficients == (2, 6)
    assert series.integral().coefficients == (0, 1, 1, 1)
    assert TruncSeries([0, 1, 1], 2).shift_down().coefficients == (1, 1)


def test_compose_with_polynomial_coefficients():
    (b,) = variables("b")
    x = TruncSeries.variable(3)
    outer = TruncSeries([0, b, 1], 3)
    composed = outer.compose(x + x * x)
    assert composed.coefficient(1) == b
    assert composed.coefficient(2) == b + 1
    assert composed.coefficient(3) == 2


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=6), st.integers(1, 6))
def test_series_times_inverse_is_one(tail, head):
    order = len(tail)
    series = TruncSeries([head] + tail, order)
    product = series * series.inverse()
    assert product.coefficients == (1,) + (0,) * order


@given(st.lists(st.integers(-5, 5), min_size=2, max_size=6))
def test_reversion_composes_to_identity(tail):
    order = len(tail)
    series = TruncSeries([0, 1] + tail, order)
    reverse = series_reversion(series)
    assert series.compose(reverse) == TruncSeries.variable(order)


@given(st.integers(-6, 6), st.integers(0, 5))
def test_is_integral_matches_fraction_denominator(numerator, k):
    value = Fraction(numerator, k + 1)
    assert is_integral(value) == (value.denominator == 1)

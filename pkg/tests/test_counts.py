"""Closed-form counts, alpha numbers and series identities."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra import MultiPoly, factorial, variables
from counts import (
    AlphaMethod,
    FaceSpec,
    alpha,
    alpha_from_u0,
    alpha_special,
    angulation_count,
    angulation_formula,
    beta_count,
    beta_series,
    budd_identity_residual,
    essential_count,
    f_count,
    fixed_cycle_count,
    h_series,
    n_count,
    n_count_symbolic,
    n_count_via_integral,
    n_essential,
    p_univ,
    pk_from_qk_matrix,
    q_univ,
    qk_from_pk_matrix,
    r_poly,
    transforms_compose_to_identity,
    two_face_count,
    u0_series,
    u_count,
)
from utils.errors import OutsideTheoremRange


class TestPolynomials:
    def test_q_univ_hand_value(self):
        assert q_univ(0, 2, 3) == 18

    def test_p_and_q_at_zero_index(self):
        assert p_univ(3, 0, 7) == 1
        assert q_univ(3, 0, 7) == 1

    def test_p_vanishes_beyond_its_range(self):
        # p_k(m) counts words with m-b-1 letters that can be M, so k > m-b-1 gives 0.
        assert p_univ(1, 2, 3) == 0
        assert p_univ(1, 1, 3) == 5

    def test_q_vanishes_for_special_faces(self):
        assert q_univ(2, 1, 2) == 0

    def test_r_poly_degree(self):
        (b,) = variables("b")
        assert r_poly(b, 3).degree("b") == 6
        assert r_poly(1, 1) == 0

    def test_symbolic_arguments_give_polynomials(self):
        b, m = variables("b", "m")
        poly = q_univ(b, 1, m)
        assert poly == m * m - b * b
        assert poly.evaluate({"b": 1, "m": 3}) == q_univ(1, 1, 3)

    def test_negative_index_is_refused(self):
        with pytest.raises(OutsideTheoremRange):
            p_univ(1, -1, 3)


class TestAlpha:
    @pytest.mark.parametrize(
        "b,k,n,expected",
        [(2, 0, 2, 6), (2, 0, 3, 20), (3, 0, 2, 51), (2, 1, 2, 3), (2, 0, 1, 2), (4, 3, 3, 1)],
    )
    def test_hand_values(self, b, k, n, expected):
        assert alpha(b, k, n) == expected

    @pytest.mark.parametrize("b", [2, 3, 4])
    def test_methods_agree(self, b):
        for n in range(0, 6):
            for k in range(0, n + 1):
                reference = alpha(b, k, n, AlphaMethod.POLYSUM)
                assert alpha(b, k, n, AlphaMethod.LAGRANGE) == reference
                assert alpha(b, k, n, AlphaMethod.RECURRENCE) == reference
                assert alpha_from_u0(b, k, n) == reference

    def test_small_b_is_kronecker_delta(self):
        for b in (0, 1):
            assert alpha(b, 3, 3) == 1
            assert alpha(b, 2, 3) == 0

    def test_k_above_n_is_zero(self):
        assert alpha(3, 4, 2) == 0

    def test_special_forms_match_polysum(self):
        b = MultiPoly.variable("b")
        for n in range(3, 7):
            for offset in range(4):
                assert alpha_special(b, n - offset, n) == alpha(b, n - offset, n)

    def test_special_forms_stop_at_offset_three(self):
        with pytest.raises(OutsideTheoremRange):
            alpha_special(2, 0, 4)

    def test_symbolic_b_needs_polysum(self):
        with pytest.raises(OutsideTheoremRange):
            alpha(MultiPoly.variable("b"), 0, 2, AlphaMethod.LAGRANGE)

    def test_negative_indices(self):
        with pytest.raises(OutsideTheoremRange):
            alpha(2, -1, 2)


class TestSeries:
    def test_h_series_for_b_two(self):
        assert h_series(2, 3).coefficients == (0, 1, -1, 0)

    def test_u0_is_catalan_for_b_two(self):
        assert u0_series(2, 5).coefficients == (0, 1, 1, 2, 5, 14)

    def test_h_series_needs_positive_b(self):
        with pytest.raises(OutsideTheoremRange):
            h_series(0, 3)

    @pytest.mark.parametrize("b,n", [(1, 3), (1, 5), (2, 3), (2, 5), (3, 4), (3, 6)])
    def test_angulation_series_matches_formula(self, b, n):
        assert angulation_count(b, n) == angulation_formula(b, n)

    @pytest.mark.parametrize("b", [1, 2, 3])
    def test_beta_series_matches_count(self, b):
        series = beta_series(b, 4)
        for n in range(3, 8):
            assert series.coefficient(n - 3) * factorial(n - 3) == beta_count(b, n)


class TestMainCount:
    @pytest.mark.parametrize(
        "b,half_degrees,expected",
        [
            (2, (3, 2, 2), 1),
            (2, (2, 2, 2, 2), 0),
            (2, (3, 2, 2, 2, 2), 12),
            (2, (3, 2, 2, 2), 2),
            (1, (1, 1, 1), 1),
            (1, (2, 1, 2, 1), 3),
        ],
    )
    def test_hand_values(self, b, half_degrees, expected):
        assert n_count(b, half_degrees) == expected

    def test_symmetric_in_faces(self):
        assert n_count(2, (4, 3, 2, 2)) == n_count(2, (2, 3, 2, 4))

    def test_outside_range(self):
        with pytest.raises(OutsideTheoremRange):
            n_count(2, (3, 2))
        with pytest.raises(OutsideTheoremRange):
            n_count(2, (3, 1, 2))
        with pytest.raises(OutsideTheoremRange):
            n_count(0, (1, 1, 1))

    def test_from_degrees_halves_and_rejects_odd(self):
        assert FaceSpec.from_degrees(2, [6, 4, 4]).half_degrees == (3, 2, 2)
        with pytest.raises(OutsideTheoremRange):
            FaceSpec.from_degrees(2, [6, 5, 4])

    def test_symbolic_count_for_three_faces(self):
        assert n_count_symbolic(3) == 1

    def test_symbolic_count_evaluates_to_numeric(self):
        poly = n_count_symbolic(4)
        assert poly.total_degree() == 2
        assert poly.evaluate({"b": 2, "m1": 3, "m2": 2, "m3": 2, "m4": 2}) == 2
        assert poly.evaluate({"b": 2, "m1": 4, "m2": 3, "m3": 2, "m4": 2}) == n_count(2, (4, 3, 2, 2))

    def test_symbolic_count_with_numeric_b(self):
        poly = n_count_symbolic(4, b=2)
        assert "b" not in poly.variables
        assert poly.evaluate({"m1": 4, "m2": 3, "m3": 2, "m4": 2}) == n_count(2, (4, 3, 2, 2))

    def test_integral_form_agrees(self):
        for half_degrees in [(3, 2, 2), (3, 2, 2, 2), (4, 3, 2, 2), (3, 3, 3, 2, 2)]:
            assert n_count_via_integral(2, half_degrees) == n_count(2, half_degrees)

    def test_integral_form_refuses_angulations(self):
        with pytest.raises(OutsideTheoremRange):
            n_count_via_integral(2, (2, 2, 2))


class TestTreeCounts:
    def test_hand_value(self):
        assert f_count(2, 0, (2, 2)) == 2

    def test_k_above_top_is_zero(self):
        assert f_count(2, 3, (2, 3)) == 0

    @pytest.mark.parametrize("b,p,n,expected", [(3, 2, 2, 2), (3, 0, 2, 3), (2, 0, 1, 1), (2, 1, 1, 1)])
    def test_arrow_tree_counts(self, b, p, n, expected):
        assert u_count(b, p, n) == expected

    def test_arrow_tree_range(self):
        with pytest.raises(OutsideTheoremRange):
            u_count(1, 0, 2)


class TestTwoFace:
    def test_hand_values(self):
        assert two_face_count(1, 0, 2, 2) == 1
        assert two_face_count(1, 1, 3, 2) == 8

    def test_fixed_cycle_hand_values(self):
        assert fixed_cycle_count(2, 0, 2, 2) == 1
        assert fixed_cycle_count(1, 0, 2, 2) == 0
        assert fixed_cycle_count(1, 1, 2, 2) == 4
        assert fixed_cycle_count(3, 1, 3, 2) == 0

    @pytest.mark.parametrize("c", [1, 2])
    def test_cycle_lengths_add_up(self, c):
        for k in range(0, 3):
            for m1 in range(c + 1, c + 4):
                for m2 in range(c + 1, c + 4):
                    total = sum(fixed_cycle_count(d, k, m1, m2) for d in range(c + 1, min(m1, m2) + 1))
                    assert total == two_face_count(c, k, m1, m2)

    def test_symmetric_under_face_swap(self):
        c, m1, m2 = variables("c", "m1", "m2")
        for k in range(4):
            assert two_face_count(c, k, m1, m2) == two_face_count(c, k, m2, m1)

    def test_essential_with_c_equal_b_is_main_count(self):
        assert n_essential(2, 2, (3, 3, 2, 2)) == n_count(2, (3, 3, 2, 2))
        assert essential_count(2, 2, (3, 3, 2, 2)) == n_essential(2, 2, (3, 3, 2, 2))

    def test_essential_range(self):
        with pytest.raises(OutsideTheoremRange):
            n_essential(2, 2, (2, 3, 2))


class TestTransforms:
    @pytest.mark.parametrize("b", [1, 2, 3])
    def test_residual_is_zero(self, b):
        assert budd_identity_residual(b, (b + 1, b, b + 2), 4).is_zero()

    def test_transforms_invert(self):
        assert transforms_compose_to_identity(2, 5)
        assert transforms_compose_to_identity(MultiPoly.variable("b"), 4)

    def test_matrices_are_lower_triangular(self):
        forward = qk_from_pk_matrix(2, 4)
        backward = pk_from_qk_matrix(2, 4)
        assert forward[0][3] == 0 and backward[1][2] == 0
        assert forward[2][0] == 10
        assert backward[1][0] == -5


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 4), st.lists(st.integers(0, 2), min_size=3, max_size=4))
def test_main_count_is_symmetric(b, extras):
    half_degrees = tuple(b + extra for extra in extras)
    if all(m == b for m in half_degrees):
        return
    assert n_count(b, half_degrees) == n_count(b, tuple(reversed(half_degrees)))

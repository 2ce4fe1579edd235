"""Rotation systems, predicates, canonical codes and the map oracles."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from counts import FaceSpec, fixed_cycle_count, n_count
from maps import (
    CombMap,
    SliceFrame,
    canonical_code,
    canonical_form,
    count_irreducible_slices,
    count_tight_irreducible,
    enumerate_maps,
    enumerate_two_face_marked,
    girth,
    is_irreducible,
    is_tight,
    map_from_code,
    map_from_text,
    map_to_text,
    separating_girth,
    simple_cycles,
)
from utils.errors import MalformedMapError, OracleLimitExceeded, OutsideTheoremRange


@pytest.fixture
def theta():
    """Two vertices joined by three edges: three digon faces."""
    return CombMap(alpha=[1, 0, 3, 2, 5, 4], sigma=[2, 5, 4, 1, 0, 3])


@pytest.fixture
def square():
    """A 4-cycle; face 1 is the inside (0, 2, 4, 6)."""
    return CombMap(alpha=[1, 0, 3, 2, 5, 4, 7, 6], sigma=[7, 2, 1, 4, 3, 6, 5, 0])


@pytest.fixture
def segment():
    return CombMap(alpha=[1, 0], sigma=[0, 1])


class TestCombMap:
    def test_theta_structure(self, theta):
        assert len(theta.vertices()) == 2
        assert theta.faces() == [(0, 5), (1, 2), (3, 4)]
        assert theta.face_degrees() == {1: 2, 2: 2, 3: 2}
        assert theta.genus() == 0

    def test_square_structure(self, square):
        assert square.faces() == [(0, 2, 4, 6), (1, 7, 5, 3)]
        assert [square.degree(v) for v in range(4)] == [2, 2, 2, 2]
        assert square.edge_endpoints(0) == (0, 1)

    def test_dual_swaps_vertices_and_faces(self, square):
        dual = square.dual()
        assert len(dual.vertices()) == len(square.faces())
        assert len(dual.faces()) == len(square.vertices())
        assert dual.dual().sigma == square.sigma

    def test_torus_has_genus_one(self):
        # One vertex with two loops interleaved around it.
        torus = CombMap(alpha=[2, 3, 0, 1], sigma=[1, 2, 3, 0])
        assert torus.genus() == 1

    @pytest.mark.parametrize(
        "alpha,sigma",
        [
            ([0, 1], [1, 0]),
            ([1, 0, 3, 2], [1, 0, 3, 2]),
            ([1, 0], [0, 0]),
            ([1, 0, 3], [0, 1, 2]),
        ],
    )
    def test_rejects_malformed_permutations(self, alpha, sigma):
        with pytest.raises(MalformedMapError):
            CombMap(alpha, sigma)

    def test_rejects_bad_decorations(self, square):
        with pytest.raises(MalformedMapError):
            square.with_marks([7])
        with pytest.raises(MalformedMapError):
            square.with_marks([0], root=1)
        with pytest.raises(MalformedMapError):
            square.with_slice_frame(SliceFrame(apex=0, base=9, outer_label=1))

    def test_face_with_label(self, theta):
        assert theta.face_with_label(2) == 1
        with pytest.raises(MalformedMapError):
            theta.face_with_label(9)


class TestPredicates:
    def test_girth(self, theta, square, segment):
        assert girth(theta) == 2
        assert girth(square) == 4
        assert girth(segment) == math.inf

    def test_loop_has_girth_one(self):
        loop = CombMap(alpha=[1, 0], sigma=[1, 0])
        assert girth(loop) == 1

    def test_tightness_needs_marked_leaves(self, segment, square):
        assert not is_tight(segment)
        assert is_tight(segment.with_marks([0, 1]))
        assert is_tight(square)

    def test_irreducibility(self, theta, square):
        assert is_irreducible(theta, 1)
        assert not is_irreducible(theta, 2)
        assert is_irreducible(square, 2)
        assert not is_irreducible(square, 2, face_labels=[])

    def test_simple_cycles(self, theta, square):
        assert [cycle.length for cycle in simple_cycles(theta)] == [2, 2, 2]
        assert [cycle.edges for cycle in simple_cycles(square)] == [frozenset({0, 1, 2, 3})]
        assert simple_cycles(square, max_length=3) == []

    def test_separating_girth(self, theta, square):
        assert separating_girth(square, 1, 2) == 4
        assert separating_girth(theta, 1, 2) == 2
        with pytest.raises(OutsideTheoremRange):
            separating_girth(square, 1, 1)


class TestCanonical:
    def test_swapping_the_faces_of_a_cycle_is_an_isomorphism(self, square):
        # A half-turn about an axis in the plane of the cycle swaps the two sides.
        assert canonical_code(square) == canonical_code(square.with_face_labels([2, 1]))

    def test_code_sees_marks(self, square):
        assert canonical_code(square.with_marks([0])) == canonical_code(square.with_marks([2]))
        assert canonical_code(square.with_marks([0, 1])) != canonical_code(square.with_marks([0, 2]))

    def test_code_round_trips_through_map(self, theta):
        rebuilt = map_from_code(canonical_code(theta))
        assert canonical_code(rebuilt) == canonical_code(theta)
        assert rebuilt == canonical_form(theta)

    def test_bad_code(self):
        with pytest.raises(MalformedMapError):
            map_from_code(b"not,a,code")


@settings(max_examples=40, deadline=None)
@given(st.permutations(range(8)))
def test_code_is_invariant_under_relabeling(permutation):
    square = CombMap(alpha=[1, 0, 3, 2, 5, 4, 7, 6], sigma=[7, 2, 1, 4, 3, 6, 5, 0], marked=[1], root=1)
    assert canonical_code(square.relabel(permutation)) == canonical_code(square)


class TestSerialization:
    def test_text_form(self, square):
        text = map_to_text(square.with_marks([0, 2], root=2))
        assert text.splitlines() == ["E=4", "1 0 3 2 5 4 7 6", "7 2 1 4 3 6 5 0", "1 2", "marks=0 2", "root=2"]
        assert map_from_text(text) == square.with_marks([0, 2], root=2)

    def test_slice_line(self, square):
        framed = square.with_slice_frame(SliceFrame(apex=2, base=0, outer_label=2))
        assert map_from_text(map_to_text(framed)).slice_frame == SliceFrame(2, 0, 2)

    @pytest.mark.parametrize(
        "text",
        ["", "E=1\n1 0\n0 1", "E=2\n1 0\n0 1\n1", "E=1\n1 0\n0 1\n1\nfoo=3", "E=1\n1 x\n0 1\n1"],
    )
    def test_rejects_bad_text(self, text):
        with pytest.raises(MalformedMapError):
            map_from_text(text)


class TestOracle:
    def test_theta_is_the_only_tight_irreducible_map(self):
        assert count_tight_irreducible(FaceSpec(1, (1, 1, 1))) == 1 == n_count(1, (1, 1, 1))

    def test_small_b_one_instance(self):
        assert count_tight_irreducible(FaceSpec(1, (2, 1, 1))) == n_count(1, (2, 1, 1)) == 1

    def test_slices_are_maps_with_two_extra_faces(self):
        assert count_irreducible_slices(1, (1,)) == n_count(1, (2, 1, 1)) == 1

    def test_enumeration_includes_untight_maps(self):
        maps = list(enumerate_maps(FaceSpec(1, (2, 1, 1))))
        assert any(not is_tight(m) for m in maps)
        assert all(m.genus() == 0 for m in maps)

    def test_limit(self):
        with pytest.raises(OracleLimitExceeded):
            count_tight_irreducible(FaceSpec(2, (3, 2, 2)), max_edges=5)

    def test_two_face_table(self):
        assert enumerate_two_face_marked(2, 2, 0) == {1: 0, 2: 1}
        table = enumerate_two_face_marked(2, 2, 1)
        assert table[1] == fixed_cycle_count(1, 1, 2, 2) == 4

    def test_two_face_limits(self):
        with pytest.raises(OutsideTheoremRange):
            enumerate_two_face_marked(0, 2, 0)
        with pytest.raises(OracleLimitExceeded):
            enumerate_two_face_marked(5, 5, 0, max_edges=8)

    @pytest.mark.slow
    @pytest.mark.parametrize("b,half_degrees", [(2, (3, 2, 2)), (1, (2, 2, 1)), (1, (1, 1, 1, 1))])
    def test_oracle_matches_formula(self, b, half_degrees):
        assert count_tight_irreducible(FaceSpec(b, half_degrees)) == n_count(b, half_degrees)

    @pytest.mark.slow
    @pytest.mark.parametrize("half_degrees,expected", [((3, 2, 2, 2), 2), ((2, 2, 2, 2), 0)])
    def test_hexagon_dissections_beyond_the_default_limit(self, half_degrees, expected):
        spec = FaceSpec(2, half_degrees)
        assert count_tight_irreducible(spec, max_edges=spec.edge_count) == expected == n_count(2, half_degrees)

"""Closing decorated trees into slices, and the slice checker."""

import pytest

from counts import n_count
from maps import CombMap, SliceFrame, canonical_code
from trees import (
    Branch,
    DualNode,
    EdgeNode,
    PrimalNode,
    close_tree,
    close_tree_dual,
    generate_decorated_trees,
    validate_slice,
)
from utils.errors import MalformedTreeError

DIGON_TREE = EdgeNode(Branch(0, DualNode(1, 1, ("L",))))
SQUARE_TREE = EdgeNode(Branch(1, PrimalNode((Branch(1, EdgeNode(Branch(0, DualNode(1, 2, ("L", "L", "L"))))),))))


class TestClosure:
    def test_special_vertex_closes_to_a_digon(self):
        digon = close_tree(DIGON_TREE, 1)
        assert digon.edge_count == 2
        assert len(digon.vertices()) == 2
        assert digon.face_degrees() == {0: 2, 1: 2}
        assert digon.slice_frame == SliceFrame(apex=0, base=0, outer_label=0)
        assert validate_slice(digon, 1)

    def test_square_slice(self):
        square = close_tree(SQUARE_TREE, 1)
        assert square.edge_count == 4
        assert square.face_degrees() == {0: 4, 1: 4}
        assert square.genus() == 0
        assert square.slice_frame == SliceFrame(apex=3, base=0, outer_label=0)
        report = validate_slice(square, 1)
        assert report.ok, report.reason

    def test_dual_of_the_closure(self):
        dual = close_tree_dual(SQUARE_TREE, 1)
        assert len(dual.vertices()) == 2
        assert len(dual.faces()) == 4

    def test_invalid_tree_is_refused(self):
        with pytest.raises(MalformedTreeError):
            close_tree(EdgeNode(Branch(2, PrimalNode())), 1)

    @pytest.mark.parametrize(
        "b,half_degrees",
        [(1, (1,)), (1, (2,)), (1, (2, 1)), (1, (3, 1)), (1, (2, 2)), (2, (2,)), (2, (3,)), (2, (2, 2)), (2, (3, 2))],
    )
    def test_every_tree_closes_to_a_distinct_slice(self, b, half_degrees):
        trees = generate_decorated_trees(b, half_degrees)
        codes = set()
        for tree in trees:
            slice_map = close_tree(tree, b)
            report = validate_slice(slice_map, b)
            assert report.ok, report.reason
            inner = {label: degree for label, degree in slice_map.face_degrees().items() if label != 0}
            assert inner == {label: 2 * m for label, m in enumerate(half_degrees, start=1)}
            codes.add(canonical_code(slice_map))
        assert len(codes) == len(trees) == n_count(b, (b + 1, b) + tuple(half_degrees))


class TestValidateSlice:
    @pytest.fixture
    def square(self):
        return close_tree(SQUARE_TREE, 1)

    def test_needs_a_frame(self, square):
        report = validate_slice(square.with_slice_frame(None), 1)
        assert not report
        assert "slice frame" in report.reason

    def test_explicit_apex_and_base(self, square):
        assert validate_slice(square.with_slice_frame(None), 1, apex=3, base=0)

    def test_apex_on_the_base_is_refused(self, square):
        # The blue side then runs all the way around the contour.
        report = validate_slice(square, 1, apex=1)
        assert not report

    def test_irreducibility_is_checked(self, square):
        assert validate_slice(square, 2)
        report = validate_slice(close_tree(DIGON_TREE, 1), 2)
        assert not report
        assert "irreducible" in report.reason

    def test_single_edge(self):
        segment = CombMap([1, 0], [0, 1], face_labels=[0], slice_frame=SliceFrame(0, 0, 0))
        assert not validate_slice(segment, 1)
        assert validate_slice(segment, 1, allow_empty=True)


    def test_apex_and_base_are_keyword_only(self, square):
        unframed = square.with_slice_frame(None)
        assert validate_slice(unframed, b=1, apex=3, base=0)
        with pytest.raises(TypeError):
            validate_slice(unframed, 3, 0, 1)

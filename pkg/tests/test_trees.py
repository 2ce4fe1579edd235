"""Words, arrow trees, decorated trees and their text form."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from counts import f_count, p_univ, q_univ, u_count
from trees import (
    LEAFLET,
    ArrowTree,
    Branch,
    DualNode,
    EdgeNode,
    PrimalNode,
    charge,
    check_tight,
    decoration_word,
    enumerate_arrow_trees,
    enumerate_blossom_words,
    enumerate_decorated_tuples,
    generate_decorated_tuples,
    enumerate_mdu_words,
    expected_charge,
    generate_arrow_trees,
    generate_blossom_words,
    generate_decorated_trees,
    generate_mdu_words,
    is_tight_word,
    is_twig,
    subtree_charges,
    tree_from_text,
    tree_to_text,
    validate_arrow_tree,
    validate_decorated_tree,
)
from utils.errors import MalformedTreeError, OracleLimitExceeded, OutsideTheoremRange

SQUARE_TREE = EdgeNode(Branch(1, PrimalNode((Branch(1, EdgeNode(Branch(0, DualNode(1, 2, ("L", "L", "L"))))),))))


class TestWords:
    def test_tight_words_for_a_small_vertex(self):
        assert list(generate_blossom_words(1, 3, 0)) == ["LLLLT"]
        assert sorted(generate_blossom_words(1, 2, 1)) == ["ALL", "LAL", "LLA"]

    def test_special_vertex_has_one_word(self):
        assert list(generate_blossom_words(2, 2, 0)) == ["LLL"]
        assert list(generate_blossom_words(2, 2, 1)) == []

    def test_untight_words_are_kept_on_request(self):
        assert len(list(generate_blossom_words(1, 3, 0, tight=False))) == 5

    @pytest.mark.parametrize("b", [1, 2, 3])
    def test_blossom_words_count_as_q(self, b):
        for m in range(b + 1, b + 4):
            for k in range(0, m + b + 1):
                assert enumerate_blossom_words(b, m, k) == q_univ(b, k, m)

    @pytest.mark.parametrize("c", [0, 1, 2])
    def test_mdu_words_count_as_p(self, c):
        for m in range(c + 1, c + 4):
            for k in range(0, m - c):
                assert enumerate_mdu_words(c, m, k) == p_univ(c, k, m)

    def test_mdu_words_avoid_ud(self):
        assert all("UD" not in word for word in generate_mdu_words(1, 4, 1))

    def test_ranges(self):
        with pytest.raises(OutsideTheoremRange):
            list(generate_blossom_words(2, 1, 0))
        with pytest.raises(OutsideTheoremRange):
            list(generate_mdu_words(2, 2, 0))


@given(st.text(alphabet="ALT", max_size=12))
def test_tight_word_is_pattern_free(word):
    assert is_tight_word(word) == all(not (a == "T" and c == "L") for a, c in zip(word, word[1:]))


class TestArrowTrees:
    @pytest.mark.parametrize("b", [2, 3, 4])
    def test_counts_match_recurrence(self, b):
        for p in range(b):
            for n in range(1, 5):
                assert enumerate_arrow_trees(b, p, n) == u_count(b, p, n)

    def test_generated_trees_are_valid(self):
        for tree in generate_arrow_trees(3, 0, 3):
            validate_arrow_tree(tree, 3)
            assert tree.attaching_points() == 3

    def test_degenerate_tree(self):
        assert list(generate_arrow_trees(3, 2, 1)) == [ArrowTree(2)]
        with pytest.raises(MalformedTreeError):
            validate_arrow_tree(ArrowTree(1), 3)

    def test_arrow_sum_is_checked(self):
        with pytest.raises(MalformedTreeError):
            validate_arrow_tree(ArrowTree(0, (ArrowTree(2), ArrowTree(2))), 3)

    def test_limits(self):
        with pytest.raises(OutsideTheoremRange):
            list(generate_arrow_trees(1, 0, 2))
        with pytest.raises(OracleLimitExceeded):
            list(generate_arrow_trees(2, 0, 99))


class TestDecoratedTrees:
    def test_square_tree_is_valid_and_tight(self):
        validate_decorated_tree(SQUARE_TREE, 1)
        assert check_tight(SQUARE_TREE)
        assert generate_decorated_trees(1, [2]) == [SQUARE_TREE]

    def test_charges(self):
        assert charge(SQUARE_TREE) == expected_charge(0) == 1
        assert list(subtree_charges(SQUARE_TREE)) == [(0, 1), (1, 2)]

    def test_twig_and_word(self):
        twig = EdgeNode(Branch(0, PrimalNode()))
        assert is_twig(twig)
        vertex = DualNode(1, 3, (LEAFLET, Branch(0, twig), LEAFLET, LEAFLET, LEAFLET))
        assert decoration_word(vertex) == "LTLLL"
        assert not check_tight(EdgeNode(Branch(0, vertex)))

    def test_two_special_vertices(self):
        trees = generate_decorated_trees(2, [2, 2])
        assert len(trees) == f_count(2, 0, (2, 2)) == 2
        for tree in trees:
            validate_decorated_tree(tree, 2)

    @pytest.mark.parametrize(
        "b,half_degrees",
        [(1, (2,)), (1, (2, 1)), (1, (1, 1)), (2, (3,)), (2, (2, 2)), (2, (3, 2)), (1, (2, 2)), (1, (3, 1))],
    )
    def test_tree_count_matches_formula(self, b, half_degrees):
        trees = generate_decorated_trees(b, half_degrees)
        assert len(trees) == f_count(b, 0, half_degrees)
        for tree in trees:
            validate_decorated_tree(tree, b)
            assert check_tight(tree)
            assert all(c == expected_charge(p) for p, c in subtree_charges(tree))

    @pytest.mark.parametrize("b,k,half_degrees", [(1, 1, (2, 1)), (1, 1, (2, 2)), (2, 1, (3, 2)), (1, 2, (2, 1, 1))])
    def test_tuple_count_matches_formula(self, b, k, half_degrees):
        assert enumerate_decorated_tuples(b, k, half_degrees) == f_count(b, k, half_degrees)

    def test_tuples_share_the_labels(self):
        tuples = list(generate_decorated_tuples(1, 1, (2, 1)))
        assert len(tuples) == enumerate_decorated_tuples(1, 1, (2, 1))
        assert all(len(group) == 2 for group in tuples)

    @pytest.mark.parametrize(
        "tree",
        [
            EdgeNode(Branch(2, PrimalNode((Branch(1, EdgeNode(Branch(0, DualNode(1, 2, ("L",) * 3)))),)))),
            EdgeNode(Branch(1, PrimalNode((Branch(1, EdgeNode(Branch(0, DualNode(1, 2, ("L",) * 2)))),)))),
            EdgeNode(Branch(1, PrimalNode((Branch(1, EdgeNode(Branch(0, DualNode(1, 2, ("L", "L", "T"))))),)))),
            EdgeNode(Branch(1, PrimalNode((Branch(1, EdgeNode(Branch(1, PrimalNode()))),)))),
            EdgeNode(
                Branch(
                    1,
                    PrimalNode(
                        (
                            Branch(1, EdgeNode(Branch(0, DualNode(1, 2, ("L",) * 3)))),
                            Branch(1, EdgeNode(Branch(0, DualNode(1, 2, ("L",) * 3)))),
                        )
                    ),
                )
            ),
        ],
    )
    def test_rule_violations(self, tree):
        with pytest.raises(MalformedTreeError):
            validate_decorated_tree(tree, 1)

    def test_limits(self):
        with pytest.raises(OutsideTheoremRange):
            generate_decorated_trees(2, [1])
        with pytest.raises(OracleLimitExceeded):
            generate_decorated_trees(1, [1, 1, 1, 1])


class TestTreeText:
    def test_square_tree_text(self):
        text = tree_to_text(SQUARE_TREE)
        assert text == "(e 1 (p 1 (e 0 (d 1 2 L L L))))"
        assert tree_from_text(text) == SQUARE_TREE

    def test_round_trip_over_generated_trees(self):
        for tree in generate_decorated_trees(1, [2, 1]):
            assert tree_from_text(tree_to_text(tree)) == tree

    def test_whitespace_is_free(self):
        assert tree_from_text("(e 1\n  (p 1 (e 0 (d 1 2 L L L) ) ) )") == SQUARE_TREE

    @pytest.mark.parametrize(
        "text",
        ["", "(e 1 (q))", "(p)", "(e 1 (p)) extra", "(e x (p))", "(e 1 (p)", "(d 1 1 L)"],
    )
    def test_malformed_text(self, text):
        with pytest.raises(MalformedTreeError):
            tree_from_text(text)

"""Decorated trees, arrow trees and blossoming words, and the closure to slices."""

from trees.arrow_trees import ArrowTree, enumerate_arrow_trees, generate_arrow_trees, validate_arrow_tree
from trees.closure import SliceReport, close_tree, close_tree_dual, validate_slice
from trees.decorated import (
    LEAFLET,
    Branch,
    DecoratedTree,
    DualNode,
    EdgeNode,
    PrimalNode,
    charge,
    check_tight,
    decoration_word,
    enumerate_decorated_tuples,
    expected_charge,
    generate_decorated_trees,
    generate_decorated_tuples,
    is_twig,
    subtree_charges,
    validate_decorated_tree,
)
from trees.serialization import tree_from_text, tree_to_text
from trees.words import (
    enumerate_blossom_words,
    enumerate_mdu_words,
    generate_blossom_words,
    generate_mdu_words,
    is_tight_word,
)

__all__ = [
    "ArrowTree",
    "Branch",
    "DecoratedTree",
    "DualNode",
    "EdgeNode",
    "LEAFLET",
    "PrimalNode",
    "SliceReport",
    "charge",
    "check_tight",
    "close_tree",
    "close_tree_dual",
    "decoration_word",
    "enumerate_arrow_trees",
    "enumerate_blossom_words",
    "enumerate_decorated_tuples",
    "enumerate_mdu_words",
    "expected_charge",
    "generate_arrow_trees",
    "generate_blossom_words",
    "generate_decorated_trees",
    "generate_decorated_tuples",
    "generate_mdu_words",
    "is_tight_word",
    "is_twig",
    "subtree_charges",
    "tree_from_text",
    "tree_to_text",
    "validate_arrow_tree",
    "validate_decorated_tree",
    "validate_slice",
]

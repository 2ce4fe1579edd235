"""Simplified b-arrow trees, generated straight from their local rules.

An ``ArrowTree`` of excess ``p`` is read from its root edge-vertex:

* either it is the degenerate tree, a lone edge-vertex that is at the same
  time root and attaching point (only for ``p = b-1``);
* or the root leads to a primal vertex whose other half-edges lead, in
  clockwise order, to subtrees of excesses ``p_1, ..., p_q`` with
  ``1 <= p_i <= b-1`` and ``p_1 + ... + p_q = p + 1``.

The arrow counts follow: ``b-p`` arrows next to the root, ``p_i`` arrows on
the half-edge towards child ``i``, and ``b-1`` next to every attaching point.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Tuple

from config import MAX_ATTACHING_POINTS
from utils.errors import MalformedTreeError, OracleLimitExceeded, OutsideTheoremRange


@dataclass(frozen=True)
class ArrowTree:
    excess: int
    children: Tuple["ArrowTree", ...] = ()

    @property
    def is_degenerate(self) -> bool:
        return not self.children

    def attaching_points(self) -> int:
        if self.is_degenerate:
            return 1
        return sum(child.attaching_points() for child in self.children)


def validate_arrow_tree(tree: ArrowTree, b: int) -> None:
    """Check the local rules at every node.

    Raises:
        MalformedTreeError: On the first violated rule.
    """
    if tree.is_degenerate:
        if tree.excess != b - 1:
            raise MalformedTreeError(f"a lone edge-vertex must have excess {b - 1}, got {tree.excess}")
        return
    if not 0 <= tree.excess <= b - 1:
        raise MalformedTreeError(f"excess {tree.excess} is outside 0..{b - 1}")
    arrows = (b - tree.excess) + sum(child.excess for child in tree.children)
    if arrows != b + 1:
        raise MalformedTreeError(f"{arrows} arrows around a primal vertex, expected {b + 1}")
    for child in tree.children:
        if child.excess < 1:
            raise MalformedTreeError("child subtrees cannot have excess 0")
        validate_arrow_tree(child, b)


def _check_range(b: int, p: int, n: int) -> None:
    if b < 2 or not 0 <= p <= b - 1 or n < 1:
        raise OutsideTheoremRange(f"arrow trees need b >= 2, 0 <= p < b, n >= 1; got b={b}, p={p}, n={n}")
    if n > MAX_ATTACHING_POINTS:
        raise OracleLimitExceeded(
            "attaching points", n, MAX_ATTACHING_POINTS, "TIGHTMAPS_MAX_ATTACHING_POINTS"
        )


@lru_cache(maxsize=None)
def _trees(b: int, p: int, n: int) -> Tuple[ArrowTree, ...]:
    found: List[ArrowTree] = []
    if p == b - 1 and n == 1:
        found.append(ArrowTree(p))
    for children in _forests(b, p + 1, n):
        found.append(ArrowTree(p, children))
    return tuple(found)


@lru_cache(maxsize=None)
def _forests(b: int, excess: int, n: int) -> Tuple[Tuple[ArrowTree, ...], ...]:
    """Nonempty sequences of subtrees with total excess ``excess`` and ``n`` attaching points."""
    found: List[Tuple[ArrowTree, ...]] = []
    for first_excess in range(1, min(excess, b - 1) + 1):
        for first_n in range(1, n + 1):
            rest_excess, rest_n = excess - first_excess, n - first_n
            if rest_excess == 0 and rest_n == 0:
                tails: Tuple[Tuple[ArrowTree, ...], ...] = ((),)
            elif rest_excess == 0 or rest_n == 0:
                continue
            else:
                tails = _forests(b, rest_excess, rest_n)
            for head in _trees(b, first_excess, first_n):
                for tail in tails:
                    found.append((head,) + tail)
    return tuple(found)


def generate_arrow_trees(b: int, p: int, n: int) -> Iterator[ArrowTree]:
    """Every simplified ``b``-arrow tree of excess ``p`` with ``n`` attaching points.

    Raises:
        OutsideTheoremRange: Unless ``b >= 2``, ``0 <= p <= b-1`` and ``n >= 1``.
        OracleLimitExceeded: If ``n`` is above ``TIGHTMAPS_MAX_ATTACHING_POINTS``.
    """
    _check_range(b, p, n)
    yield from _trees(b, p, n)


def enumerate_arrow_trees(b: int, p: int, n: int) -> int:
    return sum(1 for _ in generate_arrow_trees(b, p, n))

"""b-decorated trees: the tree side of the slice bijection.

A decorated tree lives on the derived map and has three kinds of nodes:

* ``EdgeNode``: an edge-vertex. The root is an edge-vertex of degree one
  whose (implicit) parent is the outer dual vertex; every other edge-vertex
  has a parent and one child.
* ``PrimalNode``: a primal vertex with its child edge-vertices, clockwise
  after the parent. A primal vertex without children ends a twig.
* ``DualNode``: a blossoming vertex with a label and a half-degree ``m``.
  Its items, clockwise after the parent, are leaflets (``"L"``) and branches
  to child edge-vertices (attaching points or twigs).

A ``Branch`` is a tree edge together with the number of arrows it carries;
arrows only sit on primal half-edges, so branches to or from dual vertices
carry none.

Edge-vertex types follow from the neighbours: primal/primal is bioriented
(``b`` arrows in total), primal/dual is bent (``b`` arrows next to a labeled
vertex, ``b-1`` next to a special one, none for a twig) and dual/dual only
occurs for ``b = 1`` next to a special vertex.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple, Union

from config import MAX_BLOSSOMING, MAX_TREE_HALF_DEGREE_SUM
from trees.words import generate_blossom_words, is_tight_word
from utils.errors import MalformedTreeError, OracleLimitExceeded, OutsideTheoremRange

logger = logging.getLogger(__name__)

LEAFLET = "L"


@dataclass(frozen=True)
class Branch:
    arrows: int
    node: "Node"


@dataclass(frozen=True)
class EdgeNode:
    child: Branch


@dataclass(frozen=True)
class PrimalNode:
    children: Tuple[Branch, ...] = ()


@dataclass(frozen=True)
class DualNode:
    label: int
    half_degree: int
    items: Tuple[Union[str, Branch], ...] = ()


Node = Union[EdgeNode, PrimalNode, DualNode]
DecoratedTree = EdgeNode


def is_twig(edge: EdgeNode) -> bool:
    """An edge-vertex ending at a childless primal vertex."""
    child = edge.child.node
    return isinstance(child, PrimalNode) and not child.children


def decoration_word(node: DualNode) -> str:
    """The clockwise A/L/T word of a blossoming vertex, read from its root."""
    letters = []
    for item in node.items:
        if item == LEAFLET:
            letters.append("L")
        elif isinstance(item, Branch) and isinstance(item.node, EdgeNode) and is_twig(item.node):
            letters.append("T")
        else:
            letters.append("A")
    return "".join(letters)


def dual_nodes(node: Node) -> Iterator[DualNode]:
    """Every blossoming vertex below ``node``, in depth-first clockwise order."""
    if isinstance(node, DualNode):
        yield node
        for item in node.items:
            if isinstance(item, Branch):
                yield from dual_nodes(item.node)
    elif isinstance(node, PrimalNode):
        for branch in node.children:
            yield from dual_nodes(branch.node)
    else:
        yield from dual_nodes(node.child.node)


def check_tight(tree: Node) -> bool:
    """No blossoming vertex has a twig immediately followed by a leaflet."""
    return all(is_tight_word(decoration_word(node)) for node in dual_nodes(tree))


def validate_decorated_tree(tree: DecoratedTree, b: int) -> None:
    """Check the local characterization at every node.

    Raises:
        MalformedTreeError: On the first violated rule.
    """
    if not isinstance(tree, EdgeNode):
        raise MalformedTreeError("a decorated tree is planted on an edge-vertex")
    labels: List[int] = []
    _validate_edge(tree, b, parent_primal=False, parent_arrows=0, labels=labels)
    if len(set(labels)) != len(labels):
        raise MalformedTreeError(f"repeated labels {sorted(labels)}")


def _validate_edge(edge: EdgeNode, b: int, parent_primal: bool, parent_arrows: int, labels: List[int]) -> None:
    child = edge.child.node
    arrows = edge.child.arrows
    if isinstance(child, PrimalNode):
        if parent_primal:
            if parent_arrows < 1 or arrows < 1 or parent_arrows + arrows != b:
                raise MalformedTreeError(
                    f"bioriented edge-vertex with {parent_arrows}+{arrows} arrows, expected {b} in total"
                )
        elif child.children and arrows != b:
            raise MalformedTreeError(f"bent edge-vertex towards a primal vertex carries {arrows} arrows, expected {b}")
        elif not child.children and arrows != 0:
            raise MalformedTreeError("a twig carries no arrows")
        if not child.children and parent_primal:
            raise MalformedTreeError("a primal leaf must hang from a blossoming vertex")
        _validate_primal(child, b, arrows, labels)
    elif isinstance(child, DualNode):
        if arrows != 0:
            raise MalformedTreeError("dual half-edges carry no arrows")
        if parent_primal:
            expected = b - 1 if child.half_degree == b else b
            if parent_arrows != expected or expected < 1:
                raise MalformedTreeError(
                    f"bent edge-vertex next to a vertex of half-degree {child.half_degree} "
                    f"carries {parent_arrows} arrows, expected {expected}"
                )
        elif b != 1 or child.half_degree != 1:
            raise MalformedTreeError("dual/dual edge-vertices need b = 1 and a special child")
        _validate_dual(child, b, labels)
    else:
        raise MalformedTreeError("an edge-vertex must lead to a primal or dual vertex")


def _validate_primal(node: PrimalNode, b: int, parent_arrows: int, labels: List[int]) -> None:
    if not node.children:
        return
    total = parent_arrows + sum(branch.arrows for branch in node.children)
    if total != b + 1:
        raise MalformedTreeError(f"{total} arrows around a primal vertex, expected {b + 1}")
    for branch in node.children:
        if not isinstance(branch.node, EdgeNode):
            raise MalformedTreeError("primal vertices are adjacent to edge-vertices only")
        if not 1 <= branch.arrows <= b:
            raise MalformedTreeError(f"{branch.arrows} arrows on a primal half-edge")
        _validate_edge(branch.node, b, parent_primal=True, parent_arrows=branch.arrows, labels=labels)


def _validate_dual(node: DualNode, b: int, labels: List[int]) -> None:
    labels.append(node.label)
    m = node.half_degree
    if m < b:
        raise MalformedTreeError(f"blossoming vertex {node.label} has half-degree {m} < b = {b}")
    word = decoration_word(node)
    if len(word) != 2 * m - 1:
        raise MalformedTreeError(f"vertex {node.label} has {len(word)} items, expected {2 * m - 1}")
    if m == b and word != "L" * (2 * b - 1):
        raise MalformedTreeError(f"special vertex {node.label} must carry leaflets only")
    if m > b and word.count("T") != m - b - 1:
        raise MalformedTreeError(f"vertex {node.label} has {word.count('T')} twigs, expected {m - b - 1}")
    for item in node.items:
        if isinstance(item, Branch):
            if item.arrows != 0 or not isinstance(item.node, EdgeNode):
                raise MalformedTreeError("blossoming vertices connect to edge-vertices through dual half-edges")
            _validate_edge(item.node, b, parent_primal=False, parent_arrows=0, labels=labels)
        elif item != LEAFLET:
            raise MalformedTreeError(f"unknown item {item!r}")


def _buds(edge: EdgeNode, parent_primal: bool) -> int:
    child_primal = isinstance(edge.child.node, PrimalNode)
    if parent_primal and child_primal:
        return 2
    if parent_primal or child_primal:
        return 1
    return 0


def charge(edge: EdgeNode, parent_primal: bool = False) -> int:
    """Leaflets minus buds in the subtree planted at ``edge``.

    A bioriented edge-vertex has two buds, a bent one a single bud and a
    dual/dual one none.
    """
    total = -_buds(edge, parent_primal)
    child = edge.child.node
    if isinstance(child, PrimalNode):
        for branch in child.children:
            total += charge(branch.node, parent_primal=True)  # type: ignore[arg-type]
    else:
        for item in child.items:  # type: ignore[union-attr]
            if item == LEAFLET:
                total += 1
            else:
                total += charge(item.node, parent_primal=False)  # type: ignore[union-attr]
    return total


def subtree_charges(tree: DecoratedTree) -> Iterator[Tuple[int, int]]:
    """``(p, charge)`` for every edge-vertex subtree except twigs.

    ``p`` is the number of arrows on the parent half-edge when the parent is
    primal, and 0 otherwise (the root counts as having a dual parent).
    """

    def visit(edge: EdgeNode, parent_primal: bool, p: int) -> Iterator[Tuple[int, int]]:
        if not is_twig(edge):
            yield p, charge(edge, parent_primal)
        child = edge.child.node
        if isinstance(child, PrimalNode):
            for branch in child.children:
                yield from visit(branch.node, True, branch.arrows)  # type: ignore[arg-type]
        else:
            for item in child.items:  # type: ignore[union-attr]
                if isinstance(item, Branch):
                    yield from visit(item.node, False, 0)  # type: ignore[arg-type]

    yield from visit(tree, False, 0)


def expected_charge(p: int) -> int:
    return 1 if p == 0 else 2 * p


def ordered_set_partitions(items: Sequence[int], blocks: int) -> Iterator[Tuple[FrozenSet[int], ...]]:
    """Ordered partitions of ``items`` into ``blocks`` nonempty blocks."""
    items = list(items)
    if blocks == 0:
        if not items:
            yield ()
        return
    if len(items) < blocks:
        return
    for assignment in product(range(blocks), repeat=len(items)):
        if len(set(assignment)) == blocks:
            yield tuple(
                frozenset(item for item, block in zip(items, assignment) if block == index)
                for index in range(blocks)
            )


def _compositions(total: int, low: int, high: int) -> Iterator[Tuple[int, ...]]:
    """Nonempty compositions of ``total`` with parts in ``low..high``."""
    for first in range(low, min(high, total) + 1):
        if first == total:
            yield (first,)
        else:
            for rest in _compositions(total - first, low, high):
                yield (first,) + rest


class _Generator:
    """Memoized generation of tight decorated subtrees for one ``b`` and degree map."""

    def __init__(self, b: int, half_degrees: Dict[int, int], tight: bool = True):
        self.b = b
        self.half_degrees = half_degrees
        self.tight = tight
        self.primal = lru_cache(maxsize=None)(self._primal)
        self.dual = lru_cache(maxsize=None)(self._dual)
        self.attachment = lru_cache(maxsize=None)(self._attachment)

    def twig(self) -> EdgeNode:
        return EdgeNode(Branch(0, PrimalNode()))

    def roots(self, labels: FrozenSet[int]) -> List[EdgeNode]:
        found = [EdgeNode(Branch(self.b, node)) for node in self.primal(self.b, labels)]
        if self.b == 1 and len(labels) == 1:
            (label,) = labels
            if self.half_degrees[label] == 1:
                found.extend(EdgeNode(Branch(0, node)) for node in self.dual(label, frozenset()))
        return found

    def _primal(self, a: int, labels: FrozenSet[int]) -> Tuple[PrimalNode, ...]:
        """Primal vertices whose parent half-edge carries ``a`` arrows."""
        b = self.b
        found: List[PrimalNode] = []
        if not labels:
            return ()
        for arrows in _compositions(b + 1 - a, 1, b):
            for blocks in ordered_set_partitions(sorted(labels), len(arrows)):
                options = [self._children(c, block) for c, block in zip(arrows, blocks)]
                for choice in product(*options):
                    found.append(PrimalNode(tuple(choice)))
        return tuple(found)

    def _children(self, c: int, labels: FrozenSet[int]) -> List[Branch]:
        """Edge-vertices below a primal vertex through a half-edge with ``c`` arrows."""
        b = self.b
        options: List[Branch] = []
        if c <= b - 1:
            for node in self.primal(b - c, labels):
                options.append(Branch(c, EdgeNode(Branch(b - c, node))))
        if c == b - 1 and len(labels) == 1:
            (label,) = labels
            if self.half_degrees[label] == b:
                for dual in self.dual(label, frozenset()):
                    options.append(Branch(c, EdgeNode(Branch(0, dual))))
        if c == b:
            for label in sorted(labels):
                if self.half_degrees[label] >= b + 1:
                    for dual in self.dual(label, labels - {label}):
                        options.append(Branch(c, EdgeNode(Branch(0, dual))))
        return options

    def _attachment(self, labels: FrozenSet[int]) -> Tuple[EdgeNode, ...]:
        """Edge-vertices standing for an attaching point of a blossoming vertex."""
        found = [EdgeNode(Branch(self.b, node)) for node in self.primal(self.b, labels)]
        if self.b == 1 and len(labels) == 1:
            (label,) = labels
            if self.half_degrees[label] == 1:
                found.extend(EdgeNode(Branch(0, dual)) for dual in self.dual(label, frozenset()))
        return tuple(found)

    def _dual(self, label: int, rest: FrozenSet[int]) -> Tuple[DualNode, ...]:
        b = self.b
        m = self.half_degrees[label]
        found: List[DualNode] = []
        if m == b:
            if not rest:
                found.append(DualNode(label, m, (LEAFLET,) * (2 * b - 1)))
            return tuple(found)
        for k in range(len(rest) + 1):
            words = list(generate_blossom_words(b, m, k, tight=False))
            if self.tight:
                words = [word for word in words if is_tight_word(word)]
            if not words:
                continue
            for blocks in ordered_set_partitions(sorted(rest), k):
                options = [self.attachment(block) for block in blocks]
                for choice in product(*options):
                    for word in words:
                        found.append(DualNode(label, m, self._items(word, choice)))
        return tuple(found)

    def _items(self, word: str, attachments: Sequence[EdgeNode]) -> Tuple[Union[str, Branch], ...]:
        pending = iter(attachments)
        items: List[Union[str, Branch]] = []
        for letter in word:
            if letter == "L":
                items.append(LEAFLET)
            elif letter == "T":
                items.append(Branch(0, self.twig()))
            else:
                items.append(Branch(0, next(pending)))
        return tuple(items)


def _check_tree_limits(b: int, half_degrees: Sequence[int]) -> None:
    if b < 1:
        raise OutsideTheoremRange(f"decorated trees need b >= 1, got {b}")
    for m in half_degrees:
        if m < b:
            raise OutsideTheoremRange(f"outside theorem range: half-degree {m} is smaller than b = {b}")
    if len(half_degrees) > MAX_BLOSSOMING:
        raise OracleLimitExceeded(
            "blossoming vertices", len(half_degrees), MAX_BLOSSOMING, "--max-blossoming or TIGHTMAPS_MAX_BLOSSOMING"
        )
    if sum(half_degrees) > MAX_TREE_HALF_DEGREE_SUM:
        raise OracleLimitExceeded(
            "sum of half-degrees",
            sum(half_degrees),
            MAX_TREE_HALF_DEGREE_SUM,
            "TIGHTMAPS_MAX_TREE_HALF_DEGREE_SUM",
        )


def generate_decorated_trees(
    b: int,
    half_degrees: Sequence[int],
    labels: Optional[Sequence[int]] = None,
    tight: bool = True,
) -> List[DecoratedTree]:
    """Every decorated tree whose blossoming vertices are exactly the given ones.

    Args:
        b: Half the irreducibility girth.
        half_degrees: Half-degree of each blossoming vertex.
        labels: Their labels, ``1..n`` by default.
        tight: Keep only trees without the twig-leaflet pattern.

    Raises:
        OutsideTheoremRange: If ``b < 1`` or some half-degree is below ``b``.
        OracleLimitExceeded: Above the configured tree limits.
    """
    _check_tree_limits(b, half_degrees)
    labels = list(range(1, len(half_degrees) + 1)) if labels is None else list(labels)
    generator = _Generator(b, dict(zip(labels, half_degrees)), tight=tight)
    trees = generator.roots(frozenset(labels))
    logger.debug("b=%d, half-degrees %s: %d trees", b, list(half_degrees), len(trees))
    return trees


def generate_decorated_tuples(b: int, k: int, half_degrees: Sequence[int]) -> Iterator[Tuple[DecoratedTree, ...]]:
    """``(k+1)``-tuples of tight decorated trees sharing the labels ``1..n``,
    label 1 in the first tree."""
    _check_tree_limits(b, half_degrees)
    labels = list(range(1, len(half_degrees) + 1))
    generator = _Generator(b, dict(zip(labels, half_degrees)))
    for blocks in ordered_set_partitions(labels, k + 1):
        if 1 not in blocks[0]:
            continue
        yield from product(*(generator.roots(block) for block in blocks))


def enumerate_decorated_tuples(b: int, k: int, half_degrees: Sequence[int]) -> int:
    """Number of ``(k+1)``-tuples of tight decorated trees, label 1 in the first."""
    _check_tree_limits(b, half_degrees)
    labels = list(range(1, len(half_degrees) + 1))
    generator = _Generator(b, dict(zip(labels, half_degrees)))
    total = 0
    for blocks in ordered_set_partitions(labels, k + 1):
        if 1 not in blocks[0]:
            continue
        count = 1
        for block in blocks:
            count *= len(generator.roots(block))
        total += count
    return total

"""From a decorated tree back to its 0-slice, and a checker for slices.

The closure works on the dual map. Every edge-vertex gets the dual
half-edges it misses as buds (two for a bioriented one, one for a bent one,
none for a dual/dual one), the root edge-vertex is hung from an outer dual
vertex ``Delta_0``, and the leaflets are matched to buds by the usual
parenthesis matching. Dual half-edges of a blossoming vertex keep their
clockwise order, so the dual map is read off directly; the slice is its
dual.

Half-edges of the result are the dual half-edges: the parent half-edge and
one per item of every blossoming vertex, plus those of ``Delta_0``.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import networkx as nx

from maps.combmap import CombMap
from maps.predicates import is_irreducible, is_tight
from trees.decorated import LEAFLET, DecoratedTree, DualNode, EdgeNode, PrimalNode, validate_decorated_tree
from utils.errors import MalformedMapError, MalformedTreeError

logger = logging.getLogger(__name__)

OUTER_LABEL = 0


@dataclass
class _Closure:
    """Dual half-edges, rotations and the bud/leaflet sequence of one tree."""

    labels: List[int] = field(default_factory=list)
    rotations: List[List[int]] = field(default_factory=list)
    pairs: List[Tuple[int, int]] = field(default_factory=list)
    events: List[Tuple[str, int]] = field(default_factory=list)
    bud_darts: Dict[int, int] = field(default_factory=dict)
    bioriented: List[Tuple[int, int]] = field(default_factory=list)
    buds: int = 0

    def dart(self, label: int) -> int:
        self.labels.append(label)
        return len(self.labels) - 1

    def bud(self, dart: Optional[int] = None) -> int:
        bud = self.buds
        self.buds += 1
        if dart is not None:
            self.bud_darts[bud] = dart
        self.events.append(("B", bud))
        return bud

    def edge(self, edge: EdgeNode, parent_dart: Optional[int]) -> None:
        """Walk an edge-vertex; ``parent_dart`` is None when the parent is primal."""
        child = edge.child.node
        if isinstance(child, PrimalNode):
            if parent_dart is None:
                first = self.bud()
                self.primal(child)
                self.bioriented.append((first, self.bud()))
            else:
                self.bud(parent_dart)
                self.primal(child)
        elif isinstance(child, DualNode):
            own = self.dual(child)
            if parent_dart is None:
                self.bud(own)
            else:
                self.pairs.append((parent_dart, own))
        else:
            raise MalformedTreeError("an edge-vertex must lead to a primal or dual vertex")

    def primal(self, node: PrimalNode) -> None:
        for branch in node.children:
            self.edge(branch.node, None)  # type: ignore[arg-type]

    def dual(self, node: DualNode) -> int:
        own = self.dart(node.label)
        rotation = [own]
        self.rotations.append(rotation)
        for item in node.items:
            dart = self.dart(node.label)
            rotation.append(dart)
            if item == LEAFLET:
                self.events.append(("L", dart))
            else:
                self.edge(item.node, dart)  # type: ignore[union-attr]
        return own


def _missing_leaflets(events: List[Tuple[str, int]]) -> int:
    """Leaflets to add at ``Delta_0``: minus the lowest height of the
    counterclockwise reading, leaflet up and bud down."""
    height = lowest = 0
    for kind, _ in reversed(events):
        height += 1 if kind == "L" else -1
        lowest = min(lowest, height)
    return -lowest


def _close(tree: DecoratedTree, b: int) -> Tuple[List[int], List[int], List[int], int, int]:
    """Alpha, counterclockwise dual rotation, labels, apex dart and base dart."""
    validate_decorated_tree(tree, b)
    closure = _Closure()
    root = closure.dart(OUTER_LABEL)
    closure.edge(tree, root)
    tree_events = closure.events
    extra = _missing_leaflets(tree_events)

    closure.events = []
    twigs = [closure.dart(OUTER_LABEL) for _ in range(extra + 1)]
    for twig in twigs:
        closure.bud(twig)
    closure.events.extend(tree_events)
    leaflets = [closure.dart(OUTER_LABEL) for _ in range(extra)]
    closure.events.extend(("L", leaflet) for leaflet in leaflets)
    closure.rotations.append(twigs + [root] + leaflets)

    open_buds: List[int] = []
    matched: Dict[int, int] = {}
    for kind, value in closure.events:
        if kind == "B":
            open_buds.append(value)
        elif not open_buds:
            raise MalformedTreeError("a leaflet has no bud to close on")
        else:
            matched[open_buds.pop()] = value
    if open_buds:
        raise MalformedTreeError(f"{len(open_buds)} buds left unmatched")

    for bud, dart in closure.bud_darts.items():
        closure.pairs.append((dart, matched[bud]))
    for first, second in closure.bioriented:
        closure.pairs.append((matched[first], matched[second]))

    size = len(closure.labels)
    alpha = [-1] * size
    for h, g in closure.pairs:
        alpha[h], alpha[g] = g, h
    if -1 in alpha:
        raise MalformedTreeError("some dual half-edges stayed unpaired")
    rotation = [-1] * size
    for clockwise in closure.rotations:
        for index, dart in enumerate(clockwise):
            rotation[dart] = clockwise[index - 1]
    logger.debug("closed a tree with %d edges, %d leaflets added at the outer vertex", size // 2, extra)
    return alpha, rotation, closure.labels, rotation[twigs[0]], root


def close_tree(tree: DecoratedTree, b: int) -> CombMap:
    """The 0-slice coded by a decorated tree.

    Faces are the blossoming vertices, with their labels, plus the outer face
    labeled 0. The slice frame holds the apex (dual to the outer face of the
    closed dual map) and the base (the edge through the root edge-vertex).

    Raises:
        MalformedTreeError: If the tree breaks the local rules or its
            leaflets and buds cannot be matched.
    """
    alpha, rotation, labels, apex, base = _close(tree, b)
    primal_sigma = [rotation[alpha[h]] for h in range(len(alpha))]
    return CombMap.from_half_edge_data(
        alpha,
        primal_sigma,
        labels,
        apex_half_edge=apex,
        base_half_edge=base,
        outer_label=OUTER_LABEL,
    )


def close_tree_dual(tree: DecoratedTree, b: int) -> CombMap:
    """The closed dual map, before dualizing; faces labeled by primal vertex."""
    return close_tree(tree, b).dual()


@dataclass(frozen=True)
class SliceReport:
    ok: bool
    reason: str = "ok"

    def __bool__(self) -> bool:
        return self.ok


def _geodesic_count(graph: nx.MultiGraph, distances: Dict[int, int], target: int) -> int:
    """Shortest paths from the BFS source to ``target``, parallel edges counted."""
    counts = {node: 0 for node in distances}
    for node in sorted(distances, key=distances.__getitem__):
        if distances[node] == 0:
            counts[node] = 1
        for _, neighbour in graph.edges(node):
            if distances.get(neighbour) == distances[node] + 1:
                counts[neighbour] += counts[node]
    return counts[target]


def validate_slice(
    combmap: CombMap,
    b: int,
    *,
    apex: Optional[int] = None,
    base: Optional[int] = None,
    allow_empty: bool = False,
) -> SliceReport:
    """Check that a map with its frame is a tight 2b-irreducible 0-slice.

    ``apex``, ``base`` and ``allow_empty`` are keyword-only:
    ``validate_slice(m, b, apex=a, base=e)``.

    The endpoints of the base are told apart by their distance to the apex,
    the farther one being ``B``. The outer contour minus the base splits at
    the apex into the red side (``C`` to apex), which must be the unique
    geodesic, and the blue side (apex to ``B``), which must be a geodesic.

    Args:
        combmap: The candidate slice.
        b: Half the irreducibility girth.
        apex: Apex vertex; defaults to the map's slice frame.
        base: Base edge id; defaults to the map's slice frame.
        allow_empty: Accept the single-edge slice.
    """
    frame = combmap.slice_frame
    outer_label = frame.outer_label if frame is not None else OUTER_LABEL
    if apex is None or base is None:
        if frame is None:
            return SliceReport(False, "no apex or base given and the map has no slice frame")
        apex = frame.apex if apex is None else apex
        base = frame.base if base is None else base
    if combmap.genus() != 0:
        return SliceReport(False, f"genus {combmap.genus()}")
    if combmap.edge_count == 1:
        return SliceReport(allow_empty, "empty slice" + ("" if allow_empty else " not allowed"))

    try:
        outer = combmap.faces()[combmap.face_with_label(outer_label)]
    except MalformedMapError as exc:
        return SliceReport(False, str(exc))
    contour = [combmap.vertex_of(h) for h in outer]
    edges = [combmap.edge_of(h) for h in outer]
    if len(set(contour)) != len(contour):
        return SliceReport(False, "outer contour is not simple")
    if base not in edges:
        return SliceReport(False, f"base edge {base} is not on the outer contour")
    if apex not in contour:
        return SliceReport(False, f"apex {apex} is not on the outer contour")

    graph = combmap.to_multigraph()
    distances = nx.single_source_shortest_path_length(graph, apex)
    u, v = combmap.edge_endpoints(base)
    if abs(distances[u] - distances[v]) != 1:
        return SliceReport(False, f"base endpoints at distances {distances[u]} and {distances[v]} from the apex")
    far, near = (u, v) if distances[u] > distances[v] else (v, u)

    start = edges.index(base) + 1
    path = contour[start:] + contour[:start]
    split = path.index(apex)
    first, second = path[: split + 1], path[split:]
    red, blue = (first, second) if path[0] == near else (second, first)
    if len(red) - 1 != distances[near]:
        return SliceReport(False, f"red side has length {len(red) - 1}, distance is {distances[near]}")
    if _geodesic_count(graph, distances, near) != 1:
        return SliceReport(False, "red side is not the unique geodesic")
    if len(blue) - 1 != distances[far]:
        return SliceReport(False, f"blue side has length {len(blue) - 1}, distance is {distances[far]}")

    inner = [label for label in combmap.face_labels_by_face() if label != outer_label]
    if not is_irreducible(combmap, b, face_labels=inner):
        return SliceReport(False, f"not {2 * b}-irreducible")
    if not is_tight(combmap):
        return SliceReport(False, "a vertex of degree one is left")
    return SliceReport(True)

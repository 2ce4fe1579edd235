"""Girth, tightness, irreducibility and separating girth of maps."""

import logging
import math
from typing import FrozenSet, Iterable, List, NamedTuple, Optional, Set, Tuple, Union

import networkx as nx

from maps.combmap import CombMap
from utils.errors import OutsideTheoremRange

logger = logging.getLogger(__name__)

Length = Union[int, float]


class Cycle(NamedTuple):
    """A simple cycle: its vertices in traversal order and its edge ids."""

    vertices: Tuple[int, ...]
    edges: FrozenSet[int]

    @property
    def length(self) -> int:
        return len(self.edges)


def girth(combmap: CombMap) -> Length:
    """Length of a shortest cycle, ``math.inf`` for trees.

    For every edge, the distance between its endpoints once the edge is
    removed, plus one. Loops give 1 and parallel edges give 2.
    """
    graph = combmap.to_multigraph()
    best: Length = math.inf
    for u, v, key in graph.edges(keys=True):
        if u == v:
            return 1
        view = nx.restricted_view(graph, [], [(u, v, key)])
        try:
            best = min(best, nx.shortest_path_length(view, u, v) + 1)
        except nx.NetworkXNoPath:
            continue
    return best


def is_tight(combmap: CombMap) -> bool:
    """Every vertex of degree one is marked."""
    return all(
        v in combmap.marked for v in range(len(combmap.vertices())) if combmap.degree(v) == 1
    )


def simple_cycles(combmap: CombMap, max_length: Optional[int] = None) -> List[Cycle]:
    """All simple cycles of length at most ``max_length``.

    Each cycle is found by a depth-first search from its smallest vertex and
    reported once, keyed by its edge set. Sorted by length, then edges.
    """
    limit = combmap.edge_count if max_length is None else max_length
    adjacency: List[List[Tuple[int, int]]] = [[] for _ in range(len(combmap.vertices()))]
    found: dict = {}
    for edge in range(combmap.edge_count):
        u, v = combmap.edge_endpoints(edge)
        if u == v:
            if limit >= 1:
                found[frozenset([edge])] = Cycle((u,), frozenset([edge]))
            continue
        adjacency[u].append((edge, v))
        adjacency[v].append((edge, u))

    def extend(start: int, path: List[int], edges: List[int]) -> None:
        tip = path[-1]
        for edge, nxt in adjacency[tip]:
            if edge in edges:
                continue
            if nxt == start:
                key = frozenset(edges + [edge])
                if key not in found:
                    found[key] = Cycle(tuple(path), key)
                continue
            if nxt < start or nxt in path or len(edges) + 1 >= limit:
                continue
            path.append(nxt)
            edges.append(edge)
            extend(start, path, edges)
            path.pop()
            edges.pop()

    for start in range(len(adjacency)):
        extend(start, [start], [])
    return sorted(found.values(), key=lambda cycle: (cycle.length, sorted(cycle.edges)))


def _simple_face_edge_sets(combmap: CombMap, labels: Optional[Iterable[int]]) -> Set[FrozenSet[int]]:
    allowed = None if labels is None else set(labels)
    contours = set()
    for index, label in enumerate(combmap.face_labels_by_face()):
        if allowed is not None and label not in allowed:
            continue
        edges = combmap.face_edges(index)
        if len(set(edges)) == len(edges):
            contours.add(frozenset(edges))
    return contours


def is_irreducible(combmap: CombMap, b: int, face_labels: Optional[Iterable[int]] = None) -> bool:
    """Girth at least ``2b`` and every ``2b``-cycle is a face contour.

    Args:
        combmap: A planar map.
        b: Half the required girth.
        face_labels: When given, only faces with these labels count as
            contours (for slices: the inner faces).
    """
    if girth(combmap) < 2 * b:
        return False
    contours = _simple_face_edge_sets(combmap, face_labels)
    for cycle in simple_cycles(combmap, 2 * b):
        if cycle.length == 2 * b and cycle.edges not in contours:
            logger.debug("non-facial %d-cycle through edges %s", 2 * b, sorted(cycle.edges))
            return False
    return True


def separates(combmap: CombMap, cycle: Cycle, face1: int, face2: int) -> bool:
    """Whether removing the cycle puts the two faces (by index) on different sides."""
    dual = combmap.dual_multigraph()
    crossing = [(u, v, key) for u, v, key in dual.edges(keys=True) if key in cycle.edges]
    view = nx.restricted_view(dual, [], crossing)
    return not nx.has_path(view, face1, face2)


def separating_girth(combmap: CombMap, f1: int, f2: int) -> Length:
    """Minimal length of a cycle separating the faces labeled ``f1`` and ``f2``.

    Raises:
        OutsideTheoremRange: If ``f1 == f2``.
    """
    if f1 == f2:
        raise OutsideTheoremRange(f"separating girth needs two distinct faces, got {f1} twice")
    face1 = combmap.face_with_label(f1)
    face2 = combmap.face_with_label(f2)
    for cycle in simple_cycles(combmap):
        if separates(combmap, cycle, face1, face2):
            return cycle.length
    return math.inf

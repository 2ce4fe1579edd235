"""Structural generation of marked two-face maps.

A planar map with two faces is a cycle of length ``2d`` with plane trees
hanging into both faces. Trees are encoded by Dyck words, one forest per
cycle vertex and side. Marks are then placed on ``k+1`` vertices, one of them
distinguished, so that every leaf is marked.
"""

import logging
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from config import MAX_TWO_FACE_EDGES
from maps.canonical import CanonicalCode, canonical_code
from maps.combmap import CombMap, permutation_cycles
from utils.errors import OracleLimitExceeded, OutsideTheoremRange

logger = logging.getLogger(__name__)


def dyck_words(semilength: int) -> Iterator[str]:
    """Balanced words over ``()`` of the given semilength, lexicographic."""

    def grow(prefix: str, opened: int, closed: int) -> Iterator[str]:
        if closed == semilength:
            yield prefix
            return
        if opened < semilength:
            yield from grow(prefix + "(", opened + 1, closed)
        if closed < opened:
            yield from grow(prefix + ")", opened, closed + 1)

    return grow("", 0, 0)


def weak_compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for head in range(total + 1):
        for tail in weak_compositions(total - head, parts - 1):
            yield (head,) + tail


def _forests(sizes: Sequence[int]) -> Iterator[Tuple[str, ...]]:
    if not sizes:
        yield ()
        return
    for word in dyck_words(sizes[0]):
        for rest in _forests(sizes[1:]):
            yield (word,) + rest


class _Builder:
    """Accumulates half-edges and counterclockwise rotations."""

    def __init__(self, vertex_count: int):
        self.alpha: List[int] = []
        self.rotations: List[List[int]] = [[] for _ in range(vertex_count)]

    def new_edge(self) -> Tuple[int, int]:
        h = len(self.alpha)
        self.alpha.extend([h + 1, h])
        return h, h + 1

    def new_vertex(self) -> int:
        self.rotations.append([])
        return len(self.rotations) - 1

    def hang(self, vertex: int, word: str) -> List[int]:
        """Grow the forest coded by ``word`` below ``vertex``; return the child darts."""
        darts: List[int] = []
        depth = 0
        start = 0
        for position, letter in enumerate(word):
            depth += 1 if letter == "(" else -1
            if depth == 0:
                down, up = self.new_edge()
                child = self.new_vertex()
                self.rotations[child] = [up] + self.hang(child, word[start + 1 : position])
                darts.append(down)
                start = position + 1
        return darts

    def sigma(self) -> List[int]:
        sigma = [0] * len(self.alpha)
        for rotation in self.rotations:
            for index, h in enumerate(rotation):
                sigma[h] = rotation[(index + 1) % len(rotation)]
        return sigma


def build_two_face_map(d: int, side1: Sequence[str], side2: Sequence[str]) -> CombMap:
    """Cycle of length ``2d`` with forests ``side1[i]``/``side2[i]`` at vertex ``i``.

    Face 1 holds the ``side1`` trees. The rotation at cycle vertex ``i`` is
    ``[out_i, side-1 darts, in_i, side-2 darts]``.
    """
    length = 2 * d
    builder = _Builder(length)
    outgoing: List[int] = []
    incoming: List[int] = [0] * length
    for i in range(length):
        h, g = builder.new_edge()
        outgoing.append(h)
        incoming[(i + 1) % length] = g
    for i in range(length):
        first = builder.hang(i, side1[i])
        second = builder.hang(i, side2[i])
        builder.rotations[i] = [outgoing[i]] + first + [incoming[i]] + second
    sigma = builder.sigma()
    alpha = builder.alpha
    phi = [sigma[alpha[h]] for h in range(len(alpha))]
    start = sigma[outgoing[0]]
    first_face = next(face for face in permutation_cycles(phi) if start in face)
    labels = [1 if h in first_face else 2 for h in range(len(alpha))]
    return CombMap.from_half_edge_data(alpha, sigma, labels)


def two_face_maps(m1: int, m2: int, d: int) -> Iterator[CombMap]:
    """Every unmarked two-face map with cycle length ``2d`` (with repetitions)."""
    for sizes1 in weak_compositions(m1 - d, 2 * d):
        for sizes2 in weak_compositions(m2 - d, 2 * d):
            for side1 in _forests(sizes1):
                for side2 in _forests(sizes2):
                    yield build_two_face_map(d, side1, side2)


def marked_versions(combmap: CombMap, k: int) -> Iterator[CombMap]:
    """All placements of ``k+1`` marks, one distinguished, covering every leaf."""
    vertex_count = len(combmap.vertices())
    leaves = [v for v in range(vertex_count) if combmap.degree(v) == 1]
    others = [v for v in range(vertex_count) if combmap.degree(v) != 1]
    extra = k + 1 - len(leaves)
    if extra < 0 or extra > len(others):
        return
    for chosen in combinations(others, extra):
        marked = set(leaves) | set(chosen)
        for root in sorted(marked):
            yield combmap.with_marks(marked, root)


def enumerate_two_face_marked(
    m1: int, m2: int, k: int, max_edges: Optional[int] = None
) -> Dict[int, int]:
    """Isomorphism classes of marked two-face maps, by half cycle length ``d``.

    Args:
        m1: Half-degree of face 1.
        m2: Half-degree of face 2.
        k: One less than the number of marked vertices.
        max_edges: Limit on ``m1 + m2``; defaults to ``TIGHTMAPS_MAX_TWO_FACE_EDGES``.

    Returns:
        ``{d: count}`` for every ``d`` in ``1 .. min(m1, m2)``.

    Raises:
        OutsideTheoremRange: If ``m1``, ``m2`` are below 1 or ``k`` is negative.
        OracleLimitExceeded: If ``m1 + m2`` is above the limit.
    """
    if m1 < 1 or m2 < 1 or k < 0:
        raise OutsideTheoremRange(f"need m1, m2 >= 1 and k >= 0, got m1={m1}, m2={m2}, k={k}")
    limit = MAX_TWO_FACE_EDGES if max_edges is None else max_edges
    if m1 + m2 > limit:
        raise OracleLimitExceeded("m1 + m2", m1 + m2, limit, "--max-edges or TIGHTMAPS_MAX_TWO_FACE_EDGES")
    table: Dict[int, int] = {}
    for d in range(1, min(m1, m2) + 1):
        codes: Set[CanonicalCode] = set()
        for combmap in two_face_maps(m1, m2, d):
            for marked in marked_versions(combmap, k):
                codes.add(canonical_code(marked))
        table[d] = len(codes)
        logger.debug("m1=%d m2=%d k=%d d=%d: %d classes", m1, m2, k, d, len(codes))
    return table

"""Planar maps as rotation systems on half-edges.

Half-edges are ``0 .. 2E-1``. ``alpha`` pairs them into edges and ``sigma``
lists the half-edges around each vertex counterclockwise. Faces are the cycles
of ``phi = sigma o alpha``, i.e. ``phi(h) = sigma(alpha(h))``; the corner
between ``h`` and ``sigma(h)`` belongs to the face containing ``sigma(h)``.

Vertices, faces and edges are numbered by their smallest half-edge, which
makes every index deterministic for a given rotation system.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from utils.errors import MalformedMapError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SliceFrame:
    """Distinguished structure of a slice.

    Attributes:
        apex: Vertex index of the apex.
        base: Edge id of the base edge.
        outer_label: Face label of the outer face.
    """

    apex: int
    base: int
    outer_label: int = 0


def permutation_cycles(permutation: Sequence[int]) -> List[Tuple[int, ...]]:
    """Cycles of a permutation, each starting at its smallest element, sorted."""
    seen = [False] * len(permutation)
    cycles: List[Tuple[int, ...]] = []
    for start in range(len(permutation)):
        if seen[start]:
            continue
        cycle = []
        h = start
        while not seen[h]:
            seen[h] = True
            cycle.append(h)
            h = permutation[h]
        cycles.append(tuple(cycle))
    return cycles


def _index_of_cycles(cycles: Sequence[Tuple[int, ...]], size: int) -> List[int]:
    owner = [0] * size
    for index, cycle in enumerate(cycles):
        for h in cycle:
            owner[h] = index
    return owner


class CombMap:
    """A connected map given by a rotation system, with labeled faces.

    Args:
        alpha: Fixed-point-free involution on half-edges.
        sigma: Permutation whose cycles are the counterclockwise vertex rotations.
        face_labels: One label per face, faces ordered by smallest half-edge.
            Defaults to ``1 .. F``.
        marked: Indices of marked vertices.
        root: Distinguished marked vertex, if any.
        slice_frame: Apex, base and outer label when the map is a slice.

    Raises:
        MalformedMapError: If the permutations are inconsistent, the map is
            disconnected, or the marks do not refer to existing vertices.
    """

    __slots__ = (
        "_alpha",
        "_sigma",
        "_phi",
        "_vertices",
        "_faces",
        "_vertex_of",
        "_face_of",
        "_edge_of",
        "_edges",
        "_face_labels",
        "_marked",
        "_root",
        "_slice_frame",
    )

    def __init__(
        self,
        alpha: Sequence[int],
        sigma: Sequence[int],
        face_labels: Optional[Sequence[int]] = None,
        marked: Iterable[int] = (),
        root: Optional[int] = None,
        slice_frame: Optional[SliceFrame] = None,
    ):
        self._alpha = tuple(alpha)
        self._sigma = tuple(sigma)
        self._check_permutations()
        size = len(self._alpha)
        self._phi = tuple(self._sigma[self._alpha[h]] for h in range(size))
        self._vertices = permutation_cycles(self._sigma)
        self._faces = permutation_cycles(self._phi)
        self._vertex_of = _index_of_cycles(self._vertices, size)
        self._face_of = _index_of_cycles(self._faces, size)
        self._edges = [(h, self._alpha[h]) for h in range(size) if h < self._alpha[h]]
        self._edge_of = [0] * size
        for index, (h, g) in enumerate(self._edges):
            self._edge_of[h] = self._edge_of[g] = index
        if face_labels is None:
            face_labels = range(1, len(self._faces) + 1)
        self._face_labels = tuple(face_labels)
        if len(self._face_labels) != len(self._faces):
            raise MalformedMapError(
                f"{len(self._face_labels)} face labels given for {len(self._faces)} faces"
            )
        self._marked: FrozenSet[int] = frozenset(marked)
        self._root = root
        self._slice_frame = slice_frame
        self._check_connected()
        self._check_decorations()

    def _check_permutations(self) -> None:
        size = len(self._alpha)
        if size == 0 or size % 2:
            raise MalformedMapError(f"a map needs a positive even number of half-edges, got {size}")
        if len(self._sigma) != size:
            raise MalformedMapError("alpha and sigma act on different half-edge sets")
        if sorted(self._sigma) != list(range(size)) or sorted(self._alpha) != list(range(size)):
            raise MalformedMapError("alpha and sigma must be permutations of 0..2E-1")
        for h, partner in enumerate(self._alpha):
            if partner == h or self._alpha[partner] != h:
                raise MalformedMapError(f"alpha is not a fixed-point-free involution at half-edge {h}")

    def _check_connected(self) -> None:
        graph = nx.Graph()
        graph.add_nodes_from(range(len(self._alpha)))
        graph.add_edges_from((h, self._alpha[h]) for h in range(len(self._alpha)))
        graph.add_edges_from((h, self._sigma[h]) for h in range(len(self._alpha)))
        if not nx.is_connected(graph):
            raise MalformedMapError("the half-edge permutations do not act transitively")

    def _check_decorations(self) -> None:
        vertex_count = len(self._vertices)
        for v in self._marked:
            if not 0 <= v < vertex_count:
                raise MalformedMapError(f"marked vertex {v} does not exist")
        if self._root is not None and self._root not in self._marked:
            raise MalformedMapError(f"distinguished vertex {self._root} is not marked")
        frame = self._slice_frame
        if frame is not None:
            if not 0 <= frame.apex < vertex_count:
                raise MalformedMapError(f"apex {frame.apex} does not exist")
            if not 0 <= frame.base < len(self._edges):
                raise MalformedMapError(f"base edge {frame.base} does not exist")
            if frame.outer_label not in self._face_labels:
                raise MalformedMapError(f"no face carries the outer label {frame.outer_label}")

    @classmethod
    def from_half_edge_data(
        cls,
        alpha: Sequence[int],
        sigma: Sequence[int],
        labels: Sequence[int],
        marked_half_edges: Iterable[int] = (),
        root_half_edge: Optional[int] = None,
        apex_half_edge: Optional[int] = None,
        base_half_edge: Optional[int] = None,
        outer_label: int = 0,
    ) -> "CombMap":
        """Build a map whose labels and marks are attached to half-edges.

        ``labels[h]`` is the label of the face containing ``h``; a vertex is
        marked when one of its half-edges is listed.

        Raises:
            MalformedMapError: If the labels are not constant along faces.
        """
        size = len(alpha)
        phi = [sigma[alpha[h]] for h in range(size)]
        face_labels = []
        for face in permutation_cycles(phi):
            values = {labels[h] for h in face}
            if len(values) != 1:
                raise MalformedMapError(f"face {face} carries several labels {sorted(values)}")
            face_labels.append(values.pop())
        vertex_of = _index_of_cycles(permutation_cycles(sigma), size)
        frame = None
        if apex_half_edge is not None and base_half_edge is not None:
            base = sorted(min(h, alpha[h]) for h in range(size) if h < alpha[h]).index(
                min(base_half_edge, alpha[base_half_edge])
            )
            frame = SliceFrame(vertex_of[apex_half_edge], base, outer_label)
        return cls(
            alpha,
            sigma,
            face_labels,
            marked={vertex_of[h] for h in marked_half_edges},
            root=None if root_half_edge is None else vertex_of[root_half_edge],
            slice_frame=frame,
        )

    def relabel(self, permutation: Sequence[int]) -> "CombMap":
        """The same map with half-edge ``h`` renamed ``permutation[h]``."""
        size = len(self._alpha)
        alpha = [0] * size
        sigma = [0] * size
        labels = [0] * size
        for h in range(size):
            alpha[permutation[h]] = permutation[self._alpha[h]]
            sigma[permutation[h]] = permutation[self._sigma[h]]
            labels[permutation[h]] = self.face_label_of(h)
        frame = self._slice_frame
        return CombMap.from_half_edge_data(
            alpha,
            sigma,
            labels,
            marked_half_edges=[permutation[self._vertices[v][0]] for v in self._marked],
            root_half_edge=None if self._root is None else permutation[self._vertices[self._root][0]],
            apex_half_edge=None if frame is None else permutation[self._vertices[frame.apex][0]],
            base_half_edge=None if frame is None else permutation[self._edges[frame.base][0]],
            outer_label=0 if frame is None else frame.outer_label,
        )

    def with_marks(self, marked: Iterable[int], root: Optional[int] = None) -> "CombMap":
        return CombMap(self._alpha, self._sigma, self._face_labels, marked, root, self._slice_frame)

    def with_slice_frame(self, frame: Optional[SliceFrame]) -> "CombMap":
        return CombMap(self._alpha, self._sigma, self._face_labels, self._marked, self._root, frame)

    def with_face_labels(self, face_labels: Sequence[int]) -> "CombMap":
        return CombMap(self._alpha, self._sigma, face_labels, self._marked, self._root, self._slice_frame)

    @property
    def alpha(self) -> Tuple[int, ...]:
        return self._alpha

    @property
    def sigma(self) -> Tuple[int, ...]:
        return self._sigma

    @property
    def phi(self) -> Tuple[int, ...]:
        return self._phi

    @property
    def half_edge_count(self) -> int:
        return len(self._alpha)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def marked(self) -> FrozenSet[int]:
        return self._marked

    @property
    def root(self) -> Optional[int]:
        return self._root

    @property
    def slice_frame(self) -> Optional[SliceFrame]:
        return self._slice_frame

    def vertices(self) -> List[Tuple[int, ...]]:
        """Vertex rotations, one tuple of half-edges per vertex."""
        return list(self._vertices)

    def faces(self) -> List[Tuple[int, ...]]:
        """Face contours as ``phi``-cycles."""
        return list(self._faces)

    def vertex_of(self, h: int) -> int:
        return self._vertex_of[h]

    def face_of(self, h: int) -> int:
        return self._face_of[h]

    def edge_of(self, h: int) -> int:
        return self._edge_of[h]

    @property
    def edge_ids(self) -> Tuple[int, ...]:
        """Edge id of every half-edge."""
        return tuple(self._edge_of)

    def edge_half_edges(self, edge: int) -> Tuple[int, int]:
        return self._edges[edge]

    def edge_endpoints(self, edge: int) -> Tuple[int, int]:
        h, g = self._edges[edge]
        return self._vertex_of[h], self._vertex_of[g]

    def degree(self, vertex: int) -> int:
        return len(self._vertices[vertex])

    def face_label_of(self, h: int) -> int:
        return self._face_labels[self._face_of[h]]

    def face_labels_by_face(self) -> Tuple[int, ...]:
        return self._face_labels

    def face_degrees(self) -> Dict[int, int]:
        """Degree of every face, keyed by face label."""
        return {label: len(face) for label, face in zip(self._face_labels, self._faces)}

    def face_with_label(self, label: int) -> int:
        """Index of the face carrying ``label``.

        Raises:
            MalformedMapError: If no face or several faces carry it.
        """
        matches = [index for index, value in enumerate(self._face_labels) if value == label]
        if len(matches) != 1:
            raise MalformedMapError(f"{len(matches)} faces carry the label {label}")
        return matches[0]

    def face_edges(self, face: int) -> List[int]:
        """Edge ids along a face contour, with repetition."""
        return [self._edge_of[h] for h in self._faces[face]]

    def genus(self) -> int:
        """``(2 - V + E - F) / 2``.

        Raises:
            MalformedMapError: If the Euler defect is odd.
        """
        defect = 2 - len(self._vertices) + len(self._edges) - len(self._faces)
        if defect % 2:
            raise MalformedMapError(f"odd Euler defect {defect}")
        return defect // 2

    def to_multigraph(self) -> nx.MultiGraph:
        """Underlying multigraph on vertex indices, edges keyed by edge id."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(len(self._vertices)))
        for index in range(len(self._edges)):
            u, v = self.edge_endpoints(index)
            graph.add_edge(u, v, key=index)
        return graph

    def dual_multigraph(self) -> nx.MultiGraph:
        """Dual multigraph on face indices, dual edges keyed by edge id."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(len(self._faces)))
        for index, (h, g) in enumerate(self._edges):
            graph.add_edge(self._face_of[h], self._face_of[g], key=index)
        return graph

    def dual(self) -> "CombMap":
        """The dual map: ``sigma* = phi``, so ``phi* = sigma``.

        Faces of the dual are the vertices of this map and are labeled by
        vertex index; marks and frames are dropped.
        """
        dual_faces = permutation_cycles(self._sigma)
        return CombMap(self._alpha, self._phi, face_labels=list(range(len(dual_faces))))

    def _key(self) -> tuple:
        return (
            self._alpha,
            self._sigma,
            self._face_labels,
            tuple(sorted(self._marked)),
            self._root,
            self._slice_frame,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CombMap):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return (
            f"CombMap(E={self.edge_count}, V={len(self._vertices)}, "
            f"faces={self.face_degrees()}, marked={sorted(self._marked)})"
        )


def genus(combmap: CombMap) -> int:
    return combmap.genus()

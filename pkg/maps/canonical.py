"""Canonical codes for maps up to orientation-preserving isomorphism.

Isomorphisms must preserve face labels, marked vertices, the distinguished
vertex and the slice frame. The code is the smallest breadth-first encoding
over all admissible roots; only half-edges in a face with the smallest label
can be roots, since any isomorphism maps such half-edges onto each other.
"""

from typing import List, Optional, Sequence, Tuple

from maps.combmap import CombMap
from utils.errors import MalformedMapError

CanonicalCode = bytes

_FIELDS = 7


def _bfs_order(combmap: CombMap, root: int) -> List[int]:
    """Half-edges in discovery order, following ``sigma`` before ``alpha``."""
    seen = {root}
    order = [root]
    position = 0
    while position < len(order):
        h = order[position]
        position += 1
        for nxt in (combmap.sigma[h], combmap.alpha[h]):
            if nxt not in seen:
                seen.add(nxt)
                order.append(nxt)
    return order


def _encode_from(combmap: CombMap, root: int) -> Tuple[Tuple[int, ...], List[int]]:
    order = _bfs_order(combmap, root)
    label = {h: index for index, h in enumerate(order)}
    frame = combmap.slice_frame
    flat: List[int] = [combmap.edge_count, -1 if frame is None else frame.outer_label]
    for h in order:
        v = combmap.vertex_of(h)
        flat.extend(
            (
                label[combmap.sigma[h]],
                label[combmap.alpha[h]],
                combmap.face_label_of(h),
                int(v in combmap.marked),
                int(v == combmap.root),
                int(frame is not None and v == frame.apex),
                int(frame is not None and combmap.edge_of(h) == frame.base),
            )
        )
    return tuple(flat), order


def _best(combmap: CombMap) -> Tuple[Tuple[int, ...], List[int]]:
    smallest = min(combmap.face_labels_by_face())
    roots = [h for h in range(combmap.half_edge_count) if combmap.face_label_of(h) == smallest]
    return min((_encode_from(combmap, root) for root in roots), key=lambda item: item[0])


def canonical_code(combmap: CombMap) -> CanonicalCode:
    """Byte string equal for two maps iff they are isomorphic."""
    flat, _ = _best(combmap)
    return ",".join(str(value) for value in flat).encode("ascii")


def canonical_form(combmap: CombMap) -> CombMap:
    """Representative of the isomorphism class, half-edges numbered in code order."""
    _, order = _best(combmap)
    permutation = [0] * combmap.half_edge_count
    for index, h in enumerate(order):
        permutation[h] = index
    return combmap.relabel(permutation)


def map_from_code(code: CanonicalCode) -> CombMap:
    """Rebuild the canonical representative encoded by ``code``.

    Raises:
        MalformedMapError: If the code is not a map encoding.
    """
    try:
        values = [int(piece) for piece in code.decode("ascii").split(",")]
    except ValueError as exc:
        raise MalformedMapError(f"not a canonical code: {code!r}") from exc
    edge_count, outer_label = values[0], values[1]
    body: Sequence[int] = values[2:]
    size = 2 * edge_count
    if len(body) != size * _FIELDS:
        raise MalformedMapError(f"code length {len(body)} does not match {edge_count} edges")
    rows = [body[index * _FIELDS : (index + 1) * _FIELDS] for index in range(size)]
    sigma = [row[0] for row in rows]
    alpha = [row[1] for row in rows]
    labels = [row[2] for row in rows]
    marked = [h for h, row in enumerate(rows) if row[3]]
    root: Optional[int] = next((h for h, row in enumerate(rows) if row[4]), None)
    apex: Optional[int] = next((h for h, row in enumerate(rows) if row[5]), None)
    base: Optional[int] = next((h for h, row in enumerate(rows) if row[6]), None)
    return CombMap.from_half_edge_data(
        alpha,
        sigma,
        labels,
        marked_half_edges=marked,
        root_half_edge=root,
        apex_half_edge=apex if outer_label >= 0 else None,
        base_half_edge=base if outer_label >= 0 else None,
        outer_label=max(outer_label, 0),
    )

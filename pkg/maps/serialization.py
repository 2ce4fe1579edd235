"""Plain-text form of a map.

::

    E=<edges>
    <alpha as space-separated images of 0 .. 2E-1>
    <sigma, same layout>
    <one face label per phi-cycle, cycles ordered by smallest half-edge>
    marks=<vertex indices>              (optional)
    root=<vertex index>                 (optional)
    slice=<apex> <base edge> <outer label>   (optional)

Vertices are indexed by smallest half-edge, edges likewise.
"""

from typing import Dict, List

from maps.combmap import CombMap, SliceFrame
from utils.errors import MalformedMapError


def _ints(text: str) -> List[int]:
    return [int(piece) for piece in text.split()]


def map_to_text(combmap: CombMap) -> str:
    lines = [
        f"E={combmap.edge_count}",
        " ".join(str(h) for h in combmap.alpha),
        " ".join(str(h) for h in combmap.sigma),
        " ".join(str(label) for label in combmap.face_labels_by_face()),
    ]
    if combmap.marked:
        lines.append("marks=" + " ".join(str(v) for v in sorted(combmap.marked)))
    if combmap.root is not None:
        lines.append(f"root={combmap.root}")
    frame = combmap.slice_frame
    if frame is not None:
        lines.append(f"slice={frame.apex} {frame.base} {frame.outer_label}")
    return "\n".join(lines) + "\n"


def map_from_text(text: str) -> CombMap:
    """Parse the output of ``map_to_text``.

    Raises:
        MalformedMapError: On any syntax error or inconsistent map.
    """
    lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
    if len(lines) < 4 or not lines[0].startswith("E="):
        raise MalformedMapError("a map needs the E=, alpha, sigma and label lines")
    try:
        edges = int(lines[0][2:])
        alpha = _ints(lines[1])
        sigma = _ints(lines[2])
        labels = _ints(lines[3])
        options: Dict[str, str] = {}
        for line in lines[4:]:
            key, _, value = line.partition("=")
            if key not in ("marks", "root", "slice") or key in options:
                raise MalformedMapError(f"unexpected line {line!r}")
            options[key] = value
        marked = _ints(options.get("marks", ""))
        root = int(options["root"]) if "root" in options else None
        frame = None
        if "slice" in options:
            apex, base, outer = _ints(options["slice"])
            frame = SliceFrame(apex, base, outer)
    except ValueError as exc:
        if isinstance(exc, MalformedMapError):
            raise
        raise MalformedMapError(f"cannot parse map text: {exc}") from exc
    if len(alpha) != 2 * edges:
        raise MalformedMapError(f"E={edges} but alpha has {len(alpha)} entries")
    return CombMap(alpha, sigma, labels, marked=marked, root=root, slice_frame=frame)

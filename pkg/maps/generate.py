"""Exhaustive generation of planar maps with prescribed labeled faces.

Face ``i`` is a polygon with ``2 m_i`` sides, numbered consecutively; the
sides are the half-edges and the polygons are the ``phi``-cycles. Every
perfect matching of the sides is a candidate ``alpha``, and then
``sigma(h) = phi(alpha(h))``. Candidates that are connected and of genus 0
are kept and deduplicated by canonical code.

The search always matches the smallest unmatched side first, so the partner of
side 0 splits it into independent branches that can run in worker processes.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, List, Optional, Sequence, Set, Tuple

from config import MAX_EDGES, WORKERS
from counts.types import FaceSpec
from maps.canonical import CanonicalCode, canonical_code, map_from_code
from maps.combmap import CombMap
from maps.predicates import is_irreducible, is_tight
from utils.errors import OracleLimitExceeded

logger = logging.getLogger(__name__)


def polygon_phi(half_degrees: Sequence[int]) -> Tuple[List[int], List[int]]:
    """Face permutation of the disjoint polygons, and the label of every side."""
    phi: List[int] = []
    labels: List[int] = []
    start = 0
    for index, m in enumerate(half_degrees):
        sides = 2 * m
        phi.extend(start + (offset + 1) % sides for offset in range(sides))
        labels.extend([index + 1] * sides)
        start += sides
    return phi, labels


def _count_cycles(permutation: Sequence[int]) -> int:
    seen = [False] * len(permutation)
    cycles = 0
    for start in range(len(permutation)):
        if not seen[start]:
            cycles += 1
            h = start
            while not seen[h]:
                seen[h] = True
                h = permutation[h]
    return cycles


def _is_connected(alpha: Sequence[int], phi: Sequence[int]) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        h = stack.pop()
        for nxt in (alpha[h], phi[h]):
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return len(seen) == len(alpha)


def _matchings(alpha: List[int]) -> Iterator[List[int]]:
    """Complete a partial matching (``-1`` = unmatched), smallest side first."""
    try:
        first = alpha.index(-1)
    except ValueError:
        yield alpha
        return
    for partner in range(first + 1, len(alpha)):
        if alpha[partner] == -1:
            alpha[first], alpha[partner] = partner, first
            yield from _matchings(alpha)
            alpha[first] = alpha[partner] = -1


def branch_codes(
    half_degrees: Tuple[int, ...], partner: int, irreducible_b: Optional[int] = None
) -> Set[CanonicalCode]:
    """Canonical codes of the planar maps whose side 0 is glued to ``partner``.

    With ``irreducible_b`` set, only tight ``2b``-irreducible maps are kept.
    Module-level so it can be shipped to worker processes.
    """
    phi, labels = polygon_phi(half_degrees)
    size = len(phi)
    edges = size // 2
    faces = len(half_degrees)
    alpha = [-1] * size
    alpha[0], alpha[partner] = partner, 0
    codes: Set[CanonicalCode] = set()
    for matching in _matchings(alpha):
        if not _is_connected(matching, phi):
            continue
        sigma = [phi[matching[h]] for h in range(size)]
        if _count_cycles(sigma) - edges + faces != 2:
            continue
        combmap = CombMap(matching, sigma, _face_labels(sigma, matching, labels))
        if irreducible_b is not None and not (
            is_tight(combmap) and is_irreducible(combmap, irreducible_b)
        ):
            continue
        codes.add(canonical_code(combmap))
    return codes


def _face_labels(sigma: Sequence[int], alpha: Sequence[int], labels: Sequence[int]) -> List[int]:
    phi = [sigma[alpha[h]] for h in range(len(alpha))]
    seen = [False] * len(phi)
    result = []
    for start in range(len(phi)):
        if seen[start]:
            continue
        result.append(labels[start])
        h = start
        while not seen[h]:
            seen[h] = True
            h = phi[h]
    return result


def _check_limit(spec: FaceSpec, max_edges: Optional[int]) -> None:
    limit = MAX_EDGES if max_edges is None else max_edges
    if spec.edge_count > limit:
        raise OracleLimitExceeded("edges", spec.edge_count, limit, "--max-edges or TIGHTMAPS_MAX_EDGES")


def canonical_codes(
    spec: FaceSpec,
    workers: Optional[int] = None,
    max_edges: Optional[int] = None,
    irreducible_b: Optional[int] = None,
) -> List[CanonicalCode]:
    """Sorted canonical codes of all planar maps with the given labeled faces.

    Args:
        spec: Face half-degrees; ``spec.b`` is not used here.
        workers: Worker processes; defaults to ``TIGHTMAPS_WORKERS``.
        max_edges: Edge limit; defaults to ``TIGHTMAPS_MAX_EDGES``.
        irreducible_b: Keep only tight ``2b``-irreducible maps.

    Raises:
        OracleLimitExceeded: If the faces need more edges than allowed.
    """
    _check_limit(spec, max_edges)
    half_degrees = tuple(int(m) for m in spec.half_degrees)
    size = 2 * spec.edge_count
    workers = WORKERS if workers is None else workers
    started = time.perf_counter()
    codes: Set[CanonicalCode] = set()
    partners = range(1, size)
    if workers > 1 and size > 2:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [
                executor.submit(branch_codes, half_degrees, partner, irreducible_b)
                for partner in partners
            ]
            for future in futures:
                codes.update(future.result())
    else:
        for partner in partners:
            branch = branch_codes(half_degrees, partner, irreducible_b)
            logger.debug("side 0 glued to %d: %d classes", partner, len(branch))
            codes.update(branch)
    logger.info(
        "enumerated %d classes for half-degrees %s in %.2fs",
        len(codes),
        list(half_degrees),
        time.perf_counter() - started,
    )
    return sorted(codes)


def enumerate_maps(
    spec: FaceSpec, workers: Optional[int] = None, max_edges: Optional[int] = None
) -> Iterator[CombMap]:
    """One map per isomorphism class, in canonical-code order."""
    for code in canonical_codes(spec, workers=workers, max_edges=max_edges):
        yield map_from_code(code)


def count_tight_irreducible(
    spec: FaceSpec, workers: Optional[int] = None, max_edges: Optional[int] = None
) -> int:
    """Number of classes that are tight and ``2b``-irreducible for ``b = spec.b``."""
    return len(canonical_codes(spec, workers=workers, max_edges=max_edges, irreducible_b=int(spec.b)))


def count_angulations(b: int, n: int, workers: Optional[int] = None, max_edges: Optional[int] = None) -> int:
    """2b-irreducible 2b-angulations with ``n`` labeled faces."""
    return count_tight_irreducible(FaceSpec(b, (b,) * n), workers=workers, max_edges=max_edges)


def count_irreducible_slices(
    b: int, half_degrees: Sequence[int], workers: Optional[int] = None, max_edges: Optional[int] = None
) -> int:
    """Tight 2b-irreducible 0-slices with inner faces of half-degrees ``half_degrees``.

    Counted as maps with an extra face of degree ``2b+2`` and one of degree ``2b``.
    """
    spec = FaceSpec(b, (b + 1, b) + tuple(half_degrees))
    return count_tight_irreducible(spec, workers=workers, max_edges=max_edges)

"""Verification suites: closed formulas against brute-force oracles.

Every suite walks its instances from small to large and records the first
mismatch, so a failure always shows the smallest failing instance together
with a serialized witness (map or tree text) where one exists.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from itertools import combinations_with_replacement, permutations, product
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from algebra.multipoly import MultiPoly, variables
from algebra.scalar import factorial
from config import MAX_BLOSSOMING, MAX_EDGES_FAST, MAX_TREE_HALF_DEGREE_SUM, SERIES_ORDER
from counts import (
    AlphaMethod,
    FaceSpec,
    alpha,
    alpha_from_u0,
    alpha_special,
    angulation_count,
    angulation_formula,
    beta_count,
    beta_series,
    budd_identity_residual,
    f_count,
    fixed_cycle_count,
    n_count,
    n_count_symbolic,
    n_count_via_integral,
    p_univ,
    q_univ,
    transforms_compose_to_identity,
    two_face_count,
    u_count,
)
from cli.output import Failure, SuiteResult, exact_text
from maps import (
    canonical_code,
    canonical_codes,
    count_angulations,
    count_tight_irreducible,
    map_from_code,
    map_to_text,
)
from maps.twoface import enumerate_two_face_marked, two_face_maps
from trees import (
    check_tight,
    close_tree,
    enumerate_arrow_trees,
    enumerate_blossom_words,
    enumerate_decorated_tuples,
    enumerate_mdu_words,
    expected_charge,
    generate_decorated_trees,
    subtree_charges,
    tree_to_text,
    validate_slice,
)

logger = logging.getLogger(__name__)

SCOPES: Tuple[str, ...] = (
    "alpha",
    "words",
    "arrowtrees",
    "trees",
    "maps",
    "twoface",
    "budd",
    "angulations",
    "symbolic",
)


@dataclass(frozen=True)
class SuiteLimits:
    """Size limits of one verification run.

    ``slow`` adds the larger named map instances; ``workers`` is the process
    count handed to the map oracle.
    """

    max_edges: int = MAX_EDGES_FAST
    order: int = SERIES_ORDER
    max_blossoming: int = MAX_BLOSSOMING
    slow: bool = False
    workers: int = 1


class _Tally:
    """Counts comparisons and keeps the first mismatch."""

    def __init__(self, scope: str):
        self.result = SuiteResult(scope)

    def check(self, instance: str, expected: Any, actual: Any, witness: Callable[[], str] = lambda: "") -> bool:
        self.result.comparisons += 1
        if bool(expected == actual):
            return True
        if self.result.failure is None:
            logger.warning("%s: mismatch at %s (expected %s, got %s)", self.result.scope, instance, expected, actual)
            self.result.failure = Failure(instance, exact_text(expected), exact_text(actual), witness())
        return False


def _half_degree_tuples(
    b: int, n: int, total: int, largest: Optional[int] = None, sorted_only: bool = False
) -> Iterator[Tuple[int, ...]]:
    """Tuples of ``n`` half-degrees in ``b .. largest`` with sum at most ``total``, smallest sums first."""
    top = total if largest is None else largest
    choices = range(b, top + 1)
    pool = combinations_with_replacement(choices, n) if sorted_only else product(choices, repeat=n)
    candidates = [tuple(ms) for ms in pool if sum(ms) <= total]
    yield from sorted(candidates, key=lambda ms: (sum(ms), ms))


def suite_alpha(limits: SuiteLimits) -> SuiteResult:
    """The three alpha evaluations agree; b in {0, 1} gives the Kronecker delta."""
    tally = _Tally("alpha")
    for b in range(0, 7):
        for n in range(0, 9):
            for k in range(0, n + 1):
                instance = f"b={b} k={k} n={n}"
                reference = alpha(b, k, n, AlphaMethod.POLYSUM)
                tally.check(instance + " lagrange", reference, alpha(b, k, n, AlphaMethod.LAGRANGE))
                if b >= 2:
                    tally.check(instance + " recurrence", reference, alpha(b, k, n, AlphaMethod.RECURRENCE))
                else:
                    tally.check(instance + " delta", 1 if k == n else 0, reference)
    for b in range(2, 5):
        for n in range(0, 7):
            for k in range(0, n + 1):
                tally.check(f"b={b} k={k} n={n} from U_0", alpha(b, k, n), alpha_from_u0(b, k, n))
    return tally.result


def suite_words(limits: SuiteLimits) -> SuiteResult:
    """Blossoming words count as ``q`` and M/D/U words as ``p``."""
    tally = _Tally("words")
    for b in range(1, 4):
        for m in range(b, 8):
            for k in range(0, m + b + 2):
                tally.check(f"A/L/T b={b} m={m} k={k}", q_univ(b, k, m), enumerate_blossom_words(b, m, k))
    for c in range(1, 4):
        for m in range(c + 1, 8):
            for k in range(0, m - c + 1):
                tally.check(f"M/D/U c={c} m={m} k={k}", p_univ(c, k, m), enumerate_mdu_words(c, m, k))
    return tally.result


def suite_arrowtrees(limits: SuiteLimits) -> SuiteResult:
    tally = _Tally("arrowtrees")
    for b in range(2, 5):
        for p in range(0, b):
            for n in range(1, 6):
                tally.check(f"b={b} p={p} n={n}", u_count(b, p, n), enumerate_arrow_trees(b, p, n))
    return tally.result


def suite_trees(limits: SuiteLimits) -> SuiteResult:
    """Tree tuples against ``f_count``; every tree closes to a valid slice."""
    tally = _Tally("trees")
    for b in (1, 2):
        for n in range(1, limits.max_blossoming + 1):
            for ms in _half_degree_tuples(b, n, MAX_TREE_HALF_DEGREE_SUM):
                for k in range(0, min(2, n - 1) + 1):
                    tally.check(
                        f"tuples b={b} k={k} m={list(ms)}", f_count(b, k, ms), enumerate_decorated_tuples(b, k, ms)
                    )
                _check_closures(tally, b, ms)
    return tally.result


def _check_closures(tally: _Tally, b: int, ms: Sequence[int]) -> None:
    trees = generate_decorated_trees(b, ms)
    inner = {label: 2 * m for label, m in enumerate(ms, start=1)}
    codes = set()
    for tree in trees:
        text = tree_to_text(tree)
        tally.check(f"tightness of {text}", True, check_tight(tree), lambda: text)
        for p, value in subtree_charges(tree):
            tally.check(f"charge p={p} in {text}", expected_charge(p), value, lambda: text)
        slice_map = close_tree(tree, b)
        report = validate_slice(slice_map, b)
        tally.check(
            f"slice of {text}", "ok", report.reason, lambda: text + "\n" + map_to_text(slice_map)
        )
        degrees = {label: degree for label, degree in slice_map.face_degrees().items() if label != 0}
        tally.check(f"inner faces of {text}", inner, degrees, lambda: map_to_text(slice_map))
        codes.add(canonical_code(slice_map))
    label = f"b={b} m={list(ms)}"
    tally.check(f"trees {label}", f_count(b, 0, ms), len(trees))
    tally.check(f"distinct closures {label}", len(trees), len(codes))
    tally.check(f"closures vs count {label}", n_count(b, (b + 1, b) + tuple(ms)), len(codes))


# Named b=2 cases: the hexagon dissections with three and four inner faces and
# the all-squares branch. The last two need more edges than the fast sweep.
HEXAGON_INSTANCES: Tuple[Tuple[int, ...], ...] = ((3, 2, 2),)
SLOW_HEXAGON_INSTANCES: Tuple[Tuple[int, ...], ...] = ((2, 2, 2, 2), (3, 2, 2, 2))


def map_instances(limits: SuiteLimits) -> List[Tuple[int, Tuple[int, ...]]]:
    """``(b, half_degrees)`` pairs checked against the map oracle, smallest first.

    Every sorted spec with ``b`` in ``{1, 2}`` and at most ``max_edges`` edges is
    swept. Above ``TIGHTMAPS_MAX_EDGES_FAST`` edges a spec needs a face longer
    than ``2b``; all-``2b`` specs there are left to the angulation suite and the
    named instances.
    """
    instances = set()
    for b in (1, 2):
        for n in range(3, limits.max_edges // b + 1):
            for ms in _half_degree_tuples(b, n, limits.max_edges, sorted_only=True):
                if sum(ms) > MAX_EDGES_FAST and all(m == b for m in ms):
                    continue
                instances.add((b, ms))
    instances.update((2, ms) for ms in HEXAGON_INSTANCES)
    if limits.slow:
        instances.update((2, ms) for ms in SLOW_HEXAGON_INSTANCES)
    return sorted(instances, key=lambda item: (sum(item[1]), item))


def suite_maps(limits: SuiteLimits) -> SuiteResult:
    """The main count against exhaustive map enumeration.

    Each instance is enumerated up to its own edge count, so the named b=2
    cases run even when they exceed ``max_edges``.
    """
    tally = _Tally("maps")
    for b, ms in map_instances(limits):
        spec = FaceSpec(b, ms)
        found = count_tight_irreducible(spec, workers=limits.workers, max_edges=spec.edge_count)
        tally.check(f"b={b} m={list(ms)}", n_count(b, ms), found, lambda: _map_witness(spec))
    return tally.result


def _map_witness(spec: FaceSpec) -> str:
    codes = canonical_codes(spec, workers=1, max_edges=spec.edge_count, irreducible_b=int(spec.b))
    return map_to_text(map_from_code(codes[0])) if codes else ""


def suite_twoface(limits: SuiteLimits) -> SuiteResult:
    """Two-face maps by cycle length, and the sum over lengths."""
    tally = _Tally("twoface")
    for m1 in range(1, 5):
        for m2 in range(1, 5):
            for k in range(0, 3):
                table = enumerate_two_face_marked(m1, m2, k)
                for d, found in table.items():
                    tally.check(
                        f"d={d} k={k} m1={m1} m2={m2}",
                        fixed_cycle_count(d, k, m1, m2),
                        found,
                        lambda: map_to_text(next(two_face_maps(m1, m2, d))),
                    )
                for c in range(0, min(m1, m2)):
                    total = sum(found for d, found in table.items() if d >= c + 1)
                    tally.check(f"c={c} k={k} m1={m1} m2={m2}", two_face_count(c, k, m1, m2), total)
    for c in range(0, 4):
        for k in range(0, 5):
            for m1 in range(c + 1, 9):
                for m2 in range(c + 1, 9):
                    total = sum(fixed_cycle_count(d, k, m1, m2) for d in range(c + 1, max(m1, m2) + 1))
                    tally.check(f"sum over d, c={c} k={k} m1={m1} m2={m2}", two_face_count(c, k, m1, m2), total)
    return tally.result


def suite_budd(limits: SuiteLimits) -> SuiteResult:
    """Zero residual between the two forms of ``S``, and inverse transforms."""
    tally = _Tally("budd")
    for b in range(1, 4):
        for n in range(1, 5):
            if n - 2 > limits.order:
                continue
            for ms in _half_degree_tuples(b, n, 4 * n, largest=4, sorted_only=True):
                residual = budd_identity_residual(b, ms, limits.order)
                tally.check(f"residual b={b} m={list(ms)}", True, residual.is_zero(), lambda: str(residual))
                if n >= 3 and any(m != b for m in ms):
                    tally.check(f"integral form b={b} m={list(ms)}", n_count(b, ms), n_count_via_integral(b, ms))
    (b_symbol,) = variables("b")
    for b_value in (0, 1, 2, 3, b_symbol):
        tally.check(f"transforms b={b_value}", True, transforms_compose_to_identity(b_value, 7))
    return tally.result


def suite_angulations(limits: SuiteLimits) -> SuiteResult:
    """Angulations: oracle, closed formula, series, and the annular series."""
    tally = _Tally("angulations")
    cap = max(limits.max_edges, 6)
    for b, n in ((1, 3), (1, 4), (1, 5), (2, 3)):
        if b * n <= cap:
            found = count_angulations(b, n, workers=1, max_edges=cap)
            tally.check(f"oracle b={b} n={n}", angulation_formula(b, n), found)
    for b in range(1, 4):
        for n in range(3, limits.order + 3):
            tally.check(f"series b={b} n={n}", angulation_formula(b, n), angulation_count(b, n))
        series = beta_series(b, limits.order)
        for n in range(3, limits.order + 4):
            from_series = series.coefficient(n - 3) * factorial(n - 3)
            tally.check(f"beta b={b} n={n}", beta_count(b, n), from_series)
    return tally.result


def suite_symbolic(limits: SuiteLimits) -> SuiteResult:
    """Polynomial identities in ``b`` and the half-degrees."""
    tally = _Tally("symbolic")
    b, c, m1, m2 = variables("b", "c", "m1", "m2")
    for n in range(0, 9):
        for offset in range(0, min(3, n) + 1):
            k = n - offset
            tally.check(
                f"alpha_(n-{offset},n) n={n}",
                MultiPoly.coerce(alpha_special(b, k, n)),
                MultiPoly.coerce(alpha(b, k, n)),
            )
    for n in (3, 4):
        poly = MultiPoly.coerce(n_count_symbolic(n))
        names = [f"m{i}" for i in range(1, n + 1)]
        tally.check(f"degree n={n}", 2 * n - 6, poly.total_degree())
        for order in permutations(names):
            tally.check(f"symmetry n={n} {order}", poly, poly.rename(dict(zip(names, order))))
        for name in names:
            tally.check(f"parity n={n} {name}", poly, poly.substitute({name: -MultiPoly.variable(name)}))
        for point in ((2, (3,) + (2,) * (n - 1)), (2, (4, 3) + (2,) * (n - 2)), (3, (5,) + (3,) * (n - 1))):
            girth, ms = point
            assignment: Dict[str, Any] = {"b": girth}
            assignment.update(zip(names, ms))
            tally.check(f"evaluation n={n} b={girth} m={list(ms)}", n_count(girth, ms), poly.evaluate(assignment))
    for k in range(0, 5):
        tally.check(f"two-face symmetry k={k}", two_face_count(c, k, m1, m2), two_face_count(c, k, m2, m1))
    return tally.result


SUITES: Dict[str, Callable[[SuiteLimits], SuiteResult]] = {
    "alpha": suite_alpha,
    "words": suite_words,
    "arrowtrees": suite_arrowtrees,
    "trees": suite_trees,
    "maps": suite_maps,
    "twoface": suite_twoface,
    "budd": suite_budd,
    "angulations": suite_angulations,
    "symbolic": suite_symbolic,
}


def run_suite(scope: str, limits: SuiteLimits) -> SuiteResult:
    """Run one suite; a crash is reported as an error, not raised."""
    started = time.perf_counter()
    logger.info("running the %s suite", scope)
    try:
        result = SUITES[scope](limits)
    except Exception as exc:
        logger.error("the %s suite crashed", scope, exc_info=True)
        result = SuiteResult(scope, error=f"{type(exc).__name__}: {exc}")
    result.elapsed = time.perf_counter() - started
    logger.info("%s: %d comparisons in %.2fs", scope, result.comparisons, result.elapsed)
    return result


def run_suites(scopes: Sequence[str], limits: SuiteLimits, workers: int = 1) -> List[SuiteResult]:
    """Run suites, in worker processes when ``workers > 1``; results come in ``SCOPES`` order.

    With several suites in the pool each oracle runs on one process; a single
    suite hands ``workers`` to the map oracle instead.
    """
    ordered = [scope for scope in SCOPES if scope in scopes]
    if workers > 1 and len(ordered) > 1:
        pooled = replace(limits, workers=1)
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(run_suite, scope, pooled) for scope in ordered]
            return [future.result() for future in futures]
    single = replace(limits, workers=max(workers, limits.workers))
    return [run_suite(scope, single) for scope in ordered]

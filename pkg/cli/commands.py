"""Command implementations behind the ``tightmaps`` group.

Each ``cmd_*`` takes a validated ``RunConfig`` and returns the exit status
together with the rendered output, so the click layer only parses flags and
prints.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from config import MAX_BLOSSOMING, MAX_EDGES, MAX_EDGES_FAST, OUTPUT_FORMAT, SERIES_ORDER, WORKERS
from counts import (
    AlphaMethod,
    FaceSpec,
    alpha,
    angulation_series,
    beta_series,
    fixed_cycle_count,
    h_series,
    n_count,
    n_count_symbolic,
    n_essential,
    two_face_count,
    u0_series,
)
from cli.output import CommandResult, render_report, render_result
from cli.suites import SCOPES, SuiteLimits, run_suites
from utils.errors import OutsideTheoremRange

logger = logging.getLogger(__name__)

SERIES_KINDS = ("u0", "h", "angulations", "beta")


@dataclass
class RunConfig:
    """Parsed and validated flags of one invocation."""

    command: str
    b: Optional[int] = None
    half_degrees: Tuple[int, ...] = ()
    params: Dict[str, Any] = field(default_factory=dict)
    output_format: str = OUTPUT_FORMAT
    max_edges: Optional[int] = None
    max_blossoming: int = MAX_BLOSSOMING
    order: int = SERIES_ORDER
    scopes: Tuple[str, ...] = ()
    workers: int = WORKERS
    slow: bool = False


def parse_degrees(text: str, b: int) -> Tuple[int, ...]:
    """Comma-separated full face degrees, halved.

    Raises:
        OutsideTheoremRange: If a degree is odd or not a positive integer.
    """
    try:
        degrees = [int(piece) for piece in text.split(",") if piece.strip()]
    except ValueError as exc:
        raise OutsideTheoremRange(f"face degrees must be integers, got {text!r}") from exc
    return FaceSpec.from_degrees(b, degrees).half_degrees


def _degree_text(half_degrees: Sequence[int]) -> str:
    return ",".join(str(2 * m) for m in half_degrees)


def cmd_count(config: RunConfig) -> Tuple[int, str]:
    params = config.params
    if params.get("symbolic"):
        n = int(params["n"])
        numeric_b = config.b if params.get("symbolic_m") else None
        value = n_count_symbolic(n, numeric_b)
        inputs: Dict[str, Any] = {"b": "b" if numeric_b is None else numeric_b, "n": n}
    else:
        value = n_count(config.b, config.half_degrees)
        inputs = {"b": config.b, "degrees": _degree_text(config.half_degrees)}
    return 0, render_result(CommandResult("count", inputs, value), config.output_format)


def cmd_alpha(config: RunConfig) -> Tuple[int, str]:
    """Alpha with the default method, or all three under ``all_methods``.

    Disagreement between methods exits with status 2.
    """
    b, k, n = config.b, int(config.params["k"]), int(config.params["n"])
    inputs = {"b": b, "k": k, "n": n}
    if not config.params.get("all_methods"):
        result = CommandResult("alpha", inputs, alpha(b, k, n))
        return 0, render_result(result, config.output_format)
    values = {}
    for method in AlphaMethod:
        if method is AlphaMethod.RECURRENCE and b is not None and b < 2:
            continue
        values[method.value] = alpha(b, k, n, method)
    agree = len(set(values.values())) == 1
    if not agree:
        logger.error("alpha methods disagree for b=%s, k=%d, n=%d: %s", b, k, n, values)
    extra: Dict[str, Any] = dict(values)
    extra["agree"] = agree
    result = CommandResult("alpha", inputs, values[AlphaMethod.POLYSUM.value], extra)
    return (0 if agree else 2), render_result(result, config.output_format)


def cmd_twoface(config: RunConfig) -> Tuple[int, str]:
    c, k, m1, m2 = (int(config.params[key]) for key in ("c", "k", "m1", "m2"))
    value = two_face_count(c, k, m1, m2)
    result = CommandResult("twoface", {"c": c, "k": k, "m1": m1, "m2": m2}, value)
    return 0, render_result(result, config.output_format)


def cmd_cycle(config: RunConfig) -> Tuple[int, str]:
    d, k, m1, m2 = (int(config.params[key]) for key in ("d", "k", "m1", "m2"))
    value = fixed_cycle_count(d, k, m1, m2)
    result = CommandResult("cycle", {"d": d, "k": k, "m1": m1, "m2": m2}, value)
    return 0, render_result(result, config.output_format)


def cmd_essential(config: RunConfig) -> Tuple[int, str]:
    c = int(config.params["c"])
    value = n_essential(config.b, c, config.half_degrees)
    inputs = {"b": config.b, "c": c, "degrees": _degree_text(config.half_degrees)}
    return 0, render_result(CommandResult("essential", inputs, value), config.output_format)


def series_coefficients(kind: str, b: int, order: int) -> Tuple[List[Any], int]:
    """Coefficients of the requested series and the power of the first one.

    ``U_0`` and ``h_b`` have no constant term, so they are listed from the
    linear coefficient on.

    Raises:
        OutsideTheoremRange: For an unknown kind or ``order < 1``.
    """
    if order < 1:
        raise OutsideTheoremRange(f"series order must be at least 1, got {order}")
    if kind == "u0":
        return list(u0_series(b, order).coefficients[1:]), 1
    if kind == "h":
        return list(h_series(b, order).coefficients[1:]), 1
    if kind == "angulations":
        return list(angulation_series(b, order).coefficients), 0
    if kind == "beta":
        return list(beta_series(b, order).coefficients), 0
    raise OutsideTheoremRange(f"unknown series {kind!r}, expected one of {', '.join(SERIES_KINDS)}")


def cmd_series(config: RunConfig) -> Tuple[int, str]:
    kind = config.params["kind"]
    coefficients, first = series_coefficients(kind, config.b, config.order)
    inputs = {"series": kind, "b": config.b, "order": config.order, "first_power": first}
    return 0, render_result(CommandResult("series", inputs, coefficients), config.output_format)


def cmd_verify(config: RunConfig) -> Tuple[int, str]:
    """Run the selected suites; status 2 unless every one passes."""
    scopes = config.scopes or ("all",)
    if "all" in scopes:
        scopes = SCOPES
    unknown = sorted(set(scopes) - set(SCOPES))
    if unknown:
        raise OutsideTheoremRange(f"unknown scopes {unknown}, expected some of {', '.join(SCOPES)}")
    if config.max_edges is not None:
        max_edges = config.max_edges
    else:
        max_edges = MAX_EDGES if config.slow else MAX_EDGES_FAST
    limits = SuiteLimits(
        max_edges=max_edges, order=config.order, max_blossoming=config.max_blossoming, slow=config.slow
    )
    results = run_suites(scopes, limits, workers=config.workers)
    status = 0 if all(result.passed for result in results) else 2
    return status, render_report(results, config.output_format)

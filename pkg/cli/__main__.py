"""tightmaps command-line entry point.

Run with ``python -m cli <command>``. Errors from the library and click usage
problems exit with status 1, verification mismatches with status 2.
"""

import logging
import sys
from typing import Any, Callable, Optional

import click
from dotenv import load_dotenv

from cli.commands import (
    SERIES_KINDS,
    RunConfig,
    cmd_alpha,
    cmd_count,
    cmd_cycle,
    cmd_essential,
    cmd_series,
    cmd_twoface,
    cmd_verify,
    parse_degrees,
)
from cli.output import FORMATS
from cli.suites import SCOPES
from config import LOG_LEVEL, MAX_BLOSSOMING, OUTPUT_FORMAT, SERIES_ORDER, WORKERS
from utils.errors import TightMapsError

# Load environment variables from .env file
load_dotenv()

logger = logging.getLogger(__name__)


class TightMapsGroup(click.Group):
    """Click group that maps every outcome to the documented exit status."""

    def main(self, *args: Any, **kwargs: Any) -> Any:  # type: ignore[override]
        kwargs["standalone_mode"] = False
        try:
            status = super().main(*args, **kwargs)
        except click.ClickException as e:
            e.show()
            sys.exit(1)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(1)
        except TightMapsError as e:
            click.echo(f"Error: {e}", err=True)
            sys.exit(1)
        sys.exit(status or 0)


def common_options(command: Callable) -> Callable:
    """``--format`` and ``--log-level``, shared by every command."""
    command = click.option(
        "--log-level",
        "log_level",
        default=LOG_LEVEL,
        show_default=True,
        type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
        help="Logging level (logs go to stderr).",
    )(command)
    command = click.option(
        "--format",
        "output_format",
        default=OUTPUT_FORMAT,
        show_default=True,
        type=click.Choice(FORMATS),
        help="Output format.",
    )(command)
    return command


def _setup_logging(level: str) -> None:
    logging.basicConfig(level=getattr(logging, level.upper()), force=True)


def _emit(status: int, text: str) -> int:
    click.echo(text)
    return status


@click.group(cls=TightMapsGroup)
def tightmaps() -> None:
    """Exact enumeration of tight 2b-irreducible planar maps."""


@tightmaps.command()
@click.option("--b", "b", type=int, default=None, help="Half the irreducibility girth.")
@click.option("--degrees", "degrees", default=None, help="Comma-separated even face degrees, e.g. 6,4,4.")
@click.option("--symbolic", is_flag=True, help="Print the polynomial in b and m1..mn.")
@click.option("--symbolic-m", "symbolic_m", is_flag=True, help="With --symbolic, keep --b numeric.")
@click.option("--n", "n", type=int, default=None, help="Number of faces for --symbolic.")
@common_options
def count(
    b: Optional[int],
    degrees: Optional[str],
    symbolic: bool,
    symbolic_m: bool,
    n: Optional[int],
    output_format: str,
    log_level: str,
) -> int:
    """Number of tight 2b-irreducible maps with the given labeled faces."""
    _setup_logging(log_level)
    if symbolic:
        if n is None:
            raise click.UsageError("--symbolic needs --n")
        if symbolic_m and b is None:
            raise click.UsageError("--symbolic-m needs --b")
        config = RunConfig("count", b=b, params={"symbolic": True, "symbolic_m": symbolic_m, "n": n})
    else:
        if b is None or degrees is None:
            raise click.UsageError("count needs --b and --degrees (or --symbolic --n)")
        config = RunConfig("count", b=b, half_degrees=parse_degrees(degrees, b))
    config.output_format = output_format
    return _emit(*cmd_count(config))


@tightmaps.command(name="alpha")
@click.option("--b", "b", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--n", "n", type=int, required=True)
@click.option("--all-methods", "all_methods", is_flag=True, help="Evaluate with every method and compare.")
@common_options
def alpha_command(b: int, k: int, n: int, all_methods: bool, output_format: str, log_level: str) -> int:
    """The alpha numbers; exits 2 if the methods disagree."""
    _setup_logging(log_level)
    config = RunConfig("alpha", b=b, params={"k": k, "n": n, "all_methods": all_methods}, output_format=output_format)
    return _emit(*cmd_alpha(config))


@tightmaps.command()
@click.option("--c", "c", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--m1", "m1", type=int, required=True)
@click.option("--m2", "m2", type=int, required=True)
@common_options
def twoface(c: int, k: int, m1: int, m2: int, output_format: str, log_level: str) -> int:
    """Marked two-face maps whose cycle has length at least 2(c+1)."""
    _setup_logging(log_level)
    config = RunConfig("twoface", params={"c": c, "k": k, "m1": m1, "m2": m2}, output_format=output_format)
    return _emit(*cmd_twoface(config))


@tightmaps.command()
@click.option("--d", "d", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--m1", "m1", type=int, required=True)
@click.option("--m2", "m2", type=int, required=True)
@common_options
def cycle(d: int, k: int, m1: int, m2: int, output_format: str, log_level: str) -> int:
    """Marked two-face maps whose cycle has length exactly 2d."""
    _setup_logging(log_level)
    config = RunConfig("cycle", params={"d": d, "k": k, "m1": m1, "m2": m2}, output_format=output_format)
    return _emit(*cmd_cycle(config))


@tightmaps.command()
@click.option("--b", "b", type=int, required=True)
@click.option("--c", "c", type=int, required=True)
@click.option("--degrees", "degrees", required=True, help="Comma-separated even face degrees.")
@common_options
def essential(b: int, c: int, degrees: str, output_format: str, log_level: str) -> int:
    """Maps with separating girth at least 2(c+1) between faces 1 and 2."""
    _setup_logging(log_level)
    config = RunConfig(
        "essential", b=b, half_degrees=parse_degrees(degrees, b), params={"c": c}, output_format=output_format
    )
    return _emit(*cmd_essential(config))


@tightmaps.command()
@click.option("--u0", "kind", flag_value="u0", default=True, help="U_0(z), from z^1.")
@click.option("--h", "kind", flag_value="h", help="h_b(u), from u^1.")
@click.option("--angulations", "kind", flag_value="angulations", help="N_b(z), from z^0.")
@click.option("--beta", "kind", flag_value="beta", help="U_0'(1+U_0)^(2b-1), from z^0.")
@click.option("--b", "b", type=int, required=True)
@click.option("--order", "order", type=int, default=SERIES_ORDER, show_default=True)
@common_options
def series(kind: str, b: int, order: int, output_format: str, log_level: str) -> int:
    """Coefficients of one of the generating series."""
    _setup_logging(log_level)
    if kind not in SERIES_KINDS:
        raise click.UsageError(f"unknown series {kind}")
    config = RunConfig("series", b=b, order=order, params={"kind": kind}, output_format=output_format)
    return _emit(*cmd_series(config))


@tightmaps.command()
@click.option(
    "--scope",
    "scopes",
    multiple=True,
    type=click.Choice(SCOPES + ("all",)),
    default=("all",),
    show_default=True,
    help="Suites to run; repeat the flag for several.",
)
@click.option("--max-edges", "max_edges", type=int, default=None, help="Edge limit of the map oracle.")
@click.option("--order", "order", type=int, default=SERIES_ORDER, show_default=True)
@click.option("--max-blossoming", "max_blossoming", type=int, default=MAX_BLOSSOMING, show_default=True)
@click.option("--workers", "workers", type=int, default=WORKERS, show_default=True)
@click.option("--slow", is_flag=True, help="Extend the map oracle to TIGHTMAPS_MAX_EDGES and the larger hexagon cases.")
@common_options
def verify(
    scopes: tuple,
    max_edges: Optional[int],
    order: int,
    max_blossoming: int,
    workers: int,
    slow: bool,
    output_format: str,
    log_level: str,
) -> int:
    """Cross-check the formulas against the oracles; exits 2 on any mismatch."""
    _setup_logging(log_level)
    config = RunConfig(
        "verify",
        scopes=tuple(scopes),
        max_edges=max_edges,
        order=order,
        max_blossoming=max_blossoming,
        workers=workers,
        slow=slow,
        output_format=output_format,
    )
    return _emit(*cmd_verify(config))


if __name__ == "__main__":
    tightmaps()

"""Rendering of command results and verification reports.

Every value is shown exactly: integers and fractions as decimal strings,
polynomials through their ``str``. JSON keeps a fixed key order, so the same
inputs always give byte-identical output.
"""

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

FORMATS = ("table", "csv", "json")


def exact_text(value: Any) -> str:
    """Decimal string of an exact value; ``p/q`` for non-integral fractions."""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, Fraction) and value.denominator == 1:
        return str(value.numerator)
    return str(value)


@dataclass
class CommandResult:
    """One command's output: its inputs and a scalar or a list of values."""

    command: str
    inputs: Dict[str, Any]
    value: Any
    extra: Dict[str, Any] = field(default_factory=dict)

    def value_text(self) -> Any:
        if isinstance(self.value, (list, tuple)):
            return [exact_text(item) for item in self.value]
        return exact_text(self.value)


def render_result(result: CommandResult, fmt: str) -> str:
    inputs = {key: exact_text(value) for key, value in result.inputs.items()}
    value = result.value_text()
    if fmt == "json":
        payload: Dict[str, Any] = {"command": result.command, "inputs": inputs, "value": value}
        for key, extra in result.extra.items():
            payload[key] = exact_text(extra)
        return json.dumps(payload)
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        if isinstance(value, list):
            writer.writerow(["index", "value"])
            writer.writerows([index, item] for index, item in enumerate(value))
        else:
            writer.writerow(["command", *inputs, "value", *result.extra])
            writer.writerow([result.command, *inputs.values(), value, *(exact_text(v) for v in result.extra.values())])
        return buffer.getvalue().rstrip("\n")
    rows = [(key, text) for key, text in inputs.items()]
    if isinstance(value, list):
        rows.extend((f"[{index}]", item) for index, item in enumerate(value))
    else:
        rows.append(("value", value))
    rows.extend((key, exact_text(extra)) for key, extra in result.extra.items())
    return _table(["name", "value"], rows)


def _table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [max(len(str(row[i])) for row in [header, *rows]) for i in range(len(header))]
    lines = ["  ".join(str(cell).ljust(width) for cell, width in zip(row, widths)).rstrip() for row in [header, *rows]]
    lines.insert(1, "  ".join("-" * width for width in widths))
    return "\n".join(lines)


@dataclass
class Failure:
    """Smallest failing instance of a suite."""

    instance: str
    expected: str
    actual: str
    witness: str = ""


@dataclass
class SuiteResult:
    scope: str
    comparisons: int = 0
    failure: Optional[Failure] = None
    error: str = ""
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failure is None and not self.error


def render_report(results: List[SuiteResult], fmt: str) -> str:
    if fmt == "json":
        payload = {
            "command": "verify",
            "suites": [
                {
                    "scope": result.scope,
                    "passed": result.passed,
                    "comparisons": str(result.comparisons),
                    "failure": None if result.failure is None else vars(result.failure),
                    "error": result.error,
                }
                for result in results
            ],
            "passed": all(result.passed for result in results),
        }
        return json.dumps(payload)
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["scope", "status", "comparisons", "instance", "error"])
        for result in results:
            instance = result.failure.instance if result.failure else ""
            writer.writerow([result.scope, _status(result), result.comparisons, instance, result.error])
        return buffer.getvalue().rstrip("\n")
    table = _table(
        ["scope", "status", "comparisons", "seconds"],
        [(r.scope, _status(r), str(r.comparisons), f"{r.elapsed:.2f}") for r in results],
    )
    details = []
    for result in results:
        if result.error:
            details.append(f"\n{result.scope}: error: {result.error}")
        if result.failure is not None:
            failure = result.failure
            details.append(
                f"\n{result.scope}: smallest failing instance {failure.instance}\n"
                f"  expected {failure.expected}, got {failure.actual}"
            )
            if failure.witness:
                details.append("  witness:\n" + "\n".join("    " + line for line in failure.witness.splitlines()))
    return table + "".join("\n" + detail for detail in details)


def _status(result: SuiteResult) -> str:
    if result.error:
        return "ERROR"
    return "PASS" if result.passed else "FAIL"

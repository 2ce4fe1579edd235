#!/usr/bin/env python3
"""Parallel verification runner.

Starts one ``python -m cli verify --scope <scope>`` process per suite, so a
slow suite (``maps`` with ``--slow``) does not hold back the quick ones, and
keeps each suite's output in the logs/ directory.

USAGE:
- Run every suite with the quick limits:
  $ python scripts/run_suites.py

- Run two suites with the slow map oracle:
  $ python scripts/run_suites.py --scope maps --scope trees --slow
"""
import subprocess
import sys
import time
from pathlib import Path
from typing import Dict, List, Tuple

import click
from dotenv import load_dotenv

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT))

from cli.suites import SCOPES  # noqa: E402

# Load environment variables from .env file
load_dotenv()


def ensure_logs_directory() -> Path:
    """Ensure the logs directory exists and return its path.

    Returns:
        Path: The path to the logs directory.
    """
    logs_dir = Path("logs")
    logs_dir.mkdir(exist_ok=True)
    return logs_dir


def build_command(scope: str, slow: bool, max_edges: int) -> List[str]:
    cmd = [sys.executable, "-m", "cli", "verify", "--scope", scope]
    if slow:
        cmd.append("--slow")
    if max_edges:
        cmd.extend(["--max-edges", str(max_edges)])
    return cmd


@click.command()
@click.option(
    "--scope",
    "scopes",
    multiple=True,
    type=click.Choice(SCOPES),
    help="Suite to run; repeat for several. Default is every suite.",
)
@click.option("--slow", is_flag=True, help="Pass --slow to every suite.")
@click.option("--max-edges", "max_edges", type=int, default=0, help="Edge limit for the map oracle (0 keeps the default).")
def main(scopes: Tuple[str, ...], slow: bool, max_edges: int) -> None:
    """Runs the verification suites as separate processes."""
    selected = list(scopes) or list(SCOPES)

    logs_dir = ensure_logs_directory()
    print(f"📁 Suite logs will be saved to: {logs_dir.absolute()}")

    processes: Dict[str, subprocess.Popen] = {}
    statuses: Dict[str, int] = {}
    started = time.time()

    try:
        for scope in selected:
            cmd = build_command(scope, slow, max_edges)
            print(f"🚀 Starting {scope}: {' '.join(cmd)}")

            stdout_log = logs_dir / f"{scope}_stdout.log"
            stderr_log = logs_dir / f"{scope}_stderr.log"
            with open(stdout_log, "w") as stdout_file, open(stderr_log, "w") as stderr_file:
                processes[scope] = subprocess.Popen(
                    cmd, stdout=stdout_file, stderr=stderr_file, text=True, cwd=ROOT
                )

        for scope, process in processes.items():
            statuses[scope] = process.wait()
            mark = "✅" if statuses[scope] == 0 else "❌"
            print(f"{mark} {scope} finished with status {statuses[scope]}")

    except KeyboardInterrupt:
        print("\n🛑 Stopping all suites...")

    finally:
        for scope, process in processes.items():
            if process.poll() is None:
                print(f"   Terminating {scope} (PID: {process.pid})...")
                process.terminate()
                try:
                    process.wait(timeout=5)
                except subprocess.TimeoutExpired:
                    print(f"   {scope} did not terminate gracefully, killing.")
                    process.kill()

    failed = [scope for scope in selected if statuses.get(scope, 1) != 0]
    print(f"\n⏱  {len(statuses)} of {len(selected)} suites finished in {time.time() - started:.1f}s")
    if failed:
        print(f"❌ Failing suites: {', '.join(failed)} (see {logs_dir}/<scope>_stdout.log)")
        sys.exit(2 if all(statuses.get(scope) == 2 for scope in failed) else 1)
    print("🎉 All suites passed.")


if __name__ == "__main__":
    main()

"""The tightmaps command group: values, formats and exit statuses."""

import json

import pytest
from click.testing import CliRunner

from cli.__main__ import tightmaps
from cli.output import Failure, SuiteResult
from counts import n_count


@pytest.fixture
def runner():
    return CliRunner()


def run_json(runner, *args):
    result = runner.invoke(tightmaps, [*args, "--format", "json", "--log-level", "ERROR"])
    return result, json.loads(result.output) if result.exit_code == 0 else None


class TestCount:
    @pytest.mark.parametrize(
        "degrees,expected",
        [("6,4,4", "1"), ("4,4,4,4", "0"), ("6,4,4,4,4", "12")],
    )
    def test_values(self, runner, degrees, expected):
        result, payload = run_json(runner, "count", "--b", "2", "--degrees", degrees)
        assert result.exit_code == 0
        assert payload == {"command": "count", "inputs": {"b": "2", "degrees": degrees}, "value": expected}

    def test_table_output(self, runner):
        result = runner.invoke(tightmaps, ["count", "--b", "2", "--degrees", "6,4,4"])
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0].split() == ["name", "value"]
        assert lines[-1].split() == ["value", "1"]

    def test_csv_output(self, runner):
        result = runner.invoke(tightmaps, ["count", "--b", "2", "--degrees", "6,4,4", "--format", "csv"])
        assert result.exit_code == 0
        assert result.output.splitlines() == ["command,b,degrees,value", 'count,2,"6,4,4",1']

    def test_symbolic(self, runner):
        result, payload = run_json(runner, "count", "--symbolic", "--n", "3")
        assert result.exit_code == 0
        assert payload["value"] == "1"
        assert payload["inputs"] == {"b": "b", "n": "3"}

    def test_symbolic_with_numeric_b(self, runner):
        result, payload = run_json(runner, "count", "--symbolic", "--symbolic-m", "--b", "2", "--n", "4")
        assert result.exit_code == 0
        assert "m1" in payload["value"] and "b" not in payload["value"]

    @pytest.mark.parametrize(
        "args",
        [
            ["count", "--b", "2", "--degrees", "6,4"],
            ["count", "--b", "2", "--degrees", "6,5,4"],
            ["count", "--b", "2", "--degrees", "6,2,4"],
            ["count", "--b", "2", "--degrees", "six"],
        ],
    )
    def test_outside_range_exits_one(self, runner, args):
        result = runner.invoke(tightmaps, args)
        assert result.exit_code == 1
        assert "Error:" in result.output

    @pytest.mark.parametrize("args", [["count", "--b", "2"], ["count", "--symbolic"], ["count", "--b", "x"]])
    def test_usage_errors_exit_one(self, runner, args):
        result = runner.invoke(tightmaps, args)
        assert result.exit_code == 1


class TestOtherCommands:
    def test_alpha(self, runner):
        result, payload = run_json(runner, "alpha", "--b", "2", "--k", "0", "--n", "2")
        assert result.exit_code == 0
        assert payload["value"] == "6"

    def test_alpha_all_methods(self, runner):
        result, payload = run_json(runner, "alpha", "--b", "3", "--k", "0", "--n", "2", "--all-methods")
        assert result.exit_code == 0
        assert payload["value"] == "51"
        assert payload["agree"] == "true"
        assert payload["lagrange"] == payload["recurrence"] == "51"

    def test_alpha_all_methods_small_b_skips_recurrence(self, runner):
        result, payload = run_json(runner, "alpha", "--b", "1", "--k", "2", "--n", "2", "--all-methods")
        assert result.exit_code == 0
        assert "recurrence" not in payload

    def test_alpha_disagreement_exits_two(self, runner, monkeypatch):
        import cli.commands

        values = iter([1, 2, 1])
        monkeypatch.setattr(cli.commands, "alpha", lambda *args: next(values))
        result = runner.invoke(tightmaps, ["alpha", "--b", "2", "--k", "0", "--n", "2", "--all-methods"])
        assert result.exit_code == 2

    def test_twoface(self, runner):
        result, payload = run_json(runner, "twoface", "--c", "1", "--k", "0", "--m1", "2", "--m2", "2")
        assert result.exit_code == 0
        assert payload["value"] == "1"

    def test_cycle(self, runner):
        result, payload = run_json(runner, "cycle", "--d", "1", "--k", "1", "--m1", "2", "--m2", "2")
        assert result.exit_code == 0
        assert payload["value"] == "4"

    def test_essential(self, runner):
        result, payload = run_json(runner, "essential", "--b", "2", "--c", "2", "--degrees", "6,6,4,4")
        assert result.exit_code == 0
        assert payload["value"] == str(n_count(2, (3, 3, 2, 2)))

    def test_series_u0(self, runner):
        result, payload = run_json(runner, "series", "--u0", "--b", "2", "--order", "4")
        assert result.exit_code == 0
        assert payload["value"] == ["1", "1", "2", "5"]
        assert payload["inputs"]["first_power"] == "1"

    def test_series_angulations(self, runner):
        result, payload = run_json(runner, "series", "--angulations", "--b", "1", "--order", "2")
        assert result.exit_code == 0
        assert payload["value"] == ["1", "2", "0"]

    def test_series_csv_lists_coefficients(self, runner):
        result = runner.invoke(tightmaps, ["series", "--h", "--b", "2", "--order", "3", "--format", "csv"])
        assert result.exit_code == 0
        assert result.output.splitlines() == ["index,value", "0,1", "1,-1", "2,0"]

    def test_series_order_must_be_positive(self, runner):
        result = runner.invoke(tightmaps, ["series", "--b", "2", "--order", "0"])
        assert result.exit_code == 1


class TestVerify:
    def test_passing_suites_exit_zero(self, runner, monkeypatch):
        import cli.commands

        monkeypatch.setattr(
            cli.commands, "run_suites", lambda scopes, limits, workers: [SuiteResult(s, comparisons=2) for s in scopes]
        )
        result = runner.invoke(tightmaps, ["verify", "--scope", "alpha", "--scope", "words"])
        assert result.exit_code == 0
        assert "PASS" in result.output

    def test_failing_suite_exits_two_with_witness(self, runner, monkeypatch):
        import cli.commands

        failure = Failure("b=2 m=[3, 2, 2]", "1", "0", "E=1\n1 0\n0 1\n1")
        monkeypatch.setattr(
            cli.commands,
            "run_suites",
            lambda scopes, limits, workers: [SuiteResult("maps", comparisons=1, failure=failure)],
        )
        result = runner.invoke(tightmaps, ["verify", "--scope", "maps"])
        assert result.exit_code == 2
        assert "FAIL" in result.output
        assert "smallest failing instance b=2 m=[3, 2, 2]" in result.output
        assert "    E=1" in result.output

    def test_limits_follow_the_flags(self, runner, monkeypatch):
        import cli.commands

        seen = {}

        def fake_run(scopes, limits, workers):
            seen.update(scopes=scopes, limits=limits, workers=workers)
            return []

        monkeypatch.setattr(cli.commands, "run_suites", fake_run)
        runner.invoke(tightmaps, ["verify", "--slow", "--order", "3", "--workers", "2"])
        assert seen["limits"].max_edges == cli.commands.MAX_EDGES
        assert seen["limits"].order == 3
        assert seen["workers"] == 2
        assert "maps" in seen["scopes"]

    def test_words_suite_runs(self, runner):
        result, payload = run_json(runner, "verify", "--scope", "words")
        assert result.exit_code == 0
        assert payload["passed"] is True
        assert payload["suites"][0]["scope"] == "words"

    def test_unknown_scope_is_a_usage_error(self, runner):
        result = runner.invoke(tightmaps, ["verify", "--scope", "nonsense"])
        assert result.exit_code == 1

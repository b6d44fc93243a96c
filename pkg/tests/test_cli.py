"""
End-to-end tests of the command line through click's runner
"""
import json
from fractions import Fraction

import pytest
from click.testing import CliRunner

from src.cli import cli
from src.polyring import Poly
from src.reporter.codec import decode_poly

X = Poly.x()

FAILING_CUSTOM = ["--f", "1", "--g", "1", "--p", "x", "--p1", "1"]


@pytest.fixture
def runner():
    return CliRunner()


def run_json(runner, args, exit_code=0):
    result = runner.invoke(cli, args)
    assert result.exit_code == exit_code, result.output
    return json.loads(result.stdout)


class TestSomos:

    def test_default_seeds(self, runner):
        result = runner.invoke(cli, ["somos", "--k", "4", "--n", "8"])
        assert result.exit_code == 0
        assert result.stdout == "1,1,1,1,2,3,7,23,59\n"

    def test_expect_integral_fails_for_order_eight(self, runner):
        result = runner.invoke(cli, ["somos", "--k", "8", "--n", "20", "--expect-integral"])
        assert result.exit_code == 1

    def test_json_output(self, runner):
        doc = run_json(runner, ["somos", "--k", "8", "--n", "17", "--format", "json"])
        assert doc["first_noninteger"] == 17
        assert doc["terms"][17] == ["420514", "7"]

    def test_order_too_small(self, runner):
        assert runner.invoke(cli, ["somos", "--k", "3", "--n", "5"]).exit_code == 2


class TestConditionCommands:

    def test_check_star_satisfied(self, runner):
        doc = run_json(runner, ["check-star", "--f", "x^3", "--g", "x^2"])
        assert doc["satisfied"] is True

    def test_check_star_violated(self, runner):
        doc = run_json(runner, ["check-star", "--f", "x^2", "--g", "1"], exit_code=1)
        assert decode_poly(doc["residual"]) == -2 * X * X + 6 * X - 2

    def test_check_star_modified(self, runner):
        run_json(runner, ["check-star", "--f", "(x^2-1)^2", "--g", "x^3-x", "--beta", "1"])

    def test_parse_error(self, runner):
        result = runner.invoke(cli, ["check-star", "--f", "x/y", "--g", "1"])
        assert result.exit_code == 2
        assert "unknown identifier" in result.output

    def test_solve_g(self, runner):
        doc = run_json(runner, ["solve-g", "--f", "x^3"])
        assert [decode_poly(g) for g in doc["solutions"]] == [(X ** 2).scale(Fraction(3, 2)), X ** 2]

    def test_solve_g_zero_f(self, runner):
        assert runner.invoke(cli, ["solve-g", "--f", "0"]).exit_code == 2

    def test_search_finds_quadratic_family(self, runner):
        args = ["search", "--deg-min", "2", "--deg-max", "2", "--trials", "2", "--rng-seed", "7"]
        doc = run_json(runner, args)
        assert doc["total_solutions"] > 0
        assert runner.invoke(cli, args + ["--expect-none"]).exit_code == 1

    def test_search_bad_range(self, runner):
        args = ["search", "--deg-min", "3", "--deg-max", "2", "--trials", "1", "--rng-seed", "1"]
        assert runner.invoke(cli, args).exit_code == 2


class TestGenerate:

    def test_p2_json(self, runner):
        doc = run_json(runner, ["generate", "--family", "p2", "--n", "3"])
        assert decode_poly(doc["entries"][-1]["poly"]) == X ** 6 + 20 * X ** 3 - 80
        assert doc["is_successful"] is True

    def test_p2_csv(self, runner):
        result = runner.invoke(cli, ["generate", "--family", "p2", "--n", "2", "--format", "csv"])
        assert result.exit_code == 0
        assert result.stdout.splitlines()[-1] == "2,3,1,,true,x^3+4"

    def test_p3_needs_c(self, runner):
        result = runner.invoke(cli, ["generate", "--family", "p3", "--n", "3"])
        assert result.exit_code == 2

    def test_custom_needs_f(self, runner):
        assert runner.invoke(cli, ["generate", "--n", "3"]).exit_code == 2

    def test_custom_failure(self, runner):
        doc = run_json(runner, ["generate", "--n", "8"] + FAILING_CUSTOM, exit_code=1)
        assert doc["failure"]["n"] == 4

    def test_journal_written(self, runner, tmp_path):
        path = tmp_path / "run.jsonl"
        result = runner.invoke(cli, ["--journal", str(path), "generate", "--n", "8"] + FAILING_CUSTOM)
        assert result.exit_code == 1
        events = [json.loads(line) for line in path.read_text(encoding="utf-8").splitlines()]
        assert events[0]["type"] == "command"
        assert events[0]["data"]["name"] == "generate"
        assert any(e["type"] == "step_failure" for e in events)

    def test_journal_summary(self, runner, tmp_path):
        path = tmp_path / "run.jsonl"
        runner.invoke(cli, ["--journal", str(path), "generate", "--n", "8"] + FAILING_CUSTOM)
        doc = run_json(runner, ["journal-summary", str(path)])
        assert doc["commands"] == ["generate"]
        assert doc["failed_steps"] == [4]
        assert "P_4 is not a polynomial" in doc["errors"]
        assert doc["events"] == sum(doc["counts"].values())


class TestVerification:

    def test_verify_p3(self, runner):
        doc = run_json(runner, ["verify-p3", "--n", "0", "--n", "1", "--c", "2", "--c", "1/2"])
        assert doc["all_pass"] is True
        assert len(doc["checks"]) == 4

    def test_certify_and_validate(self, runner, tmp_path):
        doc = run_json(runner, ["certify", "--family", "p2", "--n", "6"])
        assert doc["passed"] is True
        path = tmp_path / "cert.json"
        path.write_text(json.dumps(doc), encoding="utf-8")
        result = runner.invoke(cli, ["validate-report", str(path)])
        assert result.exit_code == 0
        assert result.stdout.startswith("VALID: Report passed validation")

    def test_certify_failure(self, runner):
        doc = run_json(runner, ["certify", "--n", "6"] + FAILING_CUSTOM, exit_code=1)
        assert doc["passed"] is False
        assert doc["condition"]["satisfied"] is False

    def test_validate_tampered(self, runner, tmp_path):
        doc = run_json(runner, ["generate", "--family", "p2", "--n", "3"])
        doc["entries"][3]["degree"] = 5
        path = tmp_path / "p2.json"
        path.write_text(json.dumps(doc), encoding="utf-8")
        result = runner.invoke(cli, ["validate-report", str(path)])
        assert result.exit_code == 1
        assert result.stdout.startswith("INVALID: Errors found")
        assert "[ERROR] root.entries[3]: degree 5 but polynomial has degree 6" in result.stdout

    def test_bench(self, runner):
        doc = run_json(runner, ["bench", "--lengths", "8,40", "--bits", "64", "--repeats", "1"])
        assert doc["threshold"] == 32
        assert [r["length"] for r in doc["rows"]] == [8, 40]
        assert all(r["identical"] for r in doc["rows"])

    def test_bench_bad_lengths(self, runner):
        assert runner.invoke(cli, ["bench", "--lengths", "8,a"]).exit_code == 2

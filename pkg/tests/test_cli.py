"""CLI subcommands, exit codes, and report determinism."""

import json
import subprocess
import sys

import pytest

from matroid_chroma.cli import main
from matroid_chroma.instances import SCHEMA, dumps_instance

SINGLE = "fixtures/laminar6_single.json"
PAIR = "fixtures/laminar6_intersection.json"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def first_json(out):
    return json.loads(out.splitlines()[0])


class TestSubcommands:
    def test_chi(self, capsys):
        code, out, err = run_cli(capsys, "chi", SINGLE)
        assert code == 0
        report = first_json(out)
        assert report["chi"] == 2
        assert "chi: 2" in err

    def test_color_success(self, capsys):
        code, out, _ = run_cli(capsys, "color", SINGLE, "--alpha", "2")
        assert code == 0
        report = first_json(out)
        assert report["status"] == "success"
        assert report["complete"] is True
        assert report["feasible"] == [True]

    def test_color_failure_exits_two(self, capsys):
        code, out, _ = run_cli(capsys, "color", SINGLE, "--alpha", "1")
        assert code == 2
        assert first_json(out)["status"] == "failure"

    def test_color_dfs_selector(self, capsys):
        code, out, _ = run_cli(
            capsys, "color", SINGLE, "--alpha", "2", "--selector", "dfs-chordless"
        )
        assert code == 0
        assert first_json(out)["status"] == "success"

    def test_intersect(self, capsys):
        code, out, _ = run_cli(capsys, "intersect", PAIR)
        assert code == 0
        report = first_json(out)
        assert report["palette_bound"] == 3
        assert report["colors_used"] <= 3
        assert report["feasible"] == [True, True]
        assert report["complete"] is True

    def test_intersect_alpha_override(self, capsys):
        code, out, _ = run_cli(capsys, "intersect", PAIR, "--alpha", "3")
        assert code == 0
        assert first_json(out)["palette_bound"] == 4

    def test_verify_ok(self, capsys):
        code, out, _ = run_cli(capsys, "verify", PAIR)
        assert code == 0
        assert first_json(out)["violations"] == []

    def test_verify_corrupted_coloring_exits_two(self, capsys, tmp_path):
        obj = json.loads(open(PAIR).read())
        obj["coloring"]["colors"] = [3, 3, 3, 2, 1, 0]  # x2,x3 share a part
        p = tmp_path / "corrupt.json"
        p.write_text(dumps_instance(obj))
        code, out, err = run_cli(capsys, "verify", str(p))
        assert code == 2
        report = first_json(out)
        assert report["status"] == "failure"
        assert any("class 3" in v for v in report["violations"])

    def test_verify_without_coloring_exits_three(self, capsys, tmp_path):
        obj = json.loads(open(PAIR).read())
        del obj["coloring"]
        p = tmp_path / "none.json"
        p.write_text(dumps_instance(obj))
        code, out, _ = run_cli(capsys, "verify", str(p))
        assert code == 3

    def test_rainbow(self, capsys, tmp_path):
        obj = {
            "schema": SCHEMA,
            "matroid": {"kind": "uniform", "data": {"n": 4, "rank": 2}},
            "blocks": [[0, 1], [2, 3]],
        }
        p = tmp_path / "rb.json"
        p.write_text(dumps_instance(obj))
        code, out, _ = run_cli(capsys, "rainbow", str(p))
        assert code == 0
        report = first_json(out)
        assert report["colors_used"] <= report["palette_bound"] == 3
        assert report["violations"] == []

    def test_strong(self, capsys, tmp_path):
        obj = {
            "schema": SCHEMA,
            "graph": {"vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]]},
            "matroid": {"kind": "uniform", "data": {"n": 3, "rank": 3}},
        }
        p = tmp_path / "st.json"
        p.write_text(dumps_instance(obj))
        code, out, _ = run_cli(capsys, "strong", str(p))
        assert code == 0
        report = first_json(out)
        assert report["colors_used"] <= report["palette_bound"] == 4

    def test_axioms_ok(self, capsys):
        code, out, _ = run_cli(capsys, "axioms", PAIR)
        assert code == 0
        report = first_json(out)
        assert all(r["ok"] for r in report["results"])

    def test_axioms_counterexample_exits_two(self, capsys, tmp_path):
        obj = {
            "schema": SCHEMA,
            "m1": {
                "kind": "explicit",
                "data": {"n": 3, "independent": [[], [0], [1], [2], [0, 1]]},
            },
            "partitions": [],
        }
        p = tmp_path / "ax.json"
        p.write_text(dumps_instance(obj))
        code, out, _ = run_cli(capsys, "axioms", str(p))
        assert code == 2
        report = first_json(out)
        assert report["results"][0]["axiom"] == "exchange"

    def test_axioms_bound_guard(self, capsys, tmp_path):
        obj = {
            "schema": SCHEMA,
            "m1": {"kind": "uniform", "data": {"n": 14, "rank": 3}},
            "partitions": [],
        }
        p = tmp_path / "big.json"
        p.write_text(dumps_instance(obj))
        code, out, _ = run_cli(capsys, "axioms", str(p), "--max-n", "10")
        assert code == 3

    def test_gen_writes_loadable_file(self, capsys, tmp_path):
        out_path = tmp_path / "inst.json"
        code, _, _ = run_cli(
            capsys, "gen", "--seed", "3", "--family", "graphic", "--n", "8",
            "-o", str(out_path),
        )
        assert code == 0
        code, out, _ = run_cli(capsys, "intersect", str(out_path))
        assert code == 0

    def test_gen_stdout(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "--seed", "3", "--family", "uniform")
        assert code == 0
        assert json.loads(out)["schema"] == SCHEMA

    def test_bench_runs_all_families(self, capsys):
        for family in ("laminar", "rainbow", "strong"):
            code, out, err = run_cli(
                capsys, "bench", "--seed", "2", "--family", family,
                "--count", "3", "--n", "8",
            )
            assert code == 0, (family, err)
            lines = [json.loads(line) for line in out.splitlines()]
            assert len(lines) == 3
            assert all(r["colors_used"] <= r["palette_bound"] for r in lines)

    def test_bench_with_brute_optima(self, capsys):
        code, out, _ = run_cli(
            capsys, "bench", "--seed", "5", "--family", "graphic",
            "--count", "3", "--n", "7", "--brute",
        )
        assert code == 0
        for line in out.splitlines():
            report = json.loads(line)
            assert report["optimum"] <= report["colors_used"]


class TestExitCodes:
    def test_validation_error_is_three(self, capsys, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text('{"schema": "matroid-chroma/1"}')
        code, out, _ = run_cli(capsys, "intersect", str(p))
        assert code == 3
        assert first_json(out)["category"] == "validation"

    def test_parse_error_is_three(self, capsys, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text("{")
        code, out, _ = run_cli(capsys, "chi", str(p))
        assert code == 3
        assert first_json(out)["category"] == "format"

    def test_invariant_violation_is_four(self, capsys):
        # alpha below the true chromatic number trips the sink guarantee
        code, out, _ = run_cli(capsys, "intersect", PAIR, "--alpha", "1")
        assert code == 4
        assert first_json(out)["category"] == "invariant"

    def test_usage_error_is_three(self):
        proc = subprocess.run(
            [sys.executable, "-m", "matroid_chroma", "intersect"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 3

    def test_json_flag_silences_stderr(self, capsys):
        code, out, err = run_cli(capsys, "chi", SINGLE, "--json")
        assert code == 0 and err == ""


class TestDeterminism:
    def test_repeat_runs_byte_identical(self):
        for argv in (
            ["intersect", PAIR, "--json"],
            ["chi", SINGLE, "--json"],
            ["bench", "--seed", "9", "--family", "laminar", "--count", "4",
             "--n", "9", "--json"],
            ["gen", "--seed", "12", "--family", "transversal", "--json"],
        ):
            runs = [
                subprocess.run(
                    [sys.executable, "-m", "matroid_chroma", *argv],
                    capture_output=True,
                    cwd=".",
                )
                for _ in range(2)
            ]
            assert runs[0].returncode == runs[1].returncode
            assert runs[0].stdout == runs[1].stdout
            assert runs[0].stdout  # nonempty reports

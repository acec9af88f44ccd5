"""Command-line behavior: outputs, exit codes, headers, determinism."""

from __future__ import annotations

import json
import subprocess
import sys

from hsograph.cli import (
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VIOLATION,
    main,
    run_verify_campaign,
)
from hsograph.graph import parse_graph6


def run_cli(*argv):
    return main(list(argv))


class TestCompute:
    def test_family_spec(self, capsys):
        assert run_cli("compute", "star:5") == EXIT_OK
        out = capsys.readouterr().out
        assert "16.492422502470642" in out
        assert "class=tree" in out

    def test_cycle_value(self, capsys):
        assert run_cli("compute", "cycle:6") == EXIT_OK
        assert "8.485281374238571" in capsys.readouterr().out

    def test_graph6_input(self, capsys):
        assert run_cli("compute", "Bw") == EXIT_OK
        out = capsys.readouterr().out
        assert "4.24264068711928" in out

    def test_per_edge(self, capsys):
        assert run_cli("compute", "path:3", "--per-edge") == EXIT_OK
        out = capsys.readouterr().out
        assert out.count("edge (") == 2

    def test_json_format(self, capsys):
        assert run_cli("compute", "star:4", "--format", "json") == EXIT_OK
        doc = json.loads(capsys.readouterr().out)
        assert doc["results"][0]["n"] == 4
        assert doc["tool"].startswith("hsograph")

    def test_file_input(self, tmp_path, capsys):
        src = tmp_path / "graphs.g6"
        src.write_text("Bw\nBg\n")
        assert run_cli("compute", "--file", str(src), "--format", "json") == EXIT_OK
        doc = json.loads(capsys.readouterr().out)
        assert len(doc["results"]) == 2

    def test_bad_family(self, capsys):
        assert run_cli("compute", "star:notanumber") == EXIT_USAGE

    def test_bad_graph6(self, capsys):
        assert run_cli("compute", "B") == EXIT_USAGE

    def test_nothing_to_do(self, capsys):
        assert run_cli("compute") == EXIT_USAGE


class TestVerify:
    def test_tree_bounds_clean(self, capsys):
        assert run_cli("verify", "tree-bounds", "--n", "3..8") == EXIT_OK

    def test_reports_to_csv(self, tmp_path):
        out = tmp_path / "reports.csv"
        code = run_cli("verify", "sandwich", "--n", "3..4", "--format", "csv",
                       "--out", str(out))
        assert code == EXIT_OK
        lines = out.read_text().splitlines()
        assert lines[0].startswith("# hsograph")
        assert "tolerance=" in lines[0] and "check=sandwich" in lines[0]
        assert lines[1].split(",")[0] == "theorem"
        assert len(lines) == 2 + 2 + 6  # header, columns, orders 3 and 4

    def test_reports_to_json(self, tmp_path):
        out = tmp_path / "reports.json"
        assert run_cli("verify", "general-lower", "--n", "3..5",
                       "--format", "json", "--out", str(out)) == EXIT_OK
        doc = json.loads(out.read_text())
        assert doc["check"] == "general-lower"
        assert len(doc["reports"]) == 2 + 6 + 21
        assert all(r["holds"] and r["consistent"] for r in doc["reports"])

    def test_pendant_split_check(self, capsys):
        assert run_cli("verify", "f-monotone", "--n", "5..60") == EXIT_OK

    def test_range_below_statement_is_usage_error(self):
        assert run_cli("verify", "tree-bounds", "--n", "2..5") == EXIT_USAGE

    def test_bad_range(self):
        assert run_cli("verify", "sandwich", "--n", "5..3") == EXIT_USAGE
        assert run_cli("verify", "sandwich", "--n", "x..3") == EXIT_USAGE

    def test_large_needs_flag(self):
        assert run_cli("verify", "sandwich", "--n", "2..9") == EXIT_USAGE

    def test_bad_tolerance(self):
        assert run_cli("verify", "sandwich", "--n", "3..4", "--tolerance", "0.5") == EXIT_USAGE
        assert run_cli("verify", "sandwich", "--n", "3..4", "--tolerance", "0") == EXIT_USAGE

    def test_class_override(self, capsys):
        assert run_cli("verify", "sandwich", "--n", "3..6", "--class", "tree") == EXIT_OK


class TestSearch:
    def test_monotonicity_includes_triangle_pair(self, capsys):
        assert run_cli("search", "monotonicity", "--n-max", "4") == EXIT_OK
        out = capsys.readouterr().out
        lines = [line for line in out.splitlines() if not line.startswith("#")]
        assert "BW Bw" in lines

    def test_monotonicity_json(self, tmp_path):
        out = tmp_path / "witnesses.json"
        assert run_cli("search", "monotonicity", "--n-max", "4", "--format", "json",
                       "--out", str(out)) == EXIT_OK
        doc = json.loads(out.read_text())
        assert doc["witnesses"]
        w = doc["witnesses"][0]
        assert w["delta"] < 0

    def test_conjecture_clean(self, capsys):
        assert run_cli("search", "conjecture", "--n", "4..5") == EXIT_OK
        err = capsys.readouterr().err
        assert "is_star=True" in err

    def test_conjecture_needs_n(self):
        assert run_cli("search", "conjecture") == EXIT_USAGE

    def test_extremal_table(self, tmp_path):
        out = tmp_path / "table.json"
        assert run_cli("search", "extremal-table", "--class", "unicyclic",
                       "--n", "3..6", "--format", "json", "--out", str(out)) == EXIT_OK
        doc = json.loads(out.read_text())
        assert doc["summary"]["violations"] == []
        assert set(doc["summary"]["extremal_min"]) == {"3", "4", "5", "6"}


class TestEnumerate:
    def test_tree_counts(self, tmp_path, capsys):
        out = tmp_path / "trees.g6"
        assert run_cli("enumerate", "--class", "tree", "--n", "7", "--out", str(out)) == EXIT_OK
        lines = out.read_text().splitlines()
        assert len(lines) == 11
        assert lines == sorted(lines)
        for line in lines:
            g = parse_graph6(line)
            assert g.n == 7 and g.classify() == "tree"

    def test_connected_small(self, capsys):
        assert run_cli("enumerate", "--class", "connected", "--n", "3") == EXIT_OK
        out = capsys.readouterr().out
        assert len(out.splitlines()) == 2

    def test_bicyclic_four(self, capsys):
        assert run_cli("enumerate", "--class", "bicyclic", "--n", "4") == EXIT_OK
        assert len(capsys.readouterr().out.splitlines()) == 1

    def test_edges_override(self, capsys):
        assert run_cli("enumerate", "--n", "5", "--edges", "5") == EXIT_OK
        assert len(capsys.readouterr().out.splitlines()) == 5

    def test_large_needs_flag(self):
        assert run_cli("enumerate", "--class", "connected", "--n", "9") == EXIT_USAGE

    def test_bad_path(self, tmp_path):
        assert run_cli("enumerate", "--class", "tree", "--n", "5",
                       "--out", str(tmp_path / "nodir" / "x.g6")) == EXIT_USAGE


class TestDeterminismAndParallel:
    def test_outputs_identical_across_jobs(self, tmp_path):
        serial = tmp_path / "serial.csv"
        parallel = tmp_path / "parallel.csv"
        assert run_cli("verify", "sandwich", "--n", "3..6", "--format", "csv",
                       "--jobs", "1", "--out", str(serial)) == EXIT_OK
        assert run_cli("verify", "sandwich", "--n", "3..6", "--format", "csv",
                       "--jobs", "3", "--out", str(parallel)) == EXIT_OK
        assert serial.read_bytes() == parallel.read_bytes()

    def test_repeat_runs_identical(self, tmp_path):
        a = tmp_path / "a.json"
        b = tmp_path / "b.json"
        for target in (a, b):
            assert run_cli("verify", "unicyclic-bounds", "--n", "3..6",
                           "--format", "json", "--out", str(target)) == EXIT_OK
        assert a.read_bytes() == b.read_bytes()

    def test_campaign_api_matches_cli_counts(self):
        summary, reports = run_verify_campaign("tree-bounds", 3, 7)
        assert summary.graphs_examined == 1 + 2 + 3 + 6 + 11
        assert len(reports) == summary.graphs_examined
        assert not summary.violations


class TestSubprocessEntry:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "hsograph.cli", "compute", "star:4"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert "9.486832980505138" in proc.stdout

    def test_version(self):
        proc = subprocess.run(
            [sys.executable, "-m", "hsograph.cli", "--version"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.startswith("hsograph")

    def test_usage_error_exit_code(self):
        proc = subprocess.run(
            [sys.executable, "-m", "hsograph.cli", "verify", "sandwich", "--n", "bad"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 2

    def test_env_jobs(self, tmp_path):
        out = tmp_path / "env.csv"
        proc = subprocess.run(
            [sys.executable, "-m", "hsograph.cli", "verify", "sandwich",
             "--n", "3..5", "--format", "csv", "--out", str(out)],
            capture_output=True, text=True, env={"HSO_JOBS": "2", "PATH": "/usr/bin:/bin"},
        )
        assert proc.returncode == 0
        assert out.read_text().splitlines()[0].startswith("# hsograph")

# ----------------------------------------------------------
# Domination Lab
# File: tests/test_cli.py
# ----------------------------------------------------------
# Description:
# End-to-end tests for domlab/cli.py. Each test calls main() with
# an argv list and an isolated LabConfig, then checks the exit code,
# stdout and any files written.
#
# Exit codes: 0 ok, 1 fail/violation, 2 inconclusive, 3 usage or IO.
# ----------------------------------------------------------

import json

import pytest

from domlab import claims
from domlab.certification import save_occurrences
from domlab.claims import register_claim
from domlab.cli import build_parser, cprint, main
from domlab.families import build_R
from domlab.graph6 import parse_graph6, write_graph6_file
from domlab.graph_core import complete_graph, path_graph, prism_graph
from domlab.lab_config import LabConfig


@pytest.fixture
def k4_file(tmp_path):
    return write_graph6_file([complete_graph(4)], tmp_path / "k4.g6")


def _stdout_json(capsys):
    out = capsys.readouterr().out
    return json.loads(out[out.index("["):])


# ----------------------------------------------------------
# Parser and Usage
# ----------------------------------------------------------
def test_no_command_prints_help(capsys, lab_config):
    assert main([], lab_config) == 3
    assert "Subcommands:" in capsys.readouterr().out


def test_usage_error_exit_code(capsys, lab_config):
    assert main(["build", "--family", "R"], lab_config) == 3
    assert "Error:" in capsys.readouterr().err


def test_parser_epilog_lists_claims():
    assert "GP72" in build_parser().epilog


def test_cprint_writes_text(capsys):
    cprint("hello", "green")
    assert "hello" in capsys.readouterr().out


# ----------------------------------------------------------
# build
# ----------------------------------------------------------
def test_build_graph6(tmp_path, lab_config):
    out = tmp_path / "r3.g6"
    assert main(["build", "--family", "R", "--k", "3", "--out", str(out)], lab_config) == 0
    g = parse_graph6(out.read_text(encoding="ascii"))
    assert (g.n, g.m) == (60, 90)


def test_build_dot_with_labels(tmp_path, lab_config):
    out = tmp_path / "a.dot"
    assert main(["build", "--family", "A", "--format", "dot", "--out", str(out)], lab_config) == 0
    text = out.read_text(encoding="utf-8")
    assert text.startswith("graph {")
    assert 'label="a1"' in text


def test_build_with_base_graph(tmp_path, lab_config):
    out = tmp_path / "gb.g6"
    assert main(["build", "--family", "GB", "--base", "K4", "--out", str(out)], lab_config) == 0
    assert parse_graph6(out.read_text(encoding="ascii")).n == 36


@pytest.mark.parametrize("argv", [
    ["build", "--family", "Zeta", "--out", "x.g6"],
    ["build", "--family", "R", "--k", "2", "--out", "x.g6"],
    ["build", "--family", "R", "--k", "3", "--out", "x.g6", "--format", "svg"],
])
def test_build_errors(tmp_path, lab_config, argv):
    argv = [str(tmp_path / a) if a == "x.g6" else a for a in argv]
    assert main(argv, lab_config) == 3


# ----------------------------------------------------------
# analyze
# ----------------------------------------------------------
def test_analyze_selected_checks(tmp_path, capsys, lab_config):
    path = write_graph6_file([complete_graph(4), prism_graph()], tmp_path / "g.g6")
    assert main(["analyze", "--in", str(path), "--checks", "cubic,cyc4"], lab_config) == 0
    data = _stdout_json(capsys)
    assert [row["cyc4"] for row in data] == [True, False]
    assert all(row["cubic"] for row in data)


def test_analyze_report_file(tmp_path, lab_config, k4_file):
    report = tmp_path / "out" / "analysis.json"
    assert main(["analyze", "--in", str(k4_file), "--report", str(report)], lab_config) == 0
    assert json.loads(report.read_text(encoding="utf-8"))[0]["kappa"] == 3


def test_analyze_undecided_hamiltonicity(tmp_path, petersen):
    config = LabConfig(base_dir=tmp_path, hamilton_budget=1)
    path = write_graph6_file([petersen], tmp_path / "p.g6")
    assert main(["analyze", "--in", str(path), "--checks", "hamilton"], config) == 2


@pytest.mark.parametrize("argv", [
    ["analyze", "--in", "missing.g6"],
    ["analyze", "--in", "K4", "--checks", "girth"],
    ["analyze", "--in", "K4", "--budget", "0"],
])
def test_analyze_errors(lab_config, k4_file, argv):
    argv = [str(k4_file) if a == "K4" else a for a in argv]
    assert main(argv, lab_config) == 3


def test_analyze_rejects_bad_graph6_line(tmp_path, lab_config):
    path = tmp_path / "bad.g6"
    path.write_text("C~\nC!\n", encoding="ascii")
    assert main(["analyze", "--in", str(path)], lab_config) == 3


# ----------------------------------------------------------
# solve
# ----------------------------------------------------------
def test_solve_prints_results(capsys, lab_config, k4_file):
    assert main(["solve", "--in", str(k4_file)], lab_config) == 0
    data = _stdout_json(capsys)
    assert data[0]["gamma"] == 1
    assert data[0]["certificate"] == "branch-and-bound"


def test_solve_bruteforce_method(capsys, tmp_path, lab_config):
    path = write_graph6_file([path_graph(5)], tmp_path / "p5.g6")
    assert main(["solve", "--in", str(path), "--method", "bruteforce"], lab_config) == 0
    assert _stdout_json(capsys)[0]["certificate"] == "brute-force"


def test_solve_bruteforce_uses_configured_cap(tmp_path):
    config = LabConfig(base_dir=tmp_path, bruteforce_cap=4)
    path = write_graph6_file([path_graph(5)], tmp_path / "p5.g6")
    assert main(["solve", "--in", str(path), "--method", "bruteforce"], config) == 3
    assert main(["solve", "--in", str(path)], config) == 0


def test_solve_certified(tmp_path, lab_config):
    built = build_R(3)
    graph_file = write_graph6_file([built.graph], tmp_path / "r3.g6")
    sidecar = save_occurrences(built.atoms(), tmp_path / "r3.json")
    report = tmp_path / "r3-solve.json"
    argv = ["solve", "--in", str(graph_file), "--certify", str(sidecar), "--report", str(report)]
    assert main(argv, lab_config) == 0
    data = json.loads(report.read_text(encoding="utf-8"))
    assert data[0]["gamma"] == 21
    assert data[0]["certificate"] == "compositional"
    assert data[0]["ratio"] == "7/20"


def test_solve_certify_needs_one_graph(tmp_path, lab_config):
    path = write_graph6_file([complete_graph(4), prism_graph()], tmp_path / "two.g6")
    sidecar = save_occurrences([], tmp_path / "none.json")
    assert main(["solve", "--in", str(path), "--certify", str(sidecar)], lab_config) == 3


def test_solve_refused_certificate_is_an_error(tmp_path, lab_config):
    built = build_R(3)
    graph_file = write_graph6_file([built.graph], tmp_path / "r3.g6")
    overlapping = [built.atoms()[0], built.atoms()[0]]
    sidecar = save_occurrences(overlapping, tmp_path / "bad.json")
    assert main(["solve", "--in", str(graph_file), "--certify", str(sidecar)], lab_config) == 3


# ----------------------------------------------------------
# verify
# ----------------------------------------------------------
def test_verify_writes_report(tmp_path, lab_config):
    report = tmp_path / "claims.json"
    argv = ["verify", "--claims", "A.table,W.table", "--report", str(report)]
    assert main(argv, lab_config) == 0
    data = json.loads(report.read_text(encoding="utf-8"))
    assert [row["claim_id"] for row in data] == ["A.table", "W.table"]
    assert {row["status"] for row in data} == {"pass"}


def test_verify_csv_report(tmp_path, lab_config):
    report = tmp_path / "claims.csv"
    argv = ["verify", "--claims", "GP72", "--report", str(report), "--format", "csv"]
    assert main(argv, lab_config) == 0
    assert report.read_text(encoding="utf-8").startswith("claim_id,citation")


def test_verify_exit_codes_follow_statuses(monkeypatch, tmp_path, lab_config):
    monkeypatch.setattr(claims, "_claim_registry", {})
    register_claim("ok", "c", "q", {"v": 1})(lambda ctx: {"v": 1})
    register_claim("open", "c", "q", {"v": 1})(lambda ctx: {})
    register_claim("broken", "c", "q", {"v": 1})(lambda ctx: {"v": 0})
    report = str(tmp_path / "r.json")
    assert main(["verify", "--claims", "ok", "--report", report], lab_config) == 0
    assert main(["verify", "--claims", "ok,open", "--report", report], lab_config) == 2
    assert main(["verify", "--claims", "open,broken", "--report", report], lab_config) == 1


@pytest.mark.parametrize("argv", [
    ["verify", "--claims", "nope"],
    ["verify", "--claims", "A.table", "--workers", "0"],
    ["verify", "--claims", "A.table", "--format", "xml"],
])
def test_verify_usage_errors(lab_config, argv):
    assert main(argv, lab_config) == 3


# ----------------------------------------------------------
# scan
# ----------------------------------------------------------
def test_scan_holds(tmp_path, capsys, lab_config, petersen):
    path = write_graph6_file([complete_graph(4), prism_graph(), petersen], tmp_path / "c.g6")
    report = tmp_path / "scan.json"
    assert main(["scan", "--in", str(path), "--report", str(report)], lab_config) == 0
    assert '"holds": 3' in capsys.readouterr().out
    rows = json.loads(report.read_text(encoding="utf-8"))
    assert [row["verdict"] for row in rows] == ["holds"] * 3


def test_scan_violation_and_report(tmp_path, lab_config):
    path = write_graph6_file([path_graph(4)], tmp_path / "p4.g6")
    report = tmp_path / "scan.csv"
    argv = ["scan", "--in", str(path), "--any-degree", "--report", str(report), "--format", "csv"]
    assert main(argv, lab_config) == 1
    text = report.read_text(encoding="utf-8")
    assert text.startswith("line_number,graph6,n,gamma")
    assert "violated" in text


def test_scan_reed_conjecture(tmp_path, lab_config):
    path = write_graph6_file([path_graph(4)], tmp_path / "p4.g6")
    argv = ["scan", "--in", str(path), "--any-degree", "--conjecture", "reed",
            "--report", str(tmp_path / "p4.json")]
    assert main(argv, lab_config) == 0


def test_scan_missing_corpus(tmp_path, lab_config):
    argv = ["scan", "--in", str(tmp_path / "none.g6"), "--report", str(tmp_path / "r.json")]
    assert main(argv, lab_config) == 3


def test_scan_requires_report(capsys, lab_config, k4_file):
    assert main(["scan", "--in", str(k4_file)], lab_config) == 3
    assert "--report" in capsys.readouterr().err


def test_build_help_lists_base_graphs(capsys):
    with pytest.raises(SystemExit):
        build_parser().parse_args(["build", "--help"])
    assert "petersen" in capsys.readouterr().out

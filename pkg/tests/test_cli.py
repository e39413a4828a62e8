import doctest
import json
import subprocess
import sys

import pytest

import anchorhom.combinatorics
import anchorhom.smith
from anchorhom.cli import dumps, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, json.loads(out), out, err


def test_homology_main_case(capsys):
    code, rep, _, err = run(capsys, "homology", "--k", "3", "--n", "3", "--q", "1")
    assert code == 0
    assert rep["results"]["homology"]["betti"] == [1, 3, 29]
    assert rep["pass"] and all(c["pass"] for c in rep["checks"])
    assert "Z^29" in err


def test_homology_torus(capsys):
    code, rep, _, _ = run(capsys, "homology", "--k", "3", "--n", "2", "--q", "0")
    assert code == 0
    assert rep["results"]["homology"]["betti"] == [1, 2, 1]
    assert [c["name"] for c in rep["checks"]] == ["torus_betti", "torsion_free"]


def test_homology_proper_subset(capsys):
    code, rep, _, _ = run(capsys, "homology", "--k", "3", "--n", "2", "--q", "0", "--P", "1")
    assert code == 0
    assert rep["parameters"]["P"] == [1]
    assert rep["results"]["groups"] == ["0", "0", "Z^4"]
    assert {c["name"] for c in rep["checks"]} == {"concentrated_top", "top_rank"}


def test_homology_dump(capsys, tmp_path):
    path = tmp_path / "m.txt"
    code, _, _, _ = run(capsys, "homology", "--k", "2", "--n", "2", "--q", "1", "--dump-matrices", str(path))
    assert code == 0
    lines = path.read_text().splitlines()
    assert lines[0] == "dim 1: rows 4 cols 8"
    body = [tuple(map(int, ln.split())) for ln in lines[1:]]
    assert all(d == 1 and v in (1, -1) for d, _, _, v in body)
    assert len(body) == 16


def test_homology_errors(capsys):
    code, rep, _, _ = run(capsys, "homology", "--k", "1", "--n", "2", "--q", "0")
    assert code == 2 and rep["error"]["type"] == "invalid-parameter"
    code, rep, _, _ = run(capsys, "homology", "--k", "4", "--n", "5", "--q", "1", "--budget", "10")
    assert code == 2 and rep["error"]["type"] == "resource"


def test_euler_cycle_both(capsys):
    code, rep, _, _ = run(capsys, "euler", "--cycle", "3", "--n", "4", "--q", "3", "--method", "both")
    assert code == 0
    assert rep["results"]["formula"]["chi"] == rep["results"]["brute"]["chi"] == -36
    assert rep["checks"] == [{"name": "formula_equals_brute", "expected": -36, "actual": -36, "pass": True}]


def test_euler_graph_file(capsys, tmp_path):
    theta = tmp_path / "theta.json"
    theta.write_text(json.dumps({"vertices": 2, "edges": [[0, 1], [0, 1], [0, 1]], "anchors": [0, 1], "q": 1}))
    code, rep, _, _ = run(capsys, "euler", "--graph", str(theta), "--n", "2", "--q", "2", "--method", "both")
    assert code == 0
    assert rep["results"]["formula"]["chi"] == rep["results"]["brute"]["chi"] == 2
    assert rep["parameters"]["q"] == 2


def test_euler_tree_rejected(capsys, tmp_path):
    path3 = tmp_path / "path3.json"
    path3.write_text(json.dumps({"vertices": 3, "edges": [[0, 1], [1, 2]], "q": 1}))
    code, rep, _, err = run(capsys, "euler", "--graph", str(path3), "--n", "2")
    assert code == 2
    assert rep["error"]["hypothesis"] == "not a tree"
    assert "graph is a tree" in rep["error"]["message"] and "tree" in err


def test_euler_missing_file(capsys, tmp_path):
    code, rep, _, _ = run(capsys, "euler", "--graph", str(tmp_path / "nope.json"), "--n", "2", "--q", "1")
    assert code == 2 and rep["error"]["type"] == "io"


def test_euler_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("ANCHORHOM_BUDGET", "10")
    code, rep, _, _ = run(capsys, "euler", "--cycle", "3", "--n", "3", "--q", "1", "--method", "brute")
    assert code == 2 and rep["error"]["type"] == "resource"
    monkeypatch.setenv("ANCHORHOM_BUDGET", "1000")
    code, rep, _, _ = run(capsys, "euler", "--cycle", "3", "--n", "3", "--q", "1", "--method", "brute")
    assert code == 0 and rep["results"]["brute"]["chi"] == 27


def test_verify_small(capsys):
    code, rep, _, err = run(capsys, "verify", "--kmax", "2", "--nmax", "2")
    assert code == 0
    mains = [c for c in rep["results"]["cases"] if c["family"] == "main"]
    assert {"k": 2, "n": 2, "q": 2} in [c["params"] for c in mains]
    assert rep["results"]["summary"]["fail"] == 0
    assert "0 failed" in err


def test_verify_budget_skips(capsys):
    code, rep, _, _ = run(capsys, "verify", "--kmax", "3", "--nmax", "3", "--budget", "200")
    summary = rep["results"]["summary"]
    assert code == 0
    assert summary["skipped"] > 0 and summary["fail"] == 0


def test_verify_kmax3_nmax4(capsys):
    code, rep, _, _ = run(capsys, "verify", "--kmax", "3", "--nmax", "4")
    assert code == 0 and rep["wall_time"] < 60


def test_report_round_trip_and_determinism(capsys):
    argv = ("homology", "--k", "3", "--n", "3", "--q", "2")
    _, rep1, out1, _ = run(capsys, *argv)
    _, rep2, _, _ = run(capsys, *argv)
    assert dumps(json.loads(out1)) == out1
    rep1.pop("wall_time"), rep2.pop("wall_time")
    assert rep1 == rep2


def test_failed_check_exit_code(capsys, monkeypatch):
    import anchorhom.cli as cli

    monkeypatch.setattr(cli, "betti_closed_form", lambda k, n, q: [0])
    code, rep, _, _ = run(capsys, "homology", "--k", "3", "--n", "3", "--q", "1")
    assert code == 1 and not rep["pass"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "anchorhom", "euler", "--cycle", "2", "--n", "2", "--q", "2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["formula"]["chi"] == 2


@pytest.mark.parametrize("module", [anchorhom.combinatorics, anchorhom.smith])
def test_doctests(module):
    assert doctest.testmod(module).failed == 0

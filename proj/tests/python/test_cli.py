import json
import os
import subprocess

import pytest

CLI = os.environ.get("PERCOLOUR_CLI")

pytestmark = pytest.mark.skipif(CLI is None, reason="PERCOLOUR_CLI not set")


def run(*args, **kwargs):
    return subprocess.run([CLI, *args], capture_output=True, text=True, **kwargs)


def test_analyze_json_row():
    r = run("analyze", "cycle:6", "--t", "1..6", "--format", "json")
    assert r.returncode == 0
    report = json.loads(r.stdout)
    assert report["chi_o"] == 6
    assert [row["k"] for row in report["chi_t"]] == [1, 2, 3, 2, 1, 6]


def test_analyze_reads_edge_list_files(tmp_path):
    path = tmp_path / "triangle.edges"
    path.write_text("0 1\n1 2\n2 0\n")
    r = run("analyze", str(path))
    assert r.returncode == 0
    assert "chi_o: 3" in r.stdout


def test_colour_verify_roundtrip(tmp_path):
    witness = tmp_path / "witness.json"
    r = run("colour", "cycle:6", "--circular", "3", "--out", str(witness))
    assert r.returncode == 0
    r = run("verify", "cycle:6", str(witness))
    assert r.returncode == 0
    assert r.stdout.startswith("ok:")


def test_colour_infeasible_names_the_condition():
    r = run("colour", "cycle:5", "--circular", "3")
    assert r.returncode == 1
    assert "cycle of length 5" in r.stderr


def test_verify_detects_tampering(tmp_path):
    witness = tmp_path / "witness.json"
    run("colour", "cycle:6", "--circular", "3", "--out", str(witness))
    data = json.loads(witness.read_text())
    data["entries"][0][2] = (data["entries"][0][2] + 1) % 3
    witness.write_text(json.dumps(data))
    r = run("verify", "cycle:6", str(witness))
    assert r.returncode == 1
    assert "arc" in r.stdout


def test_verify_rejects_mismatched_witness(tmp_path):
    witness = tmp_path / "witness.json"
    run("colour", "cycle:6", "--circular", "3", "--out", str(witness))
    r = run("verify", "cycle:5", str(witness))
    assert r.returncode == 2


def test_periodic_colouring_output():
    r = run("colour", "petal:2x3", "--periodic", "3")
    assert r.returncode == 0
    witness = json.loads(r.stdout)
    assert witness["k"] == 2


def test_oracle_subcommand():
    r = run("oracle", "path:2")
    assert r.returncode == 0
    assert "oracle_chi_o: 4" in r.stdout
    r = run("oracle", "cycle:11")
    assert r.returncode == 3  # cap exceeded


def test_survey_deterministic():
    a = run("survey", "--family", "cycle:3..8", "--family", "petal:2x3", "--random", "10,7,9",
            "--seed", "3")
    b = run("survey", "--family", "cycle:3..8", "--family", "petal:2x3", "--random", "10,7,9",
            "--seed", "3")
    assert a.returncode == 0
    assert a.stdout == b.stdout
    assert "all predicates pass" in a.stdout


def test_dot_output():
    r = run("analyze", "cycle:4", "--format", "dot")
    assert r.returncode == 0
    assert r.stdout.startswith("digraph")


def test_input_errors_exit_2():
    r = run("analyze", "nope:3")
    assert r.returncode == 2
    r = run("analyze", "/does/not/exist.edges")
    assert r.returncode == 2

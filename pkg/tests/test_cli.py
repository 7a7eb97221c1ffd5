from __future__ import annotations

import json
import subprocess
import sys

import pytest

from asmlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count(capsys):
    assert run(capsys, "count", "--n", "3") == (0, "7\n", "")


def test_genfun_text_and_json(capsys):
    assert run(capsys, "genfun", "--n", "2")[1] == "rho*tau^2 + rho^2*tau\n"
    code, out, _ = run(capsys, "genfun", "--n", "1", "--format", "json")
    assert code == 0 and json.loads(out) == {"n": 1, "genfun": "rho*tau"}


def test_matrix_behrend(capsys):
    code, out, _ = run(capsys, "matrix", "--name", "BehrendT", "--n", "4")
    assert code == 0
    assert json.loads(out)["entries"] == [[1, 1, 1, 1], [0, 2, 3, 4], [2, 4, 9, 14], [4, 12, 24, 44]]


def test_matrix_symbolic_entries(capsys):
    code, out, _ = run(capsys, "matrix", "--name", "L", "--n", "2")
    entries = json.loads(out)["entries"]
    assert code == 0 and all(isinstance(x, (int, str)) for row in entries for x in row)
    code, out, _ = run(capsys, "matrix", "--name", "AignerAtI", "--n", "2")
    assert json.loads(out)["entries"] == [[1, "1 - I"], [0, 2]]


def test_matrix_errors(capsys):
    code, _, err = run(capsys, "matrix", "--name", "Bogus", "--n", "2")
    assert code == 2 and "unknown matrix name" in err
    code, _, err = run(capsys, "matrix", "--name", "Kcleared", "--n", "1")
    assert code == 2 and "n >= 2" in err


def test_partition(capsys):
    code, out, _ = run(capsys, "partition", "--n", "3", "--seed", "11")
    doc = json.loads(out)
    assert code == 0 and doc["agree"] and len(set(doc["Z"].values())) == 1
    assert run(capsys, "partition", "--n", "3", "--seed", "11")[1] == out


def test_verify_core_passes(capsys):
    code, out, err = run(capsys, "verify", "--suite", "core", "--max-n", "5", "--seed", "42")
    doc = json.loads(out)
    assert code == 0 and doc["pass"] and err == ""
    keys = [(r["check"], r["n"]) for r in doc["reports"]]
    assert keys == sorted(keys)
    assert "elapsedMs" not in doc["reports"][0]


def test_verify_is_byte_stable(capsys, monkeypatch):
    first = run(capsys, "verify", "--suite", "ik", "--max-n", "3", "--seed", "5")[1]
    monkeypatch.setenv("ASMLAB_THREADS", "3")
    assert run(capsys, "verify", "--suite", "ik", "--max-n", "3", "--seed", "5")[1] == first
    other = run(capsys, "verify", "--suite", "ik", "--max-n", "3", "--seed", "6")[1]
    assert other != first


def test_verify_timings_flag(capsys):
    out = run(capsys, "verify", "--suite", "lascoux", "--max-n", "2", "--timings")[1]
    assert all("elapsedMs" in r for r in json.loads(out)["reports"])


def test_verify_ceiling(capsys):
    code, _, err = run(capsys, "verify", "--suite", "core", "--max-n", "99")
    assert code == 2 and "ceiling" in err
    code, _, err = run(capsys, "verify", "--suite", "core", "--max-n", "10", "--deep")
    assert code == 2


def test_verify_failure_exit_code(capsys, monkeypatch):
    from asmlab import suites
    from asmlab.report import Report

    bad = suites.CheckDef("ik", 1, 4, lambda n, s, d: Report("ik", n, n != 2, None if n != 2 else "forced"))
    monkeypatch.setitem(suites.CHECKS, "ik", bad)
    code, out, err = run(capsys, "verify", "--suite", "ik", "--max-n", "3")
    assert code == 1
    assert json.loads(err) == {"check": "ik", "n": 2, "pass": False, "witness": "forced"}
    assert not json.loads(out)["pass"]


def test_conjecture_command(capsys):
    code, out, _ = run(capsys, "conjecture", "--max-n", "5")
    doc = json.loads(out)
    assert code == 0 and doc["pass"]
    by_n = {r["n"]: r for r in doc["reports"]}
    assert by_n[3]["details"]["B_polynomial"] == "2 + 2*rho + 2*rho^2 + z*rho"
    code, _, _ = run(capsys, "conjecture", "--max-n", "8")
    assert code == 2


@pytest.mark.parametrize("argv", [["count", "--n", "4"], ["genfun", "--n", "2"]])
def test_module_entry_point(argv):
    out = subprocess.run([sys.executable, "-m", "asmlab", *argv], capture_output=True, text=True, check=True)
    assert out.stdout.strip() in ("42", "rho*tau^2 + rho^2*tau")

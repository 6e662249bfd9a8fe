"""CLI surface: subcommands, JSON shapes, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

from todarpp.cli import run


def capture(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, out


def test_verify_macmahon(capsys):
    code, out = capture(capsys, ["verify", "--identity", "macmahon", "--r", "2", "--c", "2", "--n", "2"])
    assert code == 0
    data = json.loads(out)
    assert data["allEqual"] and data["records"][0]["equal"]


def test_verify_thm51_anchor(capsys):
    code, out = capture(capsys, ["verify", "--identity", "thm5.1", "--shape", "1", "--n", "1"])
    assert code == 0
    rec = json.loads(out)["records"][0]
    assert rec["lhs"] == rec["rhs"] == "(1 - x[-1]*x)/(1 - x)"


def test_verify_trials(capsys):
    code, out = capture(capsys, [
        "verify", "--identity", "thm4.3", "--shape", "2,1", "--n", "2",
        "--seed", "7", "--trials", "10",
    ])
    assert code == 0
    recs = json.loads(out)["records"]
    assert len(recs) == 10 and all(r["equal"] for r in recs)


@pytest.mark.parametrize("identity,extra", [
    ("thm3.2", ["--shape", "2,1", "--trials", "2"]),
    ("thm3.3", ["--shape", "2,1", "--n", "2", "--trials", "2"]),
    ("lemma3.2", ["--trials", "2"]),
    ("lemma4.2", ["--shape", "2,1", "--n", "1", "--trials", "2"]),
    ("gansner", ["--shape", "2", "--degree", "4"]),
    ("qspec", ["--shape", "2,1", "--n", "2"]),
    ("evolution", ["--trials", "1"]),
    ("bilinear", ["--trials", "1"]),
])
def test_verify_identities_pass(capsys, identity, extra):
    code, out = capture(capsys, ["verify", "--identity", identity, "--seed", "3"] + extra)
    assert code == 0
    assert json.loads(out)["allEqual"]


def test_enumerate_modes(capsys):
    code, out = capture(capsys, ["enumerate", "--shape", "1", "--n", "1", "--mode", "q"])
    assert code == 0
    recs = json.loads(out)["records"]
    assert recs == [
        {"pi": [[0]], "size": 0, "traces": [0], "weight": "1"},
        {"pi": [[1]], "size": 1, "traces": [1], "weight": "q"},
    ]
    code, out = capture(capsys, ["enumerate", "--shape", "2,1", "--n", "1", "--mode", "x"])
    assert json.loads(out)["count"] == 5
    code, out = capture(capsys, ["enumerate", "--shape", "2,1", "--n", "1", "--mode", "rational", "--seed", "5"])
    assert json.loads(out)["count"] == 5
    code, out = capture(capsys, ["enumerate", "--shape", "", "--n", "3"])
    assert json.loads(out)["count"] == 1


def test_genfun(capsys):
    code, out = capture(capsys, ["genfun", "--identity", "macmahon", "--r", "1", "--c", "1", "--n", "1"])
    assert json.loads(out)["value"] == "1 + q"
    code, out = capture(capsys, ["genfun", "--identity", "thm5.1", "--shape", "1", "--n", "2"])
    assert json.loads(out)["value"] == "(1 - x[-2]*x[-1]*x)/(1 - x)"
    code, out = capture(capsys, ["genfun", "--identity", "gansner", "--shape", "2", "--degree", "4"])
    value = json.loads(out)["value"]
    assert value.startswith("1 + x[1]")
    code, out = capture(capsys, ["genfun", "--identity", "qspec", "--shape", "2,1", "--n", "1"])
    assert json.loads(out)["identity"] == "qspec"


def test_bijection_command(capsys):
    code, out = capture(capsys, ["bijection", "--shape", "2,1", "--n", "2"])
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 14 and data["allEqual"]


def test_toda_check(capsys):
    code, out = capture(capsys, ["toda-check", "--seed", "2", "--trials", "1"])
    assert code == 0
    data = json.loads(out)
    kinds = {r["identity"] for r in data["records"]}
    assert {"bilinear", "evolution", "gauge"} <= kinds


def test_out_file(tmp_path, capsys):
    target = tmp_path / "o.json"
    code, _ = capture(capsys, ["genfun", "--identity", "macmahon", "--out", str(target), "--n", "1"])
    assert code == 0
    assert json.loads(target.read_text())["identity"] == "macmahon"


def test_usage_error_exit_2():
    proc = subprocess.run(
        [sys.executable, "-m", "todarpp.cli", "verify", "--identity", "nope"],
        capture_output=True,
    )
    assert proc.returncode == 2


def test_resample_exhaustion_exit_3(monkeypatch, capsys):
    monkeypatch.setenv("TODA_RPP_MAX_RESAMPLE", "0")
    code = run(["verify", "--identity", "thm4.3", "--shape", "1", "--n", "1", "--trials", "1"])
    capsys.readouterr()
    assert code == 3


def test_determinism_byte_identical():
    cmd = [
        sys.executable, "-m", "todarpp.cli", "verify", "--identity", "thm4.3",
        "--shape", "2,1", "--n", "2", "--seed", "42", "--trials", "5",
    ]
    a = subprocess.run(cmd, capture_output=True)
    b = subprocess.run(cmd, capture_output=True)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout

import json
import subprocess
import sys

import pytest

from fockbases.cli import main
from fockbases.suites import RECTIFICATION_GOLDENS
from fockbases.weights import Charge, IndexSet, is_reverse_restricted, tableau_from_columns


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--charge", "1,0", "--alpha", "0:1,1:1")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 3
    assert sum(r["standard"] for r in rows) == 2
    code, out, _ = run(capsys, "enumerate", "--charge", "5", "--alpha", "5:1", "--format", "csv")
    assert code == 0 and len(out.splitlines()) == 2


def test_enumerate_empty_block(capsys):
    code, out, _ = run(capsys, "enumerate", "--charge", "1,0", "--alpha", "7:1")
    assert code == 0 and json.loads(out) == []


@pytest.mark.parametrize("argv", [
    ["enumerate", "--charge", "0,1", "--alpha", "0:1"],
    ["enumerate", "--charge", "1,0", "--alpha", "0-1"],
    ["enumerate", "--charge", "1,0", "--min-index", "0", "--alpha=-1:1"],
    ["enumerate", "--charge", "1,0", "--min-index", "0", "--index-set", "Z", "--alpha", "0:1"],
    ["matrix", "d", "--charge", "1,0", "--alpha", "5:1"],
    ["kl", "1,2,2", "1,2,3"],
])
def test_config_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_matrix_outputs(capsys):
    code, out, _ = run(capsys, "matrix", "d", "--charge", "1,0", "--alpha", "0:1,1:1", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1:] == ['"((),(2,))",1,q,0', '"((1,),(1,))",0,1,q', '"((1,1),())",0,0,1']
    code, out, _ = run(capsys, "matrix", "decomp1", "--charge", "4", "--alpha", "4:1,5:1", "--format", "json")
    assert json.loads(out)["entries"] == [["1"]]
    code, out, _ = run(capsys, "matrix", "decomp1", "--charge", "1,0", "--alpha", "0:1,1:1", "--format", "latex")
    assert out.startswith("\\begin{tabular}")
    for which in ("p", "dtilde", "bar", "L", "T", "P"):
        code, out, _ = run(capsys, "matrix", which, "--charge", "1,0", "--alpha", "0:1,1:1", "--format", "json")
        assert code == 0 and len(json.loads(out)["entries"]) == 3


def test_crystal(capsys):
    code, out, _ = run(capsys, "crystal", "--charge", "1,0", "--depth", "0")
    assert code == 0 and out.count("label=") == 1
    code, out, _ = run(capsys, "crystal", "--charge", "1,0", "--depth", "2", "--format", "json")
    assert len(json.loads(out)["vertices"]) == 1 + 2 + 4


@pytest.mark.parametrize("src,dst", RECTIFICATION_GOLDENS)
def test_rectify(capsys, tmp_path, src, dst):
    charge = Charge((3, 2), IndexSet(1))
    a = tableau_from_columns(charge, src, 1)
    b = tableau_from_columns(charge, dst, 1)
    path = tmp_path / "a.json"
    path.write_text(json.dumps(a.to_json()))
    code, out, _ = run(capsys, "rectify", str(path), "--direction", "down")
    assert code == 0 and json.loads(out) == b.to_json()
    path.write_text(json.dumps(b.to_json()))
    code, out, _ = run(capsys, "rectify", str(path), "--direction", "up")
    assert json.loads(out) == a.to_json()
    if not is_reverse_restricted(b):
        code, _, _ = run(capsys, "rectify", str(path), "--direction", "down")
        assert code == 2


def test_kl(capsys):
    code, out, _ = run(capsys, "kl", "1,3,2,4", "3,4,1,2")
    assert code == 0 and out == "1+q\n"
    code, out, _ = run(capsys, "kl", "1,2,3", "2,1,3", "--r")
    assert out == "-1+q\n"


def test_verify_core_level_one(capsys):
    code, out, _ = run(capsys, "verify", "core", "--charge", "3", "--max-height", "4")
    assert code == 0 and json.loads(out)["passed"]


def test_verify_hecke_and_transpose(capsys):
    for suite in ("hecke", "transpose"):
        code, out, _ = run(capsys, "verify", suite, "--charge", "1,0", "--max-height", "3")
        assert code == 0, out


def test_verify_injected_fault(capsys, monkeypatch):
    import fockbases.suites as suites

    real = suites.check_rectification_goldens

    def broken():
        rep = real()
        return rep.fail("injected fault")

    monkeypatch.setattr(suites, "check_rectification_goldens", broken)
    code, out, _ = run(capsys, "verify", "core", "--charge", "3", "--max-height", "2")
    body = json.loads(out)
    assert code == 1 and not body["passed"]
    assert any(r["witness"] == "injected fault" for r in body["reports"])


def test_hecke_check(capsys):
    code, out, _ = run(capsys, "hecke-check", "--charge", "1,0", "--alpha", "0:1,1:1")
    assert code == 0 and json.loads(out)["passed"]
    code, out, _ = run(capsys, "hecke-check", "--charge", "1,0", "--dimension", "2")
    assert json.loads(out)["dimension"] == 8


def test_hecke_desk_bound_env(capsys, monkeypatch):
    monkeypatch.setenv("FOCKBASES_DESK_BOUND", "5")
    code, _, err = run(capsys, "hecke-check", "--charge", "1,0", "--alpha", "0:1,1:2")
    assert code == 2 and "desk" in err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "fockbases", "kl", "1,2", "2,1"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "1\n"
    res = subprocess.run([sys.executable, "-m", "fockbases", "--help"], capture_output=True, text=True)
    assert "FOCKBASES_KL_CACHE" in res.stdout and "FOCKBASES_DESK_BOUND" in res.stdout

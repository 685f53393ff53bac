import json
import subprocess
import sys

from edgerecon.cli import main


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen(capsys):
    code, out, _ = _run(capsys, "gen", "--n", "7")
    assert code == 0 and len(out.split()) == 11


def test_ern_spec(capsys):
    code, out, _ = _run(capsys, "ern", "--spec", "path:9")
    doc = json.loads(out)
    assert code == 0 and doc["ern"] == 3 and doc["witness"] is None
    code, out, _ = _run(capsys, "ern", "--spec", "cat:2,0^4,2")
    assert json.loads(out)["ern"] == 2


def test_ern_graph6(capsys):
    code, out, _ = _run(capsys, "ern", "--spec", "Ek_?")  # not a tree
    assert code == 2
    code, out, _ = _run(capsys, "ern", "--spec", "EkE?", "--blockers")
    doc = json.loads(out)
    assert doc["n"] == 6 and doc["ern"] in (2, 3)


def test_bad_spec(capsys):
    code, _, err = _run(capsys, "ern", "--spec", "tk:1")
    assert code == 2 and "error" in err


def test_census_and_report(capsys, tmp_path):
    code, out, _ = _run(capsys, "census", "--from", "5", "--to", "8", "--workers", "2",
                        "--processes", "1", "--out", str(tmp_path))
    assert code == 0 and json.loads(out)["ern3_total"] == 7
    code, out, _ = _run(capsys, "report", "--out", str(tmp_path), "--against", "catalog")
    assert code == 0 and json.loads(out)["empty_diff"]
    code, _, err = _run(capsys, "census", "--from", "5", "--to", "14", "--out", str(tmp_path))
    assert code == 2 and "extended" in err


def test_verify(capsys):
    code, out, _ = _run(capsys, "verify", "--suite", "molina", "--max-n", "5")
    assert code == 0 and json.loads(out)["passed"]
    code, _, _ = _run(capsys, "verify", "--suite", "molina", "--max-n", "9")
    assert code == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "edgerecon", "gen", "--n", "5"],
                         capture_output=True, text=True, check=True)
    assert len(res.stdout.split()) == 3

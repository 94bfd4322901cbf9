import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from edgecode.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_params(capsys):
    code, out, _ = run(capsys, "params", "--q", "3", "--family", "path", "--n", "4")
    assert code == 0
    assert json.loads(out) == {"length": 16, "dimension": 3}


def test_mindist(capsys):
    code, out, _ = run(capsys, "mindist", "--q", "3", "--family", "cycle", "--n", "5")
    data = json.loads(out)
    assert code == 0 and data["distance"] == 16 and data["search_space"] == 121


def test_mindist_full_enumeration(capsys):
    code, out, _ = run(capsys, "mindist", "--q", "3", "--family", "path", "--n", "4", "--full-enumeration")
    assert json.loads(out)["search_space"] == 26


def test_weights(capsys):
    code, out, _ = run(capsys, "weights", "--q", "3", "--family", "path", "--n", "4")
    data = json.loads(out)
    assert code == 0 and data["minimum_distance"] == 8
    assert sum(data["distribution"].values()) == 27


def test_gen_interval(capsys):
    code, out, _ = run(capsys, "gen", "--family", "interval", "--n", "3", "--d1", "2", "--d2", "1")
    assert code == 0 and len(json.loads(out)["edges"]) == 6


def test_export_csv_golden(capsys):
    code, out, _ = run(capsys, "export", "--q", "3", "--hypergraph", str(GOLDEN / "p4.json"),
                       "--format", "csv")
    assert code == 0 and out == (GOLDEN / "p4_q3.csv").read_text()


def test_export_to_file(tmp_path, capsys):
    dest = tmp_path / "g.json"
    code, out, _ = run(capsys, "export", "--q", "4", "--family", "path", "--n", "4", "--out", str(dest))
    assert code == 0 and out == ""
    assert json.loads(dest.read_text()) == json.loads((GOLDEN / "p4_q4.json").read_text())


def test_gram(capsys):
    code, out, _ = run(capsys, "gram", "--q", "4", "--family", "path", "--n", "4")
    assert json.loads(out)["self_orthogonal"] is True
    code, out, _ = run(capsys, "gram", "--q", "3", "--family", "path", "--n", "4")
    assert json.loads(out)["self_orthogonal"] is False


def test_verify_pass_and_fail(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "table1", "--q", "3")
    assert code == 0 and json.loads(out)["summary"]["pass"] == 4
    code, out, _ = run(capsys, "verify", "--suite", "table1", "--q", "3", "4")
    assert code == 0 and [r["q"] for r in json.loads(out)] == [3, 4]


def test_verify_mismatch_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "table3", "--q", "3")
    data = json.loads(out)
    assert code == 1
    assert data["summary"] == {"pass": 20, "fail": 1, "not_covered": 0}


def test_usage_errors(capsys):
    code, _, err = run(capsys, "params", "--q", "3", "--family", "path", "--n", "4", "--bogus")
    assert code == 2 and "usage" in err
    code, _, err = run(capsys, "params", "--q", "6", "--family", "path", "--n", "4")
    assert code == 2 and json.loads(err)["error"] == "NotAPrimePower"
    code, _, err = run(capsys, "params", "--q", "2", "--family", "path", "--n", "4")
    assert code == 2 and json.loads(err)["error"] == "DegenerateField"
    code, _, err = run(capsys, "params", "--q", "3", "--family", "path")
    assert code == 2
    code, _, err = run(capsys, "params", "--q", "3", "--hypergraph", "/nonexistent.json")
    assert code == 2


def test_bad_hypergraph_file(tmp_path, capsys):
    f = tmp_path / "h.json"
    f.write_text('{"vertices":3,"edges":[[1,2],[2,1]]}')
    code, _, err = run(capsys, "params", "--q", "3", "--hypergraph", str(f))
    assert code == 2 and json.loads(err)["error"] == "ParseError"


def test_resource_limits(capsys):
    code, _, err = run(capsys, "mindist", "--q", "3", "--family", "path", "--n", "4", "--max-messages", "5")
    assert code == 3 and json.loads(err)["error"] == "SearchTooLarge"
    code, _, err = run(capsys, "params", "--q", "5", "--family", "path", "--n", "8", "--max-points", "100")
    assert code == 3 and json.loads(err)["error"] == "TooLarge"


def test_env_max_messages(capsys, monkeypatch):
    monkeypatch.setenv("EDGECODE_MAX_MESSAGES", "5")
    code, _, _ = run(capsys, "mindist", "--q", "3", "--family", "path", "--n", "4")
    assert code == 3
    monkeypatch.setenv("EDGECODE_MAX_MESSAGES", "lots")
    code, _, _ = run(capsys, "mindist", "--q", "3", "--family", "path", "--n", "4")
    assert code == 2


def _cli(*argv, env=None):
    full_env = dict(os.environ, **(env or {}))
    return subprocess.run([sys.executable, "-m", "edgecode", *argv], capture_output=True, text=True,
                          env=full_env, check=False)


@pytest.mark.slow
def test_byte_identical_across_runs_workers_and_backends():
    argv = ["weights", "--q", "4", "--family", "cycle", "--n", "5"]
    ref = _cli(*argv)
    assert ref.returncode == 0
    again = _cli(*argv, "--workers", "4")
    numpy_only = _cli(*argv, env={"EDGECODE_DISABLE_NUMBA": "1"})
    assert again.stdout == ref.stdout == numpy_only.stdout

    exp = ["export", "--q", "9", "--family", "complete", "--n", "3"]
    assert _cli(*exp).stdout == _cli(*exp).stdout


def test_module_entry_point():
    r = _cli("params", "--q", "3", "--family", "path", "--n", "4")
    assert r.returncode == 0 and json.loads(r.stdout) == {"length": 16, "dimension": 3}


def test_disable_numba_flag():
    code = "from edgecode import _kernels; print(_kernels.BACKEND, _kernels.HAVE_NUMBA)"
    r = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                       env=dict(os.environ, EDGECODE_DISABLE_NUMBA="1"), check=True)
    assert r.stdout.split() == ["numpy", "False"]

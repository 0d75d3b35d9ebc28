import json
import subprocess
import sys

import pytest

from gaudin.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_b2_length_four(capsys):
    code, out, _ = call(capsys, "solve", "--family", "B", "--rank", "2", "--lambda", "1,1", "--length", "4")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "gaudin/1"
    y1, y2 = doc["solutions"][0]["y"]
    assert y1["coefficients"] == ["1/4", "-11/10", "1"]
    assert y2["coefficients"] == ["3/8", "-6/5", "1"]


def test_solve_not_admissible(capsys):
    code, out, err = call(capsys, "solve", "--family", "B", "--rank", "2", "--lambda", "1,1", "--length", "3")
    assert code == 1
    assert "not admissible" in err and out == ""


def test_decompose_trivial(capsys):
    code, out, _ = call(capsys, "decompose", "--family", "B", "--rank", "2", "--lambda", "0,0")
    assert code == 0
    doc = json.loads(out)
    assert doc["summands"] == [{"mu": ["1", "0"], "label": {"length": 0, "bar": False}, "dim": 5}]


@pytest.mark.parametrize("argv", [
    ["solve", "--family", "B", "--rank", "2", "--lambda", "1,x"],
    ["solve", "--family", "E", "--rank", "2", "--lambda", "1,1"],
    ["solve", "--family", "B", "--rank", "2", "--lambda", "1,1,1"],
    ["solve", "--family", "B", "--rank", "2", "--lambda", "-1,1"],
    ["solve", "--family", "B", "--rank", "1", "--lambda", "1"],
    ["solve", "--family", "B", "--rank", "2", "--lambda", "1,1", "--length", "2bar"],
    ["frobnicate"],
    [],
])
def test_usage_errors(capsys, argv):
    code, out, err = call(capsys, *argv)
    assert code == 2 and err


def test_bar_label_in_json(capsys):
    code, out, _ = call(capsys, "solve", "--family", "D", "--rank", "4", "--lambda", "0,0,1,1", "--length", "3bar")
    assert code == 0
    assert json.loads(out)["solutions"][0]["label"] == {"length": 3, "bar": True}


def test_output_is_byte_stable(capsys):
    argv = ["verify", "--family", "C", "--rank", "3", "--lambda", "1,2,1", "--path"]
    _, a, _ = call(capsys, *argv)
    _, b, _ = call(capsys, *argv)
    assert a == b and json.loads(a)["ok"]


def test_table_format(capsys):
    code, out, _ = call(capsys, "decompose", "--family", "B", "--rank", "2", "--lambda", "1,1", "--format", "table")
    assert code == 0
    assert "summands:" in out and "(0, 3)" in out


def test_out_file(capsys, tmp_path):
    path = tmp_path / "chains.json"
    code, out, _ = call(capsys, "chains", "--family", "B", "--rank", "2", "--lambda", "1,0", "--n-points", "1",
                        "--out", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["count"] == 3


def test_spectrum_and_diffop(capsys):
    code, out, _ = call(capsys, "spectrum", "--family", "B", "--rank", "2", "--lambda", "2,0")
    doc = json.loads(out)
    assert code == 0 and doc["ok"] and sorted(v["eigenvalue"] for v in doc["vectors"]) == ["-4", "10", "2"]
    code, out, _ = call(capsys, "diffop", "--family", "B", "--rank", "2", "--lambda", "1,1", "--length", "1")
    doc = json.loads(out)
    assert code == 0 and doc["identity"]["holds"] and doc["identity"]["exponents"] == ["2", "0"]
    assert doc["operator"]["order"] == 4 and doc["polynomial_kernel_dim"] == 4
    code, out, _ = call(capsys, "diffop", "--family", "B", "--rank", "2", "--lambda", "1,1", "--length", "2")
    assert code == 0 and json.loads(out)["identity"]["checked"] is False
    code, _, err = call(capsys, "diffop", "--family", "D", "--rank", "4", "--lambda", "0,0,0,0", "--length", "0")
    assert code == 1 and "UnsupportedType" in err


def test_deform_command(capsys):
    code, out, _ = call(capsys, "deform", "--family", "B", "--rank", "2", "--lambda", "0,0", "--n-points", "2",
                        "--z", "1,3")
    doc = json.loads(out)
    assert code == 0 and doc["ok"] and doc["gram_rank"] == doc["chain_count"] == 3
    code, _, _ = call(capsys, "deform", "--family", "B", "--rank", "2", "--lambda", "0,0", "--n-points", "2",
                      "--z", "1,1")
    assert code == 1


def test_sweep_small_grid(capsys, tmp_path):
    cfg = tmp_path / "grid.json"
    cfg.write_text(json.dumps({"grids": [{"family": "C", "ranks": [3], "lambda_max": 1}]}))
    code, out, _ = call(capsys, "sweep", str(cfg))
    doc = json.loads(out)
    assert code == 0 and doc["ok"] and doc["cells"] > 0


def test_sweep_corrupted_formula_is_reported(capsys, tmp_path):
    cfg = tmp_path / "bad.json"
    cfg.write_text(json.dumps({"grids": [{"family": "B", "ranks": [2], "lambda_max": 1}], "corrupt": True}))
    code, out, _ = call(capsys, "sweep", str(cfg))
    doc = json.loads(out)
    assert code == 1 and not doc["ok"]
    assert any("Wronskian criticality" in f for cell in doc["failures"] for f in cell["failures"])


def test_sweep_empty_grid_warns(capsys, tmp_path):
    cfg = tmp_path / "empty.json"
    cfg.write_text(json.dumps({"grids": []}))
    code, out, err = call(capsys, "sweep", str(cfg))
    assert code == 0 and json.loads(out)["cells"] == 0 and "warning" in err


@pytest.mark.parametrize("text", ["{not json", "[]", json.dumps({"grid": []}),
                                  json.dumps({"grids": [{"family": "B"}]}), json.dumps({"checks": ["nope"]})])
def test_sweep_bad_configs(capsys, tmp_path, text):
    cfg = tmp_path / "c.json"
    cfg.write_text(text)
    code, _, err = call(capsys, "sweep", str(cfg))
    assert code == 2 and err


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gaudin.cli", "decompose", "--family", "C", "--rank", "3",
                           "--lambda", "0,0,0"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["command"] == "decompose"

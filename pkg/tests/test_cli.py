import io
import json
import subprocess
import sys

import pytest

from finite_triples import catalog
from finite_triples.cli import run


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), buf)
    return code, buf.getvalue()


def report(*argv):
    code, text = call(*argv)
    return code, json.loads(text)


def test_check_cs3():
    code, rep = report("check", "catalog:cs3_minimal")
    assert code == 0 and rep["passed"]
    assert set(rep) == {"command", "input_digest", "tolerance", "passed", "results"}


def test_kform_determinant():
    code, rep = report("kform", "catalog:cs3_minimal")
    assert code == 0
    assert rep["results"]["determinant"] == -1
    assert rep["results"]["matrix"] == [list(r) for r in catalog.CS3_Q]


def test_output_is_deterministic():
    argv = ("forms", "catalog:cs3_minimal", "--dirac", "5", "--seed", "3")
    assert call(*argv)[1] == call(*argv)[1]


def test_triple_file_matches_catalog(tmp_path):
    path = tmp_path / "cs3.json"
    path.write_text(json.dumps(catalog.dump("cs3_minimal")))
    code, rep = report("kform", str(path))
    assert code == 0 and rep["results"]["determinant"] == -1


def test_digest_depends_on_input(tmp_path):
    _, a = report("kform", "catalog:cs3_minimal")
    _, b = report("kform", "catalog:s3_fn_bicov2")
    assert a["input_digest"] != b["input_digest"]


def test_malformed_json_exits_2(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert call("check", str(path))[0] == 2
    assert call("check", str(tmp_path / "missing.json"))[0] == 2
    assert call("check", "catalog:unknown")[0] == 2


def test_bad_descriptor_exits_2(tmp_path):
    path = tmp_path / "t.json"
    path.write_text(json.dumps({"algebra": {"base": "C", "summands": [{"n": 1, "field": "C"}]}, "q": [[1, 2]]}))
    assert call("check", str(path))[0] == 2


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        run(["frobnicate"], io.StringIO())
    assert exc.value.code == 2


def test_dirac_shape_and_sample():
    code, rep = report("dirac", "shape", "catalog:cs3_minimal")
    assert code == 0
    code, rep = report("dirac", "sample", "catalog:cs3_minimal", "--seed", "4")
    assert code == 0


def test_hopf_commands():
    assert report("hopf", "haar", "catalog:cs3_minimal")[0] == 0
    code, rep = report("hopf", "bicov", "catalog:s3_fn_bicov2")
    assert code == 0
    assert report("hopf", "nogo", "catalog:cs3_minimal")[1]["results"]["verdict"] == "incompatible"


def test_weight_file(tmp_path):
    path = tmp_path / "w.json"
    path.write_text(json.dumps({"weights": [1 / 3, 1 / 18, 1 / 12]}))
    code, rep = report("forms", "catalog:cs3_minimal", "--weight", str(path))
    assert code == 0
    assert rep["results"]["xi_norm_weighted"] > 0
    path.write_text(json.dumps({"weights": [1.0]}))
    assert call("forms", "catalog:cs3_minimal", "--weight", str(path))[0] == 2


def test_catalog_commands():
    code, rep = report("catalog", "list")
    assert code == 0
    code, text = call("catalog", "dump", "cs3_minimal", "--text")
    assert code == 0 and "q:" in text


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "finite_triples", "catalog", "list"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "cs3_minimal" in proc.stdout

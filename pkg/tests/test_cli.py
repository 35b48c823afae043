import json

import pytest

from addext.cli import run


def call(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_make_then_check_code(capsys, monkeypatch, tmp_path):
    code, out, _ = call(capsys, "make", "rs", "--n", "3", "--kl", "2")
    assert code == 0
    code, out, _ = call(capsys, "check-code", "--json", stdin=out, monkeypatch=monkeypatch)
    info = json.loads(out)
    assert code == 0
    assert info["k"] == 4 and info["d"] == 2 and info["mds"] and info["l_linear"]
    assert info["column_dims"] == [2, 2, 2]


def test_extend_example_maps(capsys, tmp_path):
    path = tmp_path / "ce.json"
    assert call(capsys, "make", "counterexample", "--out", str(path))[0] == 0
    code, out, _ = call(capsys, "extend", "--map", str(path))
    assert code == 1
    assert "extends=false" in out and "brute force: none" in out
    code, out, _ = call(capsys, "extend", "--map", str(path), "--json")
    info = json.loads(out)
    assert info["covering"]["t"] == 3 and info["U_dims"] == [0, 2, 2]

    path1 = tmp_path / "ex1.json"
    call(capsys, "make", "example1", "--out", str(path1))
    code, out, _ = call(capsys, "extend", "--map", str(path1))
    assert code == 0 and "extends=true" in out and "brute force: found" in out
    code, out, _ = call(capsys, "check-map", "--map", str(path1))
    assert code == 0 and "isometry (weight check): True" in out


def test_identity_map(capsys, tmp_path):
    path = tmp_path / "rs.json"
    call(capsys, "make", "rs", "--n", "3", "--kl", "1", "--out", str(path))
    idp = tmp_path / "id.json"
    assert call(capsys, "make", "identity", "--code", str(path), "--out", str(idp))[0] == 0
    code, out, _ = call(capsys, "extend", "--map", str(idp), "--json")
    assert code == 0 and json.loads(out)["extends"] is True


def test_sigma(capsys):
    code, out, _ = call(capsys, "sigma", "--m", "3")
    assert code == 0 and out.splitlines()[0] == "5"
    code, out, _ = call(capsys, "sigma", "--p", "3", "--m", "2", "--json")
    assert json.loads(out)["sigma"] == json.loads(out)["bound"] == 4


def test_verify_and_scan(capsys):
    code, out, _ = call(capsys, "verify", "--theorem", "prop3", "--n", "3", "--kl", "1", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["verdict"] == "pass" and rep["cases_checked"] == 216
    code2, out2, _ = call(capsys, "verify", "--theorem", "prop3", "--n", "3", "--kl", "1", "--json")
    assert out2 == out
    code, out, _ = call(capsys, "scan-threshold", "--k", "2", "--n-max", "3")
    assert code == 0 and "n=3:" in out and "n=2: 0 nontrivial" in out


def test_error_exit_codes(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{\"field\": ")
    code, _, err = call(capsys, "check-code", "--code", str(bad))
    assert code == 2 and "line 1" in err
    bad.write_text(json.dumps({"field": {"p": 2, "k_poly": [0, 1], "l_poly": [1, 1, 1]}, "n": 2,
                               "generators": [[1, "x"]]}))
    code, _, err = call(capsys, "check-code", "--code", str(bad))
    assert code == 2 and "generators[0][1]" in err
    assert call(capsys, "frobnicate")[0] == 2
    assert call(capsys, "verify", "--theorem", "prop3", "--n", "3", "--kl", "1", "--budget", "5")[0] == 3
    assert call(capsys, "verify", "--theorem", "prop1", "--n", "3")[0] == 2


def test_non_isometry_extend(capsys, tmp_path):
    m = {"code": {"field": {"p": 2, "k_poly": [0, 1], "l_poly": [1, 1, 1]}, "n": 2, "generators": [[1, 1]]},
         "images": [[1, 0]]}
    path = tmp_path / "m.json"
    path.write_text(json.dumps(m))
    assert call(capsys, "check-map", "--map", str(path))[0] == 1
    code, out, _ = call(capsys, "extend", "--map", str(path))
    assert code == 1 and "not an isometry" in out

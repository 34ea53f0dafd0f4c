import json

import pytest

from cubicontact.cli import main
from cubicontact.cubic import dumps_tensor, loads_tensor
from cubicontact.catalog import catalog_get


@pytest.fixture()
def x3_file(tmp_path):
    path = tmp_path / "x3.json"
    path.write_text(dumps_tensor(catalog_get("x3").tensor()) + "\n")
    return path


def test_check_ok(x3_file, capsys):
    assert main(["check", str(x3_file)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["p"] == 1 and out["dim_xc"] == 5 and out["assumption_ok"]


def test_check_assumption_failure(tmp_path, capsys):
    path = tmp_path / "zero.json"
    path.write_text('{"dim": 2, "entries": []}')
    assert main(["check", str(path)]) == 1


def test_check_malformed(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{nope")
    assert main(["check", str(path)]) == 2
    assert main(["check", str(tmp_path / "missing.json")]) == 2


def test_verify_all_x3(x3_file, tmp_path):
    out = tmp_path / "out"
    code = main(
        [
            "verify", str(x3_file), "--which", "all", "--samples", "10",
            "--seed", "3", "--out", str(out),
        ]
    )
    assert code == 0
    reports = list(out.glob("verify-*.json"))
    assert len(reports) == 1
    body = json.loads(reports[0].read_text())
    names = {c["name"] for c in body["checks"]}
    assert names == {"jacobi", "group", "expdiff", "contact", "tau", "moment"}
    assert all(c["status"] == "pass" for c in body["checks"])


def test_verify_refuses_geometry_without_assumption(tmp_path):
    path = tmp_path / "zero.json"
    path.write_text('{"dim": 1, "entries": []}')
    code = main(["verify", str(path), "--which", "contact", "--out", str(tmp_path)])
    assert code == 1


def test_verify_jacobi_runs_regardless(tmp_path, capsys):
    path = tmp_path / "zero.json"
    path.write_text('{"dim": 1, "entries": []}')
    code = main(["verify", str(path), "--which", "jacobi", "--samples", "5",
                 "--out", str(tmp_path)])
    assert code == 0


def test_verify_byte_identical_reports(x3_file, tmp_path):
    out1 = tmp_path / "a"
    out2 = tmp_path / "b"
    args = ["verify", str(x3_file), "--which", "all", "--samples", "8", "--seed", "11"]
    assert main(args + ["--out", str(out1)]) == 0
    assert main(args + ["--out", str(out2)]) == 0
    f1 = next(out1.glob("*.json")).read_bytes()
    f2 = next(out2.glob("*.json")).read_bytes()
    assert f1 == f2


def test_verify_md_format(x3_file, tmp_path):
    code = main(
        ["verify", str(x3_file), "--which", "jacobi", "--format", "md",
         "--out", str(tmp_path)]
    )
    assert code == 0
    body = next(tmp_path.glob("verify-*.md")).read_text()
    assert body.startswith("# verification report")


def test_extract_g2_writes_normalized_x3(tmp_path):
    code = main(["extract", "--type", "G2", "--compare", "x3", "--out", str(tmp_path)])
    assert code == 0
    T = loads_tensor((tmp_path / "extracted-G2.json").read_text())
    assert T == catalog_get("x3").tensor()
    report = json.loads((tmp_path / "extract-report-G2.json").read_text())
    assert report["comparison"]["consistent"]
    assert report["gradings"]["p"] == 1


def test_extract_type_a_rejected(tmp_path, capsys):
    assert main(["extract", "--type", "A3", "--out", str(tmp_path)]) == 1
    err = capsys.readouterr().err
    assert "2 simple roots" in err


def test_extract_type_c_rejected(tmp_path):
    assert main(["extract", "--type", "C3", "--out", str(tmp_path)]) == 1


def test_catalog_list_and_emit(tmp_path, capsys):
    assert main(["catalog", "list"]) == 0
    out = capsys.readouterr().out
    assert "j3o-norm" in out and "pfaff6" in out
    assert main(["catalog", "emit", "fermat3", "--out", str(tmp_path)]) == 0
    T = loads_tensor((tmp_path / "catalog-fermat3.json").read_text())
    assert T.dim == 3
    assert main(["catalog", "emit", "nope", "--out", str(tmp_path)]) == 2


def test_out_env_variable(tmp_path, monkeypatch):
    target = tmp_path / "env-out"
    monkeypatch.setenv("CUBICONTACT_OUT", str(target))
    code = main(["catalog", "emit", "x3"])
    assert code == 0
    T = loads_tensor((target / "catalog-x3.json").read_text())
    assert T.dim == 1


def test_stdout_when_no_out(monkeypatch, capsys):
    monkeypatch.delenv("CUBICONTACT_OUT", raising=False)
    assert main(["catalog", "emit", "x3"]) == 0
    assert '"dim":1' in capsys.readouterr().out

import json
import math
import subprocess
import sys

import pytest

from hypergamma.cli import main, parse_n_range


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_n_range():
    assert parse_n_range("2..5") == [2, 3, 4, 5]
    assert parse_n_range("3,7") == [3, 7]
    with pytest.raises(ValueError):
        parse_n_range("0..3")
    with pytest.raises(ValueError):
        parse_n_range("65")


def test_constants_all_methods(capsys):
    code, out, _ = run(capsys, "constants", "--n", "2..8", "--method", "all", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["values"]) == 21
    assert all(r["abs_residual"] < 1e-11 for r in doc["results"])


def test_constants_single(capsys):
    code, out, _ = run(capsys, "constants", "--n", "2", "--method", "beta", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and len(doc["values"]) == 1
    assert doc["values"][0]["value"] == pytest.approx(math.pi, abs=1e-15)


def test_constants_csv_header(capsys):
    code, out, _ = run(capsys, "constants", "--n", "4", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "n,method,value,achieved_tol"


def test_gamma_routes(capsys):
    code, out, _ = run(capsys, "gamma", "--arg", "1/4", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["results"][0]["abs_residual"] <= 1e-10 * 3.7
    code, out, _ = run(capsys, "gamma", "--arg", "1/2", "--routes", "reference,closed", "--format", "json")
    vals = [v["value"] for v in json.loads(out)["values"]]
    assert vals == pytest.approx([math.sqrt(math.pi)] * 2, abs=1e-15)
    code, out, _ = run(capsys, "gamma", "--arg", "3/4", "--routes", "reflection,closed", "--format", "json")
    assert code == 0 and len(json.loads(out)["results"]) == 2


def test_gamma_without_closed_form(capsys):
    code, out, _ = run(capsys, "gamma", "--arg", "2/7", "--format", "json")
    assert code == 0
    assert json.loads(out)["values"][1]["value"] == "unavailable"


def test_trig_examples(capsys):
    code, out, _ = run(capsys, "trig", "--family", "s", "--k", "2", "--n", "4", "--inverse", "--y", "1.3110287", "--format", "json")
    assert code == 0
    assert json.loads(out)["values"][0]["value"] == pytest.approx(1.0, abs=1e-12)
    code, out, _ = run(capsys, "trig", "--family", "arcs", "--k", "2", "--n", "2", "--x", "0.5", "--format", "json")
    assert json.loads(out)["values"][0]["value"] == pytest.approx(math.pi / 6, abs=1e-15)
    code, out, _ = run(capsys, "trig", "--family", "arch", "--k", "2", "--n", "2", "--x", "2", "--format", "json")
    assert json.loads(out)["values"][0]["value"] == pytest.approx(math.log(2 + math.sqrt(3)), abs=1e-15)


def test_exit_code_pass(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "classical", "--tol", "1e-10")
    assert code == 0
    assert "0 failed" in out


def test_exit_code_fail(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "trig", "--tol", "1e-30", "--format", "json")
    assert code == 1
    assert json.loads(out)["summary"]["fail"] > 0


def test_exit_code_error(capsys, monkeypatch):
    monkeypatch.setenv("HYPERGAMMA_MAX_LEVELS", "1")
    code, _, err = run(capsys, "verify", "--suite", "constants")
    assert code == 2
    assert "did not converge" in err


def test_exit_code_bad_input(capsys):
    code, _, err = run(capsys, "gamma", "--arg", "0.25")
    assert code == 2 and "decimal" in err
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nope"])
    assert exc.value.code == 2


def test_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "applications", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["schema_version"] == 1
    assert set(doc) == {"schema_version", "meta", "values", "results", "summary"}
    rec = doc["results"][0]
    assert {"name", "lhs", "rhs", "abs_residual", "rel_residual", "pass"} <= set(rec)
    names = [r["name"] for r in doc["results"]]
    assert names == sorted(names)
    s = doc["summary"]
    assert s["total"] == len(doc["results"]) == s["pass"] + s["fail"]
    assert s["pass"] == sum(r["pass"] for r in doc["results"])


def test_complex_values_serialize(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "trig", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    rot = [r for r in doc["results"] if r["name"].startswith("rotation[")]
    assert len(rot) == 80
    assert set(rot[0]["lhs"]) == {"re", "im"}


def test_csv_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "constants", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "name,kind,lhs,rhs,abs_residual,rel_residual,pass"
    assert all(line.endswith(",true") for line in lines[1:])


def test_output_file_and_determinism(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify", "--suite", "gamma", "--seed", "7", "--format", "json", "--output", str(a)]) == 0
    assert main(["verify", "--suite", "gamma", "--seed", "7", "--format", "json", "--output", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert capsys.readouterr().out == ""


def test_seed_changes_sample_points(capsys):
    _, one, _ = run(capsys, "verify", "--suite", "trig", "--seed", "1", "--format", "json")
    _, two, _ = run(capsys, "verify", "--suite", "trig", "--seed", "2", "--format", "json")
    assert one != two


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hypergamma", "constants", "--n", "2", "--method", "quadrature", "--format", "csv"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1].startswith("2,quadrature,3.14159265358979")

import json

from click.testing import CliRunner

from rotacybe import io
from rotacybe.cli import main


def run(*args):
    return CliRunner().invoke(main, [str(a) for a in args])


def test_catalog_list():
    res = run("catalog", "list")
    assert res.exit_code == 0
    assert "sl2" in res.output and "malcev7" in res.output


def test_algebra_check_catalog():
    assert run("algebra", "check", "catalog:sl2").exit_code == 0
    res = run("algebra", "check", "catalog:malcev7")
    assert res.exit_code == 1
    assert "FAIL  jacobi" in res.output and "PASS  malcev" in res.output
    assert run("algebra", "check", "catalog:malcev7", "--malcev", "--simple").exit_code == 0


def test_rb_derive_prints_images():
    res = run("rb", "derive", "catalog:sl2", "example1", "--form", "killing", "--param", "alpha=1/2")
    assert res.exit_code == 0
    assert "R(h) = 4*x + 2*h" in res.output
    assert "weight: -4" in res.output


def test_rb_verify_explicit_weight(tmp_path):
    out = tmp_path / "r.json"
    run("rb", "derive", "catalog:sl2", "example1", "--form", "killing", "--param", "alpha=0", "-o", out)
    assert run("rb", "verify", "catalog:sl2", out, "--weight", "-4").exit_code == 0
    assert run("rb", "verify", "catalog:sl2", out, "--weight", "1").exit_code == 1


def test_double_build_and_reload(tmp_path):
    out, report = tmp_path / "d.json", tmp_path / "rep.json"
    res = run("double", "build", "catalog:sl2", "example1", "--param", "alpha=1/2", "-o", out, "--report", report)
    assert res.exit_code == 0, res.output
    data = json.loads(report.read_text())
    assert all(c["pass"] for c in data["checks"])
    assert len(data["decomposition"]["ideal1"]) == 3
    double = io.load_algebra(out)
    assert double.dim == 6
    res = run("algebra", "check", out, "--jacobi", "--anticommutative")
    assert res.exit_code == 0


def test_double_build_refuses_example2():
    res = run("double", "build", "catalog:sl2", "example2")
    assert res.exit_code == 1 and "FAIL" in res.output


def test_invariance_check_example2_fails():
    assert run("invariance", "check", "catalog:sl2", "example2").exit_code == 1


def test_catalog_golden_sl2():
    for name in ("sl2-example1", "sl2-example2"):
        res = run("catalog", "golden", name)
        assert res.exit_code == 0, res.output


def test_input_errors_exit_2(tmp_path):
    assert run("cybe", "check", "catalog:nope", "example1").exit_code == 2
    assert run("cybe", "check", "catalog:sl2", "example1").exit_code == 2  # alpha unbound
    assert run("cybe", "check", "catalog:sl2", "example1", "--param", "alpha").exit_code == 2
    assert run("cybe", "check", "catalog:sl2", tmp_path / "missing.json").exit_code == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{\n  \"name\": \n")
    res = run("algebra", "check", bad)
    assert res.exit_code == 2
    assert "bad.json:3" in res.output


def test_json_output():
    res = run("cybe", "check", "catalog:sl2", "example2", "--json")
    data = json.loads(res.output)
    assert data["command"] == "cybe check" and data["checks"][0]["pass"]

import json
import subprocess
import sys

import pytest

from statesum.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_invariant_lens(capsys):
    code, out, _ = run(capsys, "invariant", "--builtin", "lens(3,1)", "--hopf", "ZmodGroupAlgebra(3)")
    assert code == 0 and out.strip() == "kuperberg: 3"


def test_invariant_s3(capsys):
    code, out, _ = run(capsys, "invariant", "--builtin", "s3_genus0", "--hopf", "S3GroupAlgebra", "--json")
    assert code == 0 and json.loads(out)["results"]["value"] == "1"


def test_invariant_both(capsys):
    code, out, _ = run(capsys, "invariant", "--builtin", "l31_connsum_s2xs1", "--hopf", "ZmodGroupAlgebra(2)",
                       "--method", "both", "--json")
    rep = json.loads(out)
    assert code == 0
    assert rep["results"]["kuperberg"] == rep["results"]["planar"] == "2"
    assert rep["results"]["agree"] is True


def test_json_is_deterministic(capsys):
    args = ("invariant", "--builtin", "lens(5,2)", "--hopf", "Dual(S3GroupAlgebra)", "--method", "both", "--json")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
    args = ("check", "duality", "--graph", "random", "--hopf", "ZmodGroupAlgebra(2)", "--seed", "5", "--json")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_decimal_flag(capsys):
    code, out, _ = run(capsys, "invariant", "--builtin", "lens(2,1)", "--hopf", "S3GroupAlgebra", "--decimal")
    assert code == 0 and "approx: 4 (decimal rendering)" in out


def test_diagram_file(tmp_path, capsys):
    from statesum.heegaard import builtin, builtin_planar
    p = tmp_path / "code.json"
    p.write_text(json.dumps(builtin("lens(4,1)").to_json()))
    code, out, _ = run(capsys, "invariant", "--diagram", str(p), "--hopf", "ZmodGroupAlgebra(2)")
    assert code == 0 and out.strip() == "kuperberg: 2"
    q = tmp_path / "planar.json"
    q.write_text(json.dumps(builtin_planar("l31_connsum_s2xs1").to_json()))
    code, out, _ = run(capsys, "invariant", "--diagram", str(q), "--hopf", "ZmodGroupAlgebra(3)", "--method", "both")
    assert code == 0 and "planar: 9" in out
    # the planar method needs a planar diagram
    code, _, err = run(capsys, "invariant", "--diagram", str(p), "--hopf", "ZmodGroupAlgebra(2)", "--method", "planar")
    assert code == 2 and "planar" in err


def test_hopf_file(tmp_path, capsys):
    from statesum.hopf import builtin_hopf
    p = tmp_path / "h.json"
    p.write_text(json.dumps(builtin_hopf("ZmodGroupAlgebra(3)").to_json()))
    code, out, _ = run(capsys, "invariant", "--builtin", "lens(3,1)", "--hopf", str(p))
    assert code == 0 and out.strip() == "kuperberg: 3"


@pytest.mark.parametrize("argv", [
    ("invariant", "--builtin", "lens(4,2)", "--hopf", "S3GroupAlgebra"),
    ("invariant", "--builtin", "nonsense", "--hopf", "S3GroupAlgebra"),
    ("invariant", "--builtin", "lens(3,1)", "--hopf", "NoSuchAlgebra"),
    ("invariant", "--builtin", "lens(3,1)", "--hopf", "ZmodGroupAlgebra(2)", "--ring", "F2"),
    ("invariant", "--hopf", "S3GroupAlgebra"),
    ("bogus",),
])
def test_input_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_resource_cap(capsys, monkeypatch):
    monkeypatch.setenv("STATESUM_MAX_ENTRIES", "4")
    assert run(capsys, "invariant", "--builtin", "lens(3,1)", "--hopf", "S3GroupAlgebra")[0] == 3


def test_mismatch_exit(capsys, monkeypatch):
    from statesum import heegaard
    monkeypatch.setitem(heegaard.ARRIVAL_SIGN, "-", 1)
    monkeypatch.setattr("statesum.planar.planar_invariant", lambda phd, H, cap=None: -1)
    code, out, _ = run(capsys, "invariant", "--builtin", "lens(3,1)", "--hopf", "ZmodGroupAlgebra(3)",
                       "--method", "both")
    assert code == 4 and "agree: NO" in out


@pytest.mark.parametrize("argv", [
    ("check", "identities", "--hopf", "ZmodGroupAlgebra(4)"),
    ("check", "duality", "--graph", "figure6", "--hopf", "ZmodGroupAlgebra(2)"),
    ("check", "duality", "--graph", "ngon(3)", "--hopf", "S3GroupAlgebra"),
    ("check", "oracle", "--builtin", "lens(5,2)", "--group", "S3"),
    ("check", "moves", "--builtin", "l31_connsum_s2xs1", "--hopf", "Dual(S3GroupAlgebra)"),
    ("check", "hopf-axioms", "--hopf", "Q8GroupAlgebra"),
])
def test_checks_pass(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0, out
    assert "FAIL" not in out


def test_oracle_report(capsys):
    code, out, _ = run(capsys, "check", "oracle", "--builtin", "lens(5,2)", "--group", "S3", "--json")
    rep = json.loads(out)["results"][0]
    assert rep["invariant"] == str(rep["hom_count"]) == "1"


def test_jobs_same_result(capsys):
    args = ["check", "oracle", "--builtin", "lens(4,1)", "--json"]
    _, serial, _ = run(capsys, *args)
    _, parallel, _ = run(capsys, *(args + ["--jobs", "2"]))
    assert serial == parallel


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "statesum", "invariant", "--builtin", "s2xs1", "--hopf",
                        "S3GroupAlgebra"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "kuperberg: 6"

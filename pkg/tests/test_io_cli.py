import json
import subprocess
import sys

import pytest

from hermilat import io, linalg as la
from hermilat.cli import main
from hermilat.field import make_field
from hermilat.lattice import find_isomorphism, pentagon
from hermilat.space import make_space, span
from hermilat.subspace_lattice import lattice_of_space
from hermilat.suite import VerificationReport, run_suite

GF3_I2 = {"field": {"p": 3, "k": 1, "modulus": [0, 1], "involution": "identity"}, "dim": 2, "gram": [[1, 0], [0, 1]]}
GF2_I4 = {"field": {"p": 2}, "dim": 4, "gram": [list(r) for r in la.identity(4)]}


@pytest.fixture
def spec(tmp_path):
    def write(obj, name="spec.json"):
        p = tmp_path / name
        p.write_text(json.dumps(obj))
        return str(p)
    return write


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_space_json_roundtrip():
    V = io.load_space(GF3_I2)
    assert V.to_json() == GF3_I2
    U = span(V.field, [(1, 2)], 2)
    assert io.load_subspace(V, U.to_json()) == U


def test_lattice_json_roundtrip():
    L = lattice_of_space(make_space(make_field(2), ((0, 1), (1, 0))))
    obj = json.loads(io.dumps(L.to_json()))
    M = io.load_lattice(obj)
    assert (M.leq == L.leq).all() and (M.prime == L.prime).all() and M.labels == L.labels
    assert find_isomorphism(M, L) is not None


def test_load_lattice_rejects_wrong_bounds():
    obj = pentagon().to_json()
    obj["zero"] = 3
    with pytest.raises(io.SpecError):
        io.load_lattice(obj)


def test_dot_export():
    L = pentagon()
    dot = io.lattice_to_dot(L)
    assert dot.startswith("digraph lattice {")
    assert dot.count("style=dashed") == 5
    assert dot.count("arrowhead=none") == len(L.covers())


def test_hom_json():
    L = pentagon()
    from hermilat.lattice import LatticeHom, product

    phi = LatticeHom(L, L, list(range(5)))
    back = io.lattice_hom_from_json(io.lattice_hom_to_json(phi), L, L)
    assert back.mapping == phi.mapping
    P = product([L, L])
    proj = io.lattice_hom_from_json(io.projection_hom_json(1), P, L, factors=[L, L])
    assert proj.mapping[:5] == [0, 1, 2, 3, 4]
    with pytest.raises(io.SpecError):
        io.lattice_hom_from_json(io.projection_hom_json(0), P, L)


def test_cli_space_check(spec, capsys):
    code, out, _ = run(["space", "check", "--spec", spec(GF3_I2)], capsys)
    rep = json.loads(out)
    assert code == 0
    c = rep["classification"]
    assert c["nondegenerate"] and c["epsilon"] == 1 and c["hermitian"] and c["anisotropic"]


def test_cli_space_check_fails_on_degenerate(spec, capsys):
    obj = dict(GF3_I2, gram=[[1, 0], [0, 0]])
    code, _, err = run(["space", "check", "--spec", spec(obj)], capsys)
    assert code == 1 and err.startswith("check-failed")


def test_cli_lattice_build_67(spec, tmp_path, capsys):
    out, dot = tmp_path / "l.json", tmp_path / "l.dot"
    code, _, _ = run(["lattice", "build", "--spec", spec(GF2_I4), "--out", str(out), "--dot", str(dot)], capsys)
    assert code == 0
    obj = json.loads(out.read_text())
    assert len(obj["elements"]) == 67
    assert dot.read_text().count("->") > 67
    code, out2, _ = run(["lattice", "verify", "--spec", str(out), "--laws", "polarity-cml"], capsys)
    assert code == 0 and all(v["passed"] for v in json.loads(out2)["laws"].values())


def test_cli_lattice_verify_failure(spec, capsys):
    code, out, err = run(["lattice", "verify", "--spec", spec(pentagon().to_json()), "--laws", "modular"], capsys)
    assert code == 1
    assert json.loads(out)["laws"]["modular"]["witness"] == [3, 2, 1]
    assert "witness" in err


def test_cli_sampled_mode_prints_seed(spec, capsys):
    code, out, err = run(["lattice", "verify", "--spec", spec(GF2_I4), "--laws", "arguesian", "--seed", "5"], capsys)
    assert code == 0 and "seed=5" in err and json.loads(out)["seed"] == 5


def test_cli_ring_build(spec, capsys):
    code, out, _ = run(["ring", "build", "--spec", spec(GF3_I2)], capsys)
    rep = json.loads(out)["regularity"]
    assert code == 0 and rep["star_regular"] and rep["has_rank1_projection"]


def test_cli_invalid_inputs(spec, tmp_path, capsys):
    code, _, err = run(["space", "check", "--spec", str(tmp_path / "missing.json")], capsys)
    assert code == 2 and err.count("\n") == 1
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(["space", "check", "--spec", str(bad)], capsys)
    assert code == 2 and "invalid JSON" in err
    code, _, err = run(["space", "check", "--spec", spec({"field": {"p": 4}, "gram": [[1]]})], capsys)
    assert code == 2 and "NonPrime" in err
    code, _, _ = run(["space", "frobnicate"], capsys)
    assert code == 2


def test_cli_caps(spec, capsys, monkeypatch):
    big = {"field": {"p": 2}, "gram": [list(r) for r in la.identity(9)]}
    monkeypatch.delenv("HERMILAT_CAP_OVERRIDE", raising=False)
    code, _, err = run(["space", "check", "--spec", spec(big)], capsys)
    assert code == 2 and err.startswith("cap-error")
    code, _, _ = run(["field", "info", "--p", "2", "--k", "17"], capsys)
    assert code == 2


def test_cli_field_info(capsys):
    code, out, _ = run(["field", "info", "--p", "3", "--k", "2", "--involution", "frobenius_half"], capsys)
    info = json.loads(out)
    assert code == 0 and info["q"] == 9 and info["fixed_points"] == 3 and info["involution_ok"]


def test_cli_enumerate(capsys):
    code, out, _ = run(["enumerate", "--p", "2", "--dim", "2"], capsys)
    grams = [json.loads(line)["gram"] for line in out.splitlines()]
    assert code == 0 and grams == [[[0, 1], [1, 0]], [[0, 1], [1, 1]], [[1, 0], [0, 1]], [[1, 1], [1, 0]]]
    code, out1, err = run(["enumerate", "--p", "3", "--dim", "3", "--mode", "sample", "--seed", "4", "--count", "3"],
                          capsys)
    _, out2, _ = run(["enumerate", "--p", "3", "--dim", "3", "--mode", "sample", "--seed", "4", "--count", "3"],
                     capsys)
    assert code == 0 and "seed=4" in err and out1 == out2 and len(out1.splitlines()) == 3


def test_cli_explore(spec, capsys):
    obj = {"field": {"p": 2}, "gram": [[0, 1], [1, 0]]}
    code, out, _ = run(["explore", "polarity-subalgebras", "--spec", spec(obj), "--budget", "1000"], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["counterexample"] is None and rep["exhausted"]


def test_cli_outputs_are_byte_identical(spec, tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    path = spec(GF3_I2)
    run(["lattice", "build", "--spec", path, "--out", str(a)], capsys)
    run(["lattice", "build", "--spec", path, "--out", str(b)], capsys)
    assert a.read_bytes() == b.read_bytes()


def test_verify_suite_on_given_grid(spec, tmp_path, capsys):
    grid = {"spaces": [GF3_I2, {"field": {"p": 2}, "gram": [[0, 1], [1, 0]]}]}
    out = tmp_path / "report.json"
    code, _, err = run(["verify", "suite", "--spec", spec(grid), "--out", str(out)], capsys)
    rep = json.loads(out.read_text())
    assert code == 0 and rep["passed"] and "seed=0" in err
    assert [r["id"] for r in rep["records"]] == sorted(r["id"] for r in rep["records"])
    assert "seconds" not in rep["records"][0]
    again = VerificationReport.from_json(rep).to_json()
    assert again == rep


def test_report_without_reconstruction_cases_fails():
    # a grid with only anisotropic planes never exercises the alternate case
    from hermilat.suite import GridEntry
    grid = [GridEntry("gf3", io.load_space(GF3_I2), "given")]
    rep = run_suite(grid, only={"AC10"})
    assert rep.records[0].status == "fail"


def test_console_script_entry_point():
    res = subprocess.run([sys.executable, "-m", "hermilat.cli", "field", "info", "--p", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["q"] == 2

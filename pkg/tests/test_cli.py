import json
import shutil
import subprocess
import sys

import pytest

from orbitlef.cli import EXIT_BUDGET, EXIT_FAIL, EXIT_OK, EXIT_USAGE, build_parser, main, resolve_settings
from orbitlef.fixtures import default_data_dir
from orbitlef.polyalg import Ideal
from orbitlef.topology_hodge import HodgeDiamond


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def canonical(text):
    return json.dumps(json.loads(text), indent=2, sort_keys=True) + "\n"


@pytest.fixture(autouse=True)
def no_env_budget(monkeypatch):
    monkeypatch.delenv("ORBITLEF_BUDGET_SECS", raising=False)


def test_fibration_text(capsys):
    code, out, _ = run(capsys, "fibration", "--H", "1,-1,0", "--H0", "2,-1,-1")
    assert code == EXIT_OK
    assert "k = 3" in out and "holds" in out


def test_fibration_json(capsys):
    code, out, _ = run(capsys, "fibration", "--H", "1,-1,0", "--H0", "2,-1,-1", "--json")
    assert code == EXIT_OK and canonical(out) == out
    data = json.loads(out)
    assert sorted(p["value"] for p in data["critical_points"]) == ["-3", "0", "3"]
    assert [p["hessian_rank"] for p in data["critical_points"]] == [4, 4, 4]


def test_fibration_regular_case_reports_violation(capsys):
    code, out, _ = run(capsys, "fibration", "--H", "1,-1,0", "--H0", "1,-1,0", "--json")
    data = json.loads(out)
    assert data["distinct_condition"] is False and data["shared_values"] == ["1", "-1"]


def test_diamond_product(capsys):
    code, out, _ = run(capsys, "diamond", "--product", "P2,P2")
    assert code == EXIT_OK
    assert out.splitlines()[4].split() == ["0", "0", "3", "0", "0"]
    assert "Euler characteristic: 9" in out
    code2, out2, _ = run(capsys, "diamond", "--product", "P1xP2")
    assert code2 == EXIT_OK and out2.splitlines()[0].strip() == "1"


def test_diamond_json_round_trip(capsys):
    code, out, _ = run(capsys, "diamond", "--fixture", "regular_fiber_closure_I", "--json")
    assert code == EXIT_OK
    assert HodgeDiamond.from_json(out).dumps() == out
    assert out == (default_data_dir() / "diamonds" / "regular_fiber_closure_I.json").read_text()


def test_diamond_compare(capsys):
    code, out, _ = run(capsys, "diamond", "--compare", "regular_fiber_closure_I", "regular_fiber_closure_J", "--json")
    assert code == EXIT_OK and canonical(out) == out
    data = json.loads(out)
    assert [d["cell"] for d in data["differing"]] == [[1, 4], [4, 1]]
    assert data["uncheckable"] == [[2, 3], [3, 2]]


def test_caveat(capsys):
    code, out, _ = run(capsys, "caveat", "--n", "2", "--json")
    assert code == EXIT_OK and canonical(out) == out
    data = json.loads(out)
    assert data["degenerate"] and data["witness_gradient_zero"]
    code, out, _ = run(capsys, "caveat", "--n", "1")
    assert code == EXIT_OK and "NoConeWitness" in out


def test_fiber_betti(capsys):
    code, out, _ = run(capsys, "fiber-betti", "--H0", "1,-1,0", "--H", "1,-1,0", "--json")
    data = json.loads(out)
    assert data["regular_fiber_betti"] == [1, 0, 2, 0, 2, 5, 0]
    assert "inapplicable" in data["singular_middle_betti"]
    code, out, _ = run(capsys, "fiber-betti", "--H0", "2,-1,-1", "--H", "1,-1,0", "--json")
    assert json.loads(out)["singular_middle_betti"] == 1


def test_ideal_and_groebner(capsys, tmp_path):
    path = tmp_path / "fibre.ideal"
    code, _, _ = run(capsys, "ideal", "--H0", "1,-1,0", "--presentation", "det", "--fiber", "0", "--compactify", "--out", str(path))
    assert code == EXIT_OK
    I = Ideal.read(path)
    assert I.ring.names[-1] == "t" and I.is_homogeneous() and len(I.gens) == 3
    code, out, _ = run(capsys, "groebner", str(path), "--json")
    assert code == EXIT_OK and canonical(out) == out
    assert json.loads(out)["basis"] == [str(g) for g in I.groebner().polys]


def test_ideal_flags_singular_fibre(capsys):
    code, out, _ = run(capsys, "ideal", "--H0", "2,-1,-1", "--H", "1,-1,0", "--fiber", "3", "--json")
    assert json.loads(out)["singular_fiber"] is True


def test_usage_errors(capsys):
    assert run(capsys, "nonsense")[0] == EXIT_USAGE
    assert run(capsys, "fibration", "--H", "1,-1,0")[0] == EXIT_USAGE
    assert run(capsys, "fibration", "--H", "1,1", "--H0", "1,-1")[0] == EXIT_USAGE
    assert run(capsys, "fibration", "--H", "1,-1,0", "--H0", "1,-1,0", "--bogus")[0] == EXIT_USAGE
    assert run(capsys, "fibration", "--H", "2,-1,-1", "--H0", "1,-1,0")[0] == EXIT_USAGE  # H not regular


def test_budget_exceeded_exit_code(capsys):
    path = default_data_dir() / "ideals" / "regular_fiber_I_hom.ideal"
    code, out, err = run(capsys, "groebner", str(path), "--budget", "0")
    assert code == EXIT_BUDGET
    assert json.loads(out)["partial"] is True and "budget exceeded" in err


def test_settings_precedence(tmp_path, monkeypatch):
    cfg = tmp_path / "orbitlef.conf"
    cfg.write_text("# settings\nbudget_secs = 5\nterm_order = lex\n")
    parser = build_parser()
    s = resolve_settings(parser.parse_args(["groebner", "f", "--config", str(cfg)]))
    assert (s.budget, s.term_order) == (5.0, "lex")
    s = resolve_settings(parser.parse_args(["groebner", "f", "--config", str(cfg), "--budget", "7", "--order", "deglex"]))
    assert (s.budget, s.term_order) == (7.0, "deglex")
    monkeypatch.setenv("ORBITLEF_BUDGET_SECS", "9")
    s = resolve_settings(parser.parse_args(["groebner", "f", "--config", str(cfg), "--budget", "7"]))
    assert s.budget == 9.0


def test_env_budget_reaches_computation(capsys, monkeypatch, tmp_path):
    path = default_data_dir() / "ideals" / "regular_fiber_I_hom.ideal"
    monkeypatch.setenv("ORBITLEF_BUDGET_SECS", "0")
    assert run(capsys, "groebner", str(path), "--budget", "600")[0] == EXIT_BUDGET
    monkeypatch.delenv("ORBITLEF_BUDGET_SECS")
    cfg = tmp_path / "c.conf"
    cfg.write_text("budget_secs = 0\n")
    assert run(capsys, "groebner", str(path), "--config", str(cfg))[0] == EXIT_BUDGET
    assert run(capsys, "groebner", str(path), "--config", str(cfg), "--budget", "600")[0] == EXIT_OK


def test_verify_command_passes(capsys):
    code, out, _ = run(capsys, "verify-paper")
    assert code == EXIT_OK
    assert "10/10 checks passed" in out


def corrupt_copy(tmp_path, rel, old, new):
    data = tmp_path / "data"
    shutil.copytree(default_data_dir(), data)
    target = data / rel
    text = target.read_text()
    assert old in text
    target.write_text(text.replace(old, new, 1))
    return data


@pytest.mark.parametrize(
    "rel,old,new,failing",
    [
        ("diamonds/regular_fiber_closure_I.json", "16", "15", "7 "),
        ("expected.json", '"orbit_dim_c": 4', '"orbit_dim_c": 5', "3 "),
        ("ideals/regular_fiber_J.ideal", "x1 - x2", "x1 - 2*x2", "5 "),
        ("diamonds/minuscule_orbit_closure.json", "3", "4", "7 "),
    ],
)
def test_verify_command_detects_corruption(capsys, tmp_path, rel, old, new, failing):
    data = corrupt_copy(tmp_path, rel, old, new)
    code, out, _ = run(capsys, "verify-paper", "--data-dir", str(data), "--json")
    assert code == EXIT_FAIL
    results = json.loads(out)["results"]
    assert any(not r["passed"] and r["name"].startswith(failing) for r in results)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "orbitlef", "caveat", "--n", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and "degenerate critical point: True" in proc.stdout

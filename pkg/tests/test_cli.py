import io
import json
import subprocess
import sys

import pytest

from ineqsimplex.cli import main
from ineqsimplex.formats import emit_json, emit_text, parse_text
from ineqsimplex.model import corpus, make_lp


def run(argv, capsys=None):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name in ("example_3_1", "example_3_2_lp", "klee_minty_4"):
        p = tmp_path / f"{name}.txt"
        p.write_text(emit_text(corpus(name)))
        paths[name] = str(p)
    km = corpus("klee_minty_4")
    ext = km.system.with_row([8, 4, 2, 1], 700, first=True)
    p = tmp_path / "km_700.txt"
    p.write_text(emit_text(ext))
    paths["km_700"] = str(p)
    p = tmp_path / "unbounded.json"
    p.write_text(emit_json(make_lp([-1], [], [], 1)))
    paths["unbounded"] = str(p)
    return paths


def test_solve_feasible(files):
    code, out = run(["solve", files["example_3_1"]])
    assert code == 0
    assert "x = (0, 1, 0)" in out and "pivots = 3" in out


def test_solve_infeasible(files):
    code, out = run(["solve", files["km_700"]])
    assert code == 1
    assert "farkas y = (1/8, 0, 0, 0, 1/8)" in out


def test_solve_infeasible_json(files):
    code, out = run(["solve", files["km_700"], "--json"])
    rec = json.loads(out)
    assert code == 1 and rec["verdict"] == "infeasible" and rec["farkas_y"][0] == "1/8"


def test_solve_trace(files):
    code, out = run(["solve", files["example_3_1"], "--trace"])
    assert code == 0
    assert out.count("pivot ") == 3 and "initial tableau" in out


def test_solve_trace_decimal(tmp_path):
    p = tmp_path / "ex32.txt"
    p.write_text(emit_text(corpus("example_3_2_system")))
    code, out = run(["solve", str(p), "--trace", "--style", "decimal", "--comma"])
    assert code == 0 and "0,148" in out


def test_solve_missing_file():
    assert run(["solve", "/nonexistent/file.txt"])[0] == 64


def test_solve_parse_error(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("vars 2\nrow 1 >= 2\n")
    assert run(["solve", str(p)])[0] == 65


def test_solve_limit(files):
    assert run(["solve", files["example_3_1"], "--max-pivots", "1"])[0] == 2


def test_solve_stdin(monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO(emit_text(corpus("example_3_1"))))
    code, out = run(["solve", "-"])
    assert code == 0 and "x = (0, 1, 0)" in out


def test_thresholds(files):
    code, out = run(["thresholds", files["klee_minty_4"], "--t", "500,600,700"])
    lines = out.splitlines()
    assert lines[0] == "t=500 feasible x = (5, 5, 65/2, 375) pivots=4"
    assert lines[1] == "t=600 feasible x = (25/8, 0, 0, 575) pivots=3"
    assert lines[2] == "t=700 contradictory pivots=1"
    assert lines[-1] == "total pivots = 8"
    assert code == 1


def test_thresholds_trivial(tmp_path):
    p = tmp_path / "lp.txt"
    p.write_text("vars 2\nmin 1 2\nrow -1 0 >= -3\n")
    code, out = run(["thresholds", str(p), "--t", "0"])
    assert code == 0 and out.splitlines()[0] == "t=0 feasible x = (0, 0) pivots=0"


def test_thresholds_usage_errors(files):
    assert run(["thresholds", files["klee_minty_4"], "--t", "700,600"])[0] == 64
    assert run(["thresholds", files["example_3_1"], "--t", "1"])[0] == 64


def test_optimize_primal_dual(files):
    code, out = run(["optimize", files["klee_minty_4"], "--mode", "primal-dual"])
    assert code == 0 and "z = -625" in out
    code, out = run(["optimize", files["example_3_2_lp"], "--mode", "primal-dual"])
    assert code == 0 and "z = 18" in out and "y = (0, 0, 1)" in out


def test_optimize_threshold(files):
    code, out = run(["optimize", files["klee_minty_4"], "--eps", "1"])
    assert code == 0
    assert "best x = (0, 0, 0, 625)" in out and "z_upper = -625" in out


def test_optimize_unbounded(files):
    code, out = run(["optimize", files["unbounded"], "--mode", "primal-dual"])
    assert code == 2 and "unbounded" in out
    code, out = run(["optimize", files["unbounded"]])
    assert code == 2 and "unbounded" in out


def test_gen_klee_minty(tmp_path):
    p = tmp_path / "km.txt"
    assert run(["gen", "klee-minty", "--dim", "4", "-o", str(p)])[0] == 0
    assert parse_text(p.read_text()) == corpus("klee_minty_4")
    assert run(["gen", "klee-minty", "--dim", "0"])[0] == 64


def test_gen_random_deterministic():
    a = run(["gen", "random", "--vars", "2", "--cons", "2", "--seed", "7"])
    b = run(["gen", "random", "--vars", "2", "--cons", "2", "--seed", "7"])
    assert a == b and a[0] == 0
    assert run(["gen", "random", "--vars", "2"])[0] == 64


def test_check(files):
    assert run(["check", files["example_3_1"], "--x", "0,1,0"])[0] == 0
    code, out = run(["check", files["example_3_1"], "--x", "0,0,0"])
    assert code == 1 and "row 1" in out and "row 2" in out
    assert run(["check", files["km_700"], "--farkas", "1/8,0,0,0,1/8"])[0] == 0
    assert run(["check", files["example_3_1"], "--x", "0,1"])[0] == 64
    assert run(["check", files["example_3_1"]])[0] == 64


def test_bench(tmp_path, capsys):
    code, out = run(["bench", "--count", "0"])
    assert code == 0 and out == "instance,seed,n,m,verdict,pivots\n"
    code, out = run(["bench", "--corpus"])
    assert [line.split(",")[-1] for line in out.splitlines()[1:4]] == ["3", "3", "8"]
    a = run(["bench", "--count", "30", "--seed", "42"])
    b = run(["bench", "--count", "30", "--seed", "42"])
    assert a == b
    assert "fraction_pivots_le_m=" in capsys.readouterr().err
    assert run(["bench", "--vars", "0"])[0] == 64


def test_usage_error_exit_code():
    assert run(["frobnicate"])[0] == 64
    assert run([])[0] == 64


def test_module_entry_point_is_byte_identical(files):
    cmd = [sys.executable, "-m", "ineqsimplex", "thresholds", files["klee_minty_4"], "--t", "500,600,700"]
    a = subprocess.run(cmd, capture_output=True)
    b = subprocess.run(cmd, capture_output=True)
    assert a.returncode == b.returncode == 1
    assert a.stdout == b.stdout and a.stdout

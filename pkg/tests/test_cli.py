import io
import json
import subprocess
import sys

import pytest

from coloredjones.cli import UsageError, render_poly, run_command
from coloredjones.colored import report_from_json
from coloredjones.config import WIDTH_CAP_ENV, EngineConfig
from coloredjones.diagram import diagram_from_json, parse_pd
from coloredjones.laurent import LaurentPoly, parse_poly


def run(*argv, config=None):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), config=config, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_det():
    assert run("det", "3_1")[:2] == (0, "3\n")
    code, out, _ = run("det", "4_1", "--format", "json")
    assert code == 0 and json.loads(out) == {"knot": "4_1", "determinant": 5}


def test_zeta3_value():
    assert run("colored-jones", "3_1", "--color", "2", "--eval", "zeta3")[:2] == (0, "1\n")


def test_minus_one_json():
    code, out, _ = run("--format", "json", "colored-jones", "unknot", "--color", "3", "--eval", "minus-one")
    assert code == 0
    assert json.loads(out)["value"] == -1 and json.loads(out)["squared_modulus"] == 1


def test_verify_thm2_json():
    code, out, _ = run("verify", "thm2", "--knots", "3_1,4_1", "--max-color", "6", "--format", "json",
                       "--width-cap", "24", "--jobs", "1")
    assert code == 0
    reports = [report_from_json(obj) for obj in json.loads(out)]
    assert [r.knot for r in reports] == ["3_1", "4_1"]
    assert all(r.passed for r in reports)
    assert [r.computed for r in reports[0].rows] == [1, 1, 0, -1, -1, 0]
    assert [r.to_json() for r in reports] == json.loads(out)


def test_verify_failure_exit_code():
    code, out, _ = run("verify", "thm1", "--knots", "3_1", "--max-color", "4", "--jobs", "1")
    assert code == 1
    assert out.splitlines()[-2] == "thm1 3_1 N=4 computed=36 expected=9 FAIL"
    assert out.splitlines()[-1] == "thm1 3_1 FAIL"


def test_jones_variables():
    code, out, _ = run("jones", "3_1")
    assert code == 0 and LaurentPoly({4: 1, 12: 1, 16: -1}) == parse_poly(out.strip())
    code, out, _ = run("jones", "3_1", "--variable", "q")
    assert code == 0 and out == "-1*q^-4 + 1*q^-3 + 1*q^-1\n"
    code, out, _ = run("jones", "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)")
    assert code == 0


def test_q_rendering_rejects_links():
    code, _, err = run("jones", "X(4,1,3,2) X(2,3,1,4)", "--variable", "q")
    assert code == 2 and "multiples of 4" in err
    with pytest.raises(UsageError):
        render_poly(LaurentPoly({2: 1}), "q")


def test_colored_polynomial_json():
    code, out, _ = run("colored-jones", "4_1", "--color", "3", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["color"] == 3 and len(obj["terms"]) == 2


def test_cable_output():
    code, out, _ = run("cable", "3_1", "--n", "2")
    assert code == 0 and parse_pd(out).num_crossings == 18
    code, out, _ = run("cable", "3_1", "--n", "2", "--blackboard", "--format", "json")
    assert code == 0 and diagram_from_json(out).num_crossings == 12


def test_an():
    assert run("an", "600")[:2] == (0, "1\n")
    assert run("an", "4")[:2] == (0, "-1\n")


def test_table():
    code, out, _ = run("table")
    assert code == 0 and len(out.splitlines()) >= 8
    assert out.splitlines()[1].split("\t")[:3] == ["3_1", "3", "3"]
    code, out, _ = run("table", "validate", "--format", "json")
    assert code == 0 and len(json.loads(out)) >= 8


@pytest.mark.parametrize("argv", [
    ["det", "9_42"],
    ["det", "X(1,2,3,4)"],
    ["colored-jones", "3_1", "--color", "0"],
    ["colored-jones", "X(4,1,3,2) X(2,3,1,4)", "--color", "2"],
    ["an", "-1"],
    ["frobnicate"],
    [],
    ["--table", "/nonexistent/knots.jsonl", "table"],
    ["--width-cap", "2", "det", "3_1"],
    ["--width-cap", "8", "colored-jones", "4_1", "--color", "5"],
    ["verify", "thm1", "--max-color", "0"],
])
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_help_exits_cleanly():
    assert run("--help")[0] == 0


def test_width_cap_env(monkeypatch):
    monkeypatch.setenv(WIDTH_CAP_ENV, "8")
    assert EngineConfig.from_env().width_cap == 8
    assert run("colored-jones", "4_1", "--color", "5", "--eval", "zeta3")[0] == 2
    assert run("--width-cap", "24", "colored-jones", "4_1", "--color", "5", "--eval", "zeta3")[:2] == (0, "-1\n")
    monkeypatch.setenv(WIDTH_CAP_ENV, "lots")
    assert run("det", "3_1")[0] == 2


def test_explicit_config():
    cfg = EngineConfig(width_cap=8, jobs=1)
    assert run("colored-jones", "4_1", "--color", "5", config=cfg)[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "coloredjones", "det", "4_1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "5\n"

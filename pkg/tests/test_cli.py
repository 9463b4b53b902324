import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from nucalc.cli import main

PROGRAMS = Path(__file__).resolve().parent.parent / "demos" / "programs"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def prog(name):
    return PROGRAMS / f"{name}.nu"


def test_typecheck():
    assert run("typecheck", prog("priv_lhs")) == (0, "N -> B\n", "")


def test_typecheck_error():
    code, _, err = run("typecheck", prog("bad"))
    assert code == 2 and "error" in err


def test_eval():
    code, out, _ = run("eval", prog("fresh_lhs"))
    lines = out.splitlines()
    assert code == 0
    assert lines[0].startswith("generated: {") and lines[0].count(",") == 1
    assert lines[1] == "value: false"


def test_eval_public(tmp_path):
    f = tmp_path / "t.nu"
    f.write_text("a == a")
    assert run("eval", f, "--public", "a") == (0, "generated: {}\nvalue: true\n", "")


def test_normalize():
    assert run("normalize", prog("priv_lhs")) == (0, "\\v0:N. false\n", "")
    assert run("normalize", prog("transposition"))[1] == "\\v0:N. v0\n"


def test_equiv_equivalent():
    assert run("equiv", prog("priv_lhs"), prog("priv_rhs")) == (0, "Equivalent\n", "")


def test_equiv_inequivalent():
    code, out, _ = run("equiv", prog("commute_lhs"), prog("commute_rhs"))
    assert code == 1
    assert out.startswith("Inequivalent\nreason: probe [apply to true]")


def test_equiv_public():
    code, out, _ = run("equiv", prog("public_guess"), prog("priv_rhs"), "--public", "a")
    assert code == 1


def test_equiv_not_first_order():
    code, out, err = run("equiv", prog("second_order"), prog("const_true"))
    assert code == 2 and out.startswith("NotFirstOrder")


def test_sample():
    code, out, _ = run("sample", prog("second_order_step"), "--trials", 2000, "--seed", 3,
                       "--predicate", "step:0.5")
    report = json.loads(out)
    assert code == 0
    assert set(report) == {"trials", "successes", "estimate", "std_error", "seed"}
    assert report["trials"] == 2000 and report["seed"] == 3
    assert 0.45 < report["estimate"] < 0.55


def test_sample_deterministic():
    argv = ("sample", prog("second_order_step"), "--trials", 300, "--seed", 9,
            "--predicate", "step:0.5")
    assert run(*argv) == run(*argv)


def test_sample_requires_seed():
    assert run("sample", prog("fresh_lhs"), "--trials", 10)[0] == 2


@pytest.mark.parametrize("extra", [["--trials", "0"], ["--trials", "x"], ["--predicate", "step"]])
def test_sample_bad_flags(extra):
    argv = ["sample", prog("second_order_step"), "--seed", "1", "--trials", "10", *extra]
    assert run(*argv)[0] == 2


def test_distinguish():
    code, out, _ = run("distinguish", prog("commute_lhs"), prog("commute_rhs"),
                       "--context", prog("commute_ctx"), "--trials", 500, "--seed", 1)
    left, right, verdict = map(json.loads, out.splitlines())
    assert code == 1
    assert (left["estimate"], right["estimate"], verdict) == (1.0, 0.0, {"separated": True})


def test_distinguish_not_separated():
    code, out, _ = run("distinguish", prog("priv_lhs"), prog("priv_rhs"),
                       "--context", prog("priv_ctx"), "--trials", 500, "--seed", 1)
    assert code == 0 and json.loads(out.splitlines()[2]) == {"separated": False}


def test_missing_file():
    assert run("typecheck", "/nonexistent.nu")[0] == 2


def test_parse_error_reports_location(tmp_path):
    f = tmp_path / "t.nu"
    f.write_text("true\n )")
    code, _, err = run("typecheck", f)
    assert code == 2 and "2:2" in err


def test_fuel_exhaustion_is_internal(tmp_path):
    f = tmp_path / "t.nu"
    f.write_text(r"(\x:B. x) ((\y:B. y) true)")
    assert run("eval", f)[0] == 0
    code, _, err = run("eval", f, "--fuel", 2)
    assert code == 3 and "internal" in err


def test_duplicate_public_names():
    assert run("eval", prog("identity"), "--public", "a,a")[0] == 2


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "nucalc.cli", "typecheck", str(prog("identity"))],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "N -> N\n"

import json
import subprocess
import sys

import pytest

from lndkit.cli import main, run
from lndkit.fixtures import F_TEXT
from lndkit.report import CheckEntry, Report, Verdict, combine, emit_report, parse_report


def code(*argv):
    return run(list(argv))[1]


def strip_ms(text):
    d = json.loads(text)
    for c in d["checks"]:
        c["ms"] = 0
    return d


def test_quintic_passes():
    report, rc, out = run(["quintic", "--format", "json"])
    assert rc == 0 and report.overall == Verdict.PASS
    names = [c["name"] for c in json.loads(out)["checks"]]
    assert {"C1 on F", "C2 on F", "C3 on F", "C4 on F"} <= set(names)
    assert any("exactly one singular point" in n for n in names)
    assert any("kernel" in n for n in names)
    assert "torus family fixes F" in names


def test_sextic_passes():
    report, rc, _ = run(["sextic"])
    assert rc == 0 and report.overall == Verdict.PASS


def test_check_reducible_file_fails(tmp_path):
    p = tmp_path / "f.poly"
    p.write_text("x^3 + x*y^3\n")
    report, rc, _ = run(["check", "--file", str(p), "--weights", "x=3,y=2,z=1"])
    assert rc == 1 and report.overall == Verdict.FAIL


def test_check_builtin_and_inline():
    assert code("check", "--builtin", "F") == 0
    assert code("check", "--poly", F_TEXT) == 0
    report, rc, _ = run(["check", "--poly", "x*y^3 + y^4*z + x^2*z^3"])
    verdicts = {c.name: c.verdict for c in report.checks}
    assert rc == 1 and verdicts["C2"] == Verdict.INDETERMINATE and verdicts["C3"] == Verdict.FAIL


def test_global_flags_either_side():
    a = run(["--format", "json", "basis", "--degree", "9"])
    b = run(["basis", "--degree", "9", "--format", "json"])
    assert a[1] == b[1] == 0
    assert strip_ms(a[2]) == strip_ms(b[2])
    assert json.loads(a[2])["checks"][0]["witness"].startswith("12: ")


def test_basis_with_weights():
    report, rc, _ = run(["basis", "--degree", "4", "--weights", "x=3,y=2,z=1"])
    assert rc == 0 and report.checks[0].witness == "4: x*z, y^2, y*z^2, z^4"


def test_resultant_command():
    report, rc, _ = run(["resultant", "--f", "lam^2 - y", "--g", "lam - x", "--var", "lam"])
    assert rc == 0 and report.checks[0].witness == "x^2 - y"
    report, _, _ = run(["resultant", "--f", "lam - a", "--g", "lam - b", "--var", "lam"])
    assert report.checks[0].witness == "a - b"


def test_lnd_commands():
    report, rc, _ = run(["lnd", "apply", "--poly", "x*z + y^2"])
    assert rc == 0 and report.checks[0].witness == "0"
    report, rc, _ = run(["lnd", "degree", "--poly", "z"])
    assert rc == 0 and report.checks[0].witness == "2"
    assert code("lnd", "nilpotent") == 0
    assert code("lnd", "nilpotent", "--derivation", "x -> x") == 1
    assert code("lnd", "nilpotent", "--derivation", "z -> z^2", "--bound", "5") == 2
    assert code("lnd", "degree", "--derivation", "x -> x", "--poly", "x", "--bound", "3") == 2


def test_lnd_derivation_file(tmp_path):
    p = tmp_path / "d.der"
    p.write_text("y -> z\nx -> y\n")
    assert code("lnd", "nilpotent", "--derivation-file", str(p)) == 0


def test_centralizer_command():
    report, rc, _ = run(["centralizer"])
    assert rc == 0
    assert report.checks[0].witness.count("\n") == 11


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["basis"],
    ["basis", "--degree", "x"],
    ["--bound", "0", "lnd", "nilpotent"],
    ["resultant", "--f", "x", "--g", "y"],
    ["check", "--poly", "x", "--file", "f"],
    ["--format", "xml", "quintic"],
    ["lnd", "frob"],
])
def test_usage_errors(argv):
    report, rc, out = run(argv)
    assert rc == 64 and report is None and out.startswith("usage error")


@pytest.mark.parametrize("argv", [
    ["check", "--poly", "2x + y"],
    ["check", "--file", "/nonexistent/f.poly"],
    ["check", "--poly", "x + w"],
    ["check", "--poly", "x + y"],
    ["check", "--poly", "x", "--weights", "x=0"],
    ["resultant", "--f", "x", "--g", "y", "--var", "t"],
    ["lnd", "apply", "--derivation", "x -> (", "--poly", "x"],
    ["centralizer", "--poly", "x + y"],
])
def test_input_errors(argv):
    report, rc, out = run(argv)
    assert rc == 65 and report is None and out.startswith("input error")


def test_only_documented_exit_codes():
    cases = [["quintic"], ["check", "--poly", "z^9"], ["lnd", "nilpotent", "--derivation", "z -> z^2"],
             ["nope"], ["check", "--poly", "("]]
    assert {code(*c) for c in cases} <= {0, 1, 2, 64, 65}


def test_output_deterministic_up_to_timings():
    a = run(["quintic", "--format", "json"])[2]
    b = run(["quintic", "--format", "json"])[2]
    assert strip_ms(a) == strip_ms(b)
    ta = run(["sextic"])[2].splitlines()
    tb = run(["sextic"])[2].splitlines()
    assert [l.split("(")[0] for l in ta] == [l.split("(")[0] for l in tb]


def test_report_combine_rules():
    P, F, I = Verdict.PASS, Verdict.FAIL, Verdict.INDETERMINATE
    assert combine([P, P]) == P
    assert combine([P, I]) == I
    assert combine([I, F, P]) == F
    assert combine([]) == P


def test_report_json_round_trip():
    r = Report("check", [CheckEntry("C1", Verdict.PASS, "ok", 1.5), CheckEntry("C2", Verdict.FAIL, None, 0.25)])
    text = emit_report(r, "json")
    d = json.loads(text)
    assert d["overall"] == "FAIL" and set(d) == {"version", "command", "overall", "checks"}
    assert parse_report(text) == r
    assert json.loads(emit_report(Report("basis", [CheckEntry("b", Verdict.PASS)]), "json"))["overall"] == "PASS"
    d["overall"] = "PASS"
    with pytest.raises(ValueError):
        parse_report(json.dumps(d))


def test_text_report_lists_checks():
    r = Report("check", [CheckEntry("C1", Verdict.PASS, "line one\nline two")])
    out = emit_report(r, "text")
    assert "C1" in out and "line two" in out and out.endswith("overall: PASS")


def test_main_streams(capsys):
    assert main(["basis", "--degree", "3"]) == 0
    assert "x, y*z, z^3" in capsys.readouterr().out
    assert main(["bogus"]) == 64
    assert "usage error" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lndkit", "basis", "--degree", "2", "--format", "json"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["overall"] == "PASS"

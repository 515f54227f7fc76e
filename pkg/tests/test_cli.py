import subprocess
import sys

import pytest

from pts.alpha import alpha_eq
from pts.cli import main
from pts.parser import parse_term


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_infer_identity_C(capsys):
    code, out, _ = run(capsys, "--system", "C", "infer", r"\(A:*) -> \(x:A) -> x")
    assert code == 0
    assert alpha_eq(parse_term(out.strip()),
                    parse_term("Pi (A:*) -> Pi (x:A) -> A"))


def test_infer_rule_missing_arrow(capsys):
    code, out, err = run(capsys, "--system", "arrow", "infer",
                         r"\(A:*) -> \(x:A) -> x")
    assert code == 1
    assert "ruleMissing" in err


def test_infer_parse_error(capsys):
    code, _, err = run(capsys, "--system", "C", "infer", r"\(x:*) ->")
    assert code == 2
    assert "parse error" in err


def test_infer_requires_instance(capsys):
    code, _, _ = run(capsys, "infer", "*")
    assert code == 2


def test_check_identity_two(capsys):
    code, out, _ = run(capsys, "--system", "two", "check",
                       r"\(A:*) -> \(x:A) -> x", "Pi (A:*) -> Pi (x:A) -> A")
    assert code == 0 and out.strip() == "true"


def test_check_wrong_type(capsys):
    code, out, _ = run(capsys, "--system", "two", "check",
                       r"\(A:*) -> \(x:A) -> x", "*")
    assert code == 1 and out.strip() == "false"


def test_check_fuel_unknown(capsys):
    omega = r"(\(x:*) -> x x) (\(x:*) -> x x)"
    code, out, _ = run(capsys, "--system", "C", "--fuel", "1", "check", "*", omega)
    assert code == 3 and out.strip() == "unknown"


def test_nf(capsys):
    code, out, _ = run(capsys, "nf", r"(\(x:*) -> x) *")
    assert code == 0 and out.strip() == "*"


def test_nf_fuel(capsys):
    omega = r"(\(x:*) -> x x) (\(x:*) -> x x)"
    code, _, err = run(capsys, "--fuel", "2", "nf", omega)
    assert code == 3 and "fuelExhausted" in err


def test_alpha(capsys):
    code, out, _ = run(capsys, "alpha", r"\(x:*) -> x", r"\(y:*) -> y")
    assert code == 0 and out.strip() == "true"
    code, out, _ = run(capsys, "alpha", r"\(x:*) -> x", r"\(y:*) -> x")
    assert code == 1 and out.strip() == "false"


def test_beq(capsys):
    code, out, _ = run(capsys, "beq", r"(\(x:*) -> x) #", "#")
    assert code == 0 and out.strip() == "true"
    code, out, _ = run(capsys, "beq", "*", "#")
    assert code == 1 and out.strip() == "false"


def test_fv_order(capsys):
    code, out, _ = run(capsys, "fv", r"(\(x : y) -> x z) w")
    assert code == 0 and out.strip() == "y z w"


def test_subst(capsys):
    # the binder is renamed past the image's free variable; encode("y") = 0
    # blocks index 0, so the first available name is x1
    code, out, _ = run(capsys, "subst", r"\(y:*) -> x", "x", "y")
    assert code == 0 and out.strip() == r"\(x1 : *) -> y"


def test_subst_canonical_names(capsys):
    code, out, _ = run(capsys, "subst", r"\(x1:*) -> x0", "x0", "x1")
    assert code == 0 and out.strip() == r"\(x0 : *) -> x1"


def test_structured_output_agrees(capsys):
    code, out, _ = run(capsys, "--output", "structured", "--system", "two",
                       "check", r"\(A:*) -> \(x:A) -> x",
                       "Pi (A:*) -> Pi (x:A) -> A")
    record = dict(line.split("=", 1) for line in out.strip().splitlines())
    assert code == 0
    assert record["command"] == "check"
    assert record["verdict"] == "true"
    assert record["exit"] == "0"


def test_structured_error_record(capsys):
    code, out, _ = run(capsys, "--output", "structured", "--system", "arrow",
                       "infer", r"\(A:*) -> \(x:A) -> x")
    record = dict(line.split("=", 1) for line in out.strip().splitlines())
    assert code == 1 and record["exit"] == "1"
    assert record["error"].startswith("ruleMissing")


def test_ctx_flag_and_file(capsys, tmp_path):
    code, out, _ = run(capsys, "--system", "arrow", "--ctx", "A : *",
                       "infer", r"\(x:A) -> x")
    assert code == 0
    ctxfile = tmp_path / "ctx.txt"
    ctxfile.write_text("A : *")
    code2, out2, _ = run(capsys, "--system", "arrow", "--ctx", f"@{ctxfile}",
                         "infer", r"\(x:A) -> x")
    assert code2 == 0 and out2 == out


def test_spec_file(capsys, tmp_path):
    specfile = tmp_path / "arrow.pts"
    specfile.write_text("sort *\nsort #\naxiom * #\nrule * * *\n")
    code, out, _ = run(capsys, "--spec", str(specfile), "infer", "*")
    assert code == 0 and out.strip() == "#"


def test_spec_and_system_conflict(capsys):
    code, _, _ = run(capsys, "--system", "C", "--spec", "x.pts", "infer", "*")
    assert code == 2


def test_batch(capsys, tmp_path):
    batch = tmp_path / "batch.txt"
    batch.write_text(
        "# fixture lines\n"
        '--system C infer "\\(A:*) -> \\(x:A) -> x"\n'
        'expect=1 --system arrow infer "\\(A:*) -> \\(x:A) -> x"\n'
        'expect=0 alpha "\\(x:*) -> x" "\\(y:*) -> y"\n'
    )
    code, out, _ = run(capsys, "batch", str(batch))
    assert code == 0
    report = [l for l in out.splitlines() if l.startswith("line ")]
    assert len(report) == 3 and all(l.endswith("ok") for l in report)
    assert "3/3 ok" in out


def test_batch_reports_failures(capsys, tmp_path):
    batch = tmp_path / "batch.txt"
    batch.write_text('expect=0 alpha "\\(x:*) -> x" "\\(y:*) -> x"\n')
    code, out, _ = run(capsys, "batch", str(batch))
    assert code == 1 and "FAIL" in out


def test_console_script_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "pts.cli", "--system", "C", "infer", "*"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "#"

#!/usr/bin/env python3
"""Regenerate the golden fixture files under tests/fixtures/golden/.

Run from the repository root:

    python scripts/gen_fixtures.py

Golden files freeze the exact observable outputs of the concrete-judgment
fixtures (via the CLI in structured mode) and a handful of derived values
computed through the brute-force reference module.  Regenerate only after
deliberate behaviour changes, and review the diff.
"""

from __future__ import annotations

import contextlib
import io
import pathlib
import shlex
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from pts.cli import main
from pts.oracle import ORACLE_VERSION, enum_terms, naive_subst
from pts.parser import parse_term, print_term
from pts.subst import Res, chi_res, chi_var, iota, subst1
from pts.syntax import Sort, Var
from pts.typecheck import CUBE_CORNERS

GOLDEN = pathlib.Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "golden"

POLY_ID = r"\(A:*) -> \(x:A) -> x"

JUDGMENT_COMMANDS = [
    *[f'--system {c} --output structured infer "*"' for c in CUBE_CORNERS],
    f'--system two --output structured infer "{POLY_ID}"',
    f'--system two --output structured check "{POLY_ID}" "Pi (A:*) -> Pi (x:A) -> A"',
    f'--system arrow --ctx "A : *" --output structured infer "\\(x:A) -> x"',
    f'--system arrow --ctx "A : *" --output structured check "\\(x:A) -> x" "Pi (x:A) -> A"',
    f'--system arrow --output structured infer "{POLY_ID}"',
]


def record(cmd: str) -> str:
    sink = io.StringIO()
    with contextlib.redirect_stdout(sink):
        main(shlex.split(cmd))
    return sink.getvalue()


def gen_judgments() -> str:
    lines = [f"# golden judgments; oracle version {ORACLE_VERSION}"]
    for cmd in JUDGMENT_COMMANDS:
        lines.append(f">>> {cmd}")
        lines.append(record(cmd).rstrip("\n"))
        lines.append("<<<")
    return "\n".join(lines) + "\n"


def gen_batch() -> str:
    # the same judgments as a batch file: expected exits encoded per line
    lines = ["# concrete judgments as a batch run"]
    for c in CUBE_CORNERS:
        lines.append(f'expect=0 --system {c} infer "*"')
    lines.append(f'expect=0 --system two check "{POLY_ID}" "Pi (A:*) -> Pi (x:A) -> A"')
    lines.append('expect=0 --system arrow --ctx "A : *" check "\\(x:A) -> x" "Pi (x:A) -> A"')
    lines.append(f'expect=1 --system arrow infer "{POLY_ID}"')
    return "\n".join(lines) + "\n"


def gen_derived() -> str:
    x, y = Var("x"), Var("y")
    out = [f"# derived values computed via the reference module; oracle version {ORACLE_VERSION}"]
    out.append(f"enum_count_size3_1var_1sort = {len(list(enum_terms(3, (x,), (Sort('*'),))))}")
    out.append(f"chi_var_x0_x2 = {chi_var((Var('x0'), Var('x2'))).name}")
    out.append(f"chi_var_foo = {chi_var((Var('foo'),)).name}")
    out.append(f"chi_res_iota_x0 = {chi_res(Res(iota, (Var('x0'),))).name}")
    m = parse_term(r"\(y:*) -> x")
    stoughton = subst1(m, x, parse_term("y"))
    reference = naive_subst(m, x, parse_term("y"))
    out.append(f"subst_capture_stoughton = {print_term(stoughton)}")
    out.append(f"subst_capture_reference = {print_term(reference)}")
    out.append(f"iota_normal_identity = {print_term(subst1(parse_term(POLY_ID), Var('zz'), parse_term('zz')))}")
    return "\n".join(out) + "\n"


def main_script() -> None:
    GOLDEN.mkdir(parents=True, exist_ok=True)
    (GOLDEN / "judgments.txt").write_text(gen_judgments(), encoding="utf-8")
    (GOLDEN / "judgments.batch").write_text(gen_batch(), encoding="utf-8")
    (GOLDEN / "derived_values.txt").write_text(gen_derived(), encoding="utf-8")
    for p in sorted(GOLDEN.iterdir()):
        print(f"wrote {p}")


if __name__ == "__main__":
    main_script()

"""Command-line front end.

Exit codes are a fixed contract: 0 success/true, 1 false or type error,
2 parse error, 3 fuel exhausted.  ``--output structured`` emits one
key=value record per invocation; verdicts agree with plain mode.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import shlex
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import parser as psr
from .alpha import alpha_eq
from .beta import FUEL_EXHAUSTED, UNKNOWN, YES, beta_conv, normalize
from .parser import ParseError, parse_ctx, parse_spec, parse_term, print_term
from .subst import subst1
from .syntax import Var, fv
from .typecheck import CUBE_CORNERS, Ctx, FuelExhausted, InferError, PtsSpec, infer, lambda_cube

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_PARSE = 2
EXIT_FUEL = 3


@dataclass
class _Result:
    code: int
    payload: dict[str, str] = field(default_factory=dict)
    error: Optional[str] = None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pts", description=__doc__)
    group = ap.add_mutually_exclusive_group()
    group.add_argument("--system", choices=CUBE_CORNERS, help="lambda-cube preset")
    group.add_argument("--spec", metavar="FILE", help="instance spec file")
    ap.add_argument("--ctx", default="", metavar="TEXT|@FILE",
                    help="typing context, inline or @file")
    ap.add_argument("--fuel", type=int, default=10000)
    ap.add_argument("--output", choices=("plain", "structured"), default="plain")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("infer", help="synthesize a type")
    p.add_argument("term")
    p = sub.add_parser("check", help="check a term against a type")
    p.add_argument("term")
    p.add_argument("type")
    p = sub.add_parser("nf", help="normalize")
    p.add_argument("term")
    p = sub.add_parser("alpha", help="alpha-equivalence of two terms")
    p.add_argument("a")
    p.add_argument("b")
    p = sub.add_parser("beq", help="beta-conversion of two terms")
    p.add_argument("a")
    p.add_argument("b")
    p = sub.add_parser("fv", help="free variables in order")
    p.add_argument("term")
    p = sub.add_parser("subst", help="substitute: term[var := n]")
    p.add_argument("term")
    p.add_argument("var")
    p.add_argument("n")
    p = sub.add_parser("batch", help="run one command line per file line")
    p.add_argument("file")
    return ap


def _load_instance(args: argparse.Namespace) -> Optional[PtsSpec]:
    if args.system:
        return lambda_cube(args.system)
    if args.spec:
        with open(args.spec, encoding="utf-8") as fh:
            return parse_spec(fh.read())
    return None


def _load_ctx(args: argparse.Namespace) -> Ctx:
    text = args.ctx
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            text = fh.read()
    return parse_ctx(text)


def _execute(args: argparse.Namespace) -> _Result:
    cmd = args.command
    if cmd == "infer":
        spec = _load_instance(args)
        if spec is None:
            return _Result(EXIT_PARSE, error="no instance: pass --system or --spec")
        ctx = _load_ctx(args)
        try:
            ty = infer(spec, ctx, parse_term(args.term), args.fuel)
        except FuelExhausted as e:
            return _Result(EXIT_FUEL, error=f"{e.code}: {e}")
        except InferError as e:
            return _Result(EXIT_FALSE, error=f"{e.code}: {e}")
        return _Result(EXIT_OK, {"type": print_term(ty)})

    if cmd == "check":
        spec = _load_instance(args)
        if spec is None:
            return _Result(EXIT_PARSE, error="no instance: pass --system or --spec")
        ctx = _load_ctx(args)
        want = parse_term(args.type)
        try:
            got = infer(spec, ctx, parse_term(args.term), args.fuel)
        except FuelExhausted as e:
            return _Result(EXIT_FUEL, error=f"{e.code}: {e}")
        except InferError as e:
            return _Result(EXIT_FALSE, error=f"{e.code}: {e}")
        verdict = beta_conv(got, want, args.fuel)
        if verdict == UNKNOWN:
            return _Result(EXIT_FUEL, {"verdict": "unknown"})
        ok = verdict == YES
        return _Result(EXIT_OK if ok else EXIT_FALSE, {"verdict": "true" if ok else "false"})

    if cmd == "nf":
        term, flag = normalize(parse_term(args.term), args.fuel)
        if flag == FUEL_EXHAUSTED:
            return _Result(EXIT_FUEL, {"nf": print_term(term), "flag": flag},
                           error=f"fuelExhausted: {print_term(term)}")
        return _Result(EXIT_OK, {"nf": print_term(term), "flag": flag})

    if cmd == "alpha":
        ok = alpha_eq(parse_term(args.a), parse_term(args.b))
        return _Result(EXIT_OK if ok else EXIT_FALSE, {"verdict": "true" if ok else "false"})

    if cmd == "beq":
        verdict = beta_conv(parse_term(args.a), parse_term(args.b), args.fuel)
        if verdict == UNKNOWN:
            return _Result(EXIT_FUEL, {"verdict": "unknown"})
        ok = verdict == YES
        return _Result(EXIT_OK if ok else EXIT_FALSE, {"verdict": "true" if ok else "false"})

    if cmd == "fv":
        names = " ".join(x.name for x in fv(parse_term(args.term)))
        return _Result(EXIT_OK, {"fv": names})

    if cmd == "subst":
        out = subst1(parse_term(args.term), Var(args.var), parse_term(args.n))
        return _Result(EXIT_OK, {"term": print_term(out)})

    if cmd == "batch":
        return _run_batch(args)

    return _Result(EXIT_PARSE, error=f"unknown command {cmd!r}")


_PLAIN_KEY = {"infer": "type", "check": "verdict", "nf": "nf", "alpha": "verdict",
              "beq": "verdict", "fv": "fv", "subst": "term", "batch": "summary"}


def _render(args: argparse.Namespace, res: _Result) -> int:
    if args.output == "structured":
        print(f"command={args.command}")
        for k, v in res.payload.items():
            print(f"{k}={v}")
        if res.error is not None:
            print(f"error={res.error}")
        print(f"exit={res.code}")
    else:
        key = _PLAIN_KEY.get(args.command)
        if key and key in res.payload:
            print(res.payload[key])
        if res.error is not None:
            print(res.error, file=sys.stderr)
    return res.code


def _run_batch(args: argparse.Namespace) -> _Result:
    with open(args.file, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    total = passed = 0
    report: list[str] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        expected = 0
        if line.startswith("expect="):
            head, _, rest = line.partition(" ")
            expected = int(head[len("expect="):])
            line = rest.strip()
        total += 1
        sink = io.StringIO()
        with contextlib.redirect_stdout(sink), contextlib.redirect_stderr(sink):
            code = main(shlex.split(line))
        ok = code == expected
        passed += ok
        report.append(f"line {lineno}: exit={code} expected={expected} "
                      f"{'ok' if ok else 'FAIL'}")
    summary = f"{passed}/{total} ok"
    payload = {"summary": summary}
    for i, entry in enumerate(report):
        payload[f"line{i}"] = entry
    res = _Result(EXIT_OK if passed == total else EXIT_FALSE, payload)
    if args.output == "plain":
        for entry in report:
            print(entry)
    return res


def main(argv: Optional[list[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_PARSE if e.code else EXIT_OK
    try:
        res = _execute(args)
    except ParseError as e:
        res = _Result(EXIT_PARSE, error=f"parse error: {e}")
    except OSError as e:
        res = _Result(EXIT_PARSE, error=f"cannot read input: {e}")
    return _render(args, res)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

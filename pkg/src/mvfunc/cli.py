"""Command-line interface: ``mvfunc {eval,repl,check-relations,solve-sylvester}``.

Exit codes: 0 success, 1 evaluation or relation failure, 2 parse or usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from functools import lru_cache
from typing import Optional, Sequence, TextIO

from .algebra import gp, norm
from .errors import CliffordError, DimensionError
from .expr import EvalContext, EvalError, ParseError, evaluate, format_mv, parse, parse_mv
from .expr.parser import CONSTANTS, FUNCTIONS, blade_indices
from .linear import sylvester_solve
from .relations import relation_names, run_relations

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


@lru_cache(maxsize=1)
def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mvfunc", description="Elementary functions of Clifford multivectors.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ev = sub.add_parser("eval", help="evaluate an expression")
    ev.add_argument("expr")
    ev.add_argument("--dim", type=int, default=3, choices=(1, 2, 3, 4))
    ev.add_argument("--json", action="store_true", help="print the JSON form")
    ev.add_argument("--tol", type=float, default=None, help="null-amplitude tolerance")
    ev.add_argument("--power-side", choices=("right", "left"), default="right")

    rp = sub.add_parser("repl", help="interactive session with 'let name = expr'")
    rp.add_argument("--dim", type=int, default=3, choices=(1, 2, 3, 4))
    rp.add_argument("--json", action="store_true")
    rp.add_argument("--power-side", choices=("right", "left"), default="right")

    cr = sub.add_parser("check-relations", help="run the identity registry")
    cr.add_argument("--filter", default="*", help="glob over relation names")
    cr.add_argument("--samples", type=int, default=None)
    cr.add_argument("--seed", type=int, default=0)
    cr.add_argument("--json", action="store_true")
    cr.add_argument("--workers", type=int, default=4)
    cr.add_argument("--list", action="store_true", help="only list relation names")

    sy = sub.add_parser("solve-sylvester", help="solve A M + M B = Y")
    for flag in ("--a", "--b", "--y"):
        sy.add_argument(flag, required=True, help="multivector as JSON or text")
    sy.add_argument("--dim", type=int, default=None, choices=(1, 2, 3),
                    help="dimension for text operands (default: inferred)")
    sy.add_argument("--mirror", action="store_true",
                    help="eliminate through B instead of A (for A with zero amplitude)")
    sy.add_argument("--json", action="store_true")
    return p


def _style(args) -> str:
    return "json" if args.json else "text"


def _report_error(exc: BaseException, err: TextIO) -> int:
    if isinstance(exc, ParseError):
        print(f"parse error: {exc}", file=err)
        return EXIT_USAGE
    print(f"error: {exc}", file=err)
    return EXIT_FAIL


def _cmd_eval(args, out: TextIO, err: TextIO) -> int:
    ctx = EvalContext(dim=args.dim, tolerance=args.tol, power_side=args.power_side)
    try:
        value = evaluate(parse(args.expr, args.dim), ctx)
    except (ParseError, EvalError) as exc:
        return _report_error(exc, err)
    print(format_mv(value, _style(args)), file=out)
    return EXIT_OK


_LET = re.compile(r"\s*let\s+([A-Za-z_][A-Za-z0-9_]*)\s*=(.*)\Z", re.S)
_RESERVED = set(FUNCTIONS) | set(CONSTANTS) | {"let"}


def _cmd_repl(args, inp: TextIO, out: TextIO, err: TextIO) -> int:
    ctx = EvalContext(dim=args.dim, power_side=args.power_side)
    interactive = inp.isatty()
    while True:
        if interactive:
            print("> ", end="", file=out, flush=True)
        line = inp.readline()
        if not line:
            return EXIT_OK
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line in ("quit", "exit", ":q"):
            return EXIT_OK
        m = _LET.match(line)
        try:
            if m:
                name, src = m.group(1), m.group(2)
                if name in _RESERVED or blade_indices(name) is not None:
                    raise ParseError(f"cannot bind reserved name {name!r}", line.index(name))
                value = evaluate(parse(src, ctx.dim, ctx.variables), ctx)
                ctx.variables[name] = value
                print(f"{name} = {format_mv(value, _style(args))}", file=out)
            else:
                value = evaluate(parse(line, ctx.dim, ctx.variables), ctx)
                print(format_mv(value, _style(args)), file=out)
        except (ParseError, EvalError) as exc:
            _report_error(exc, err)


def _fmt_report_line(r) -> str:
    line = f"{r.status.upper():4s} {r.name} samples={r.samples} max_residual={r.max_residual:.3e} tol={r.tolerance:.0e}"
    if r.note:
        line += f"  [{r.note}]"
    return line


def _cmd_check(args, out: TextIO, err: TextIO) -> int:
    if args.list:
        for name in relation_names():
            print(name, file=out)
        return EXIT_OK
    if args.samples is not None and args.samples < 1:
        print("error: --samples must be positive", file=err)
        return EXIT_USAGE
    reports = run_relations(args.filter, args.samples, args.seed, workers=max(1, args.workers))
    if not reports:
        print(f"error: no relation matches {args.filter!r}", file=err)
        return EXIT_USAGE
    if args.json:
        print(json.dumps([r.as_dict() for r in reports], indent=1, sort_keys=True), file=out)
    else:
        for r in reports:
            print(_fmt_report_line(r), file=out)
            for w in r.witnesses:
                print(f"     witness: {w}", file=out)
        failed = sum(not r.passed for r in reports)
        print(f"{len(reports) - failed}/{len(reports)} relations passed", file=out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _cmd_sylvester(args, out: TextIO, err: TextIO) -> int:
    try:
        a, b, y = (parse_mv(s, args.dim) for s in (args.a, args.b, args.y))
    except (ParseError, EvalError) as exc:
        return _report_error(exc, err)
    if not (a.dim == b.dim == y.dim):
        print("parse error: A, B and Y must share one dimension", file=err)
        return EXIT_USAGE
    try:
        m = sylvester_solve(a, b, y, mirror=args.mirror)
    except (CliffordError, DimensionError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return EXIT_FAIL
    residual = norm(gp(a, m) + gp(m, b) - y)
    if args.json:
        print(json.dumps({"m": json.loads(format_mv(m, "json")), "residual": residual},
                         separators=(",", ":")), file=out)
    else:
        print(f"M = {format_mv(m)}", file=out)
        print(f"residual = {residual:.3e}", file=out)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None, stdin: TextIO = None,
         stdout: TextIO = None, stderr: TextIO = None) -> int:
    inp = stdin or sys.stdin
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = _build_parser().parse_args(argv)
    except _UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    if args.command == "eval":
        return _cmd_eval(args, out, err)
    if args.command == "repl":
        return _cmd_repl(args, inp, out, err)
    if args.command == "check-relations":
        return _cmd_check(args, out, err)
    return _cmd_sylvester(args, out, err)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

"""Command-line entry point.

Exit codes: 0 feasible/optimal/valid, 1 infeasible or check failed,
2 unbounded or pivot limit, 64 usage error, 65 parse error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import formats
from .model import LinearProgram, ModelError, ThresholdSpec, klee_minty, random_lp, random_system
from .oracle import check_farkas, check_solution, corpus_stats, pivot_stats
from .rational import RationalParseError, rat_parse, render
from .solver import (Feasible, Infeasible, PrimalDualFailure, optimize, solve, solve_lp_thresholds,
                     solve_primal_dual)
from .tableau import build_tableau

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_UNBOUNDED = 2
EXIT_USAGE = 64
EXIT_PARSE = 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_model(path):
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return formats.parse_any(text, path)


def _vector_arg(text):
    try:
        return tuple(rat_parse(t) for t in text.split(",")) if text.strip() else ()
    except RationalParseError as exc:
        raise UsageError(str(exc)) from None


def _style(args):
    if args.style == "fraction":
        return {"style": "fraction"}
    return {"style": "decimal", "places": args.places, "sep": "," if args.comma else "."}


def _print_tables(initial, outcome, args, out):
    kw = _style(args)
    if initial is not None:
        out.write("initial tableau\n" + formats.render_tableau(initial, **kw) + "\n")
    for rec in outcome.trace:
        out.write(f"pivot {rec.step}: column {rec.entering_col + 1}, row {rec.leaving_row + 1}\n")
        out.write(formats.render_tableau(rec.snapshot, **kw) + "\n")


def _print_infeasible(outcome, out, indent=""):
    out.write(f"{indent}farkas y = {formats.format_vector(outcome.farkas.y)}\n")
    out.write(f"{indent}farkas s = {formats.format_vector(outcome.farkas.s)}\n")
    out.write(f"{indent}last point = {formats.format_vector(outcome.last_point)}\n")
    if outcome.violated:
        out.write(f"{indent}violated rows = {', '.join(str(i + 1) for i in outcome.violated)}\n")


def cmd_solve(args, out):
    model = _read_model(args.file)
    system = model.system if isinstance(model, LinearProgram) else model
    tab = build_tableau(system)
    initial = tab.copy() if args.trace else None
    outcome = solve(tab, args.max_pivots, trace=True, snapshots=args.trace)
    if args.trace:
        _print_tables(initial, outcome, args, out)
    if args.json:
        out.write(json.dumps(formats.verdict_record(outcome)) + "\n")
    elif isinstance(outcome, Feasible):
        out.write(f"feasible\nx = {formats.format_vector(outcome.x)}\npivots = {outcome.pivots}\n")
    elif isinstance(outcome, Infeasible):
        out.write(f"infeasible (dual unbounded along column {outcome.entering + 1})\n")
        _print_infeasible(outcome, out)
        out.write(f"pivots = {outcome.pivots}\n")
    else:
        out.write(f"pivot limit reached after {outcome.pivots} pivots\n")
    return {"feasible": EXIT_OK, "infeasible": EXIT_INFEASIBLE}.get(outcome.verdict, EXIT_UNBOUNDED)


def _require_lp(model):
    if not isinstance(model, LinearProgram):
        raise UsageError("input has no 'min' objective; a linear program is required")
    return model


def cmd_thresholds(args, out):
    lp = _require_lp(_read_model(args.file))
    try:
        spec = ThresholdSpec(_vector_arg(args.t))
    except ModelError as exc:
        raise UsageError(str(exc)) from None
    tab = build_tableau(lp, thresholds=spec)
    initial = tab.copy() if args.trace else None
    runs = solve_lp_thresholds(lp, spec, args.max_pivots, trace=True, snapshots=args.trace, tableau=tab)
    if args.trace:
        out.write("initial tableau\n" + formats.render_tableau(initial, **_style(args)) + "\n")
    code = EXIT_OK
    for t, o in runs:
        if args.trace:
            _print_tables(None, o, args, out)
        if args.json:
            out.write(json.dumps(formats.verdict_record(o, t)) + "\n")
            continue
        if isinstance(o, Feasible):
            out.write(f"t={render(t)} feasible x = {formats.format_vector(o.x)} pivots={o.pivots}\n")
        elif isinstance(o, Infeasible):
            out.write(f"t={render(t)} contradictory pivots={o.pivots}\n")
            _print_infeasible(o, out, indent="  ")
        else:
            out.write(f"t={render(t)} pivot-limit pivots={o.pivots}\n")
    for t, o in runs:
        if not isinstance(o, Feasible):
            code = EXIT_INFEASIBLE if isinstance(o, Infeasible) else EXIT_UNBOUNDED
    skipped = spec.values[len(runs):]
    if skipped and not args.json:
        out.write(f"skipped (implied contradictory): {', '.join(render(t) for t in skipped)}\n")
    if not args.json:
        out.write(f"total pivots = {sum(o.pivots for _, o in runs)}\n")
    return code


def cmd_optimize(args, out):
    lp = _require_lp(_read_model(args.file))
    if args.mode == "primal-dual":
        res = solve_primal_dual(lp, args.max_pivots)
        if isinstance(res, PrimalDualFailure):
            if res.reason == "infeasible":
                out.write("infeasible: the constraints have no common solution\n")
                return EXIT_INFEASIBLE
            if res.reason == "unbounded":
                out.write("unbounded: constraints are feasible but the objective has no lower bound\n")
            else:
                out.write("pivot limit reached\n")
            return EXIT_UNBOUNDED
        out.write(f"x = {formats.format_vector(res.x)}\ny = {formats.format_vector(res.y)}\n"
                  f"z = {render(res.z)}\npivots = {res.pivots}\n")
        return EXIT_OK
    try:
        eps = rat_parse(args.eps)
    except RationalParseError as exc:
        raise UsageError(str(exc)) from None
    if eps <= 0:
        raise UsageError("--eps must be positive")
    res = optimize(lp, eps, args.max_pivots)
    if isinstance(res, Infeasible):
        out.write("infeasible: the constraints have no common solution\n")
        _print_infeasible(res, out)
        return EXIT_INFEASIBLE
    if not hasattr(res, "best_x"):
        out.write(f"pivot limit reached after {res.pivots} pivots\n")
        return EXIT_UNBOUNDED
    out.write(f"best x = {formats.format_vector(res.best_x)}\nz_upper = {render(res.z_upper)}\n")
    if res.unbounded:
        out.write("z_lower = unbounded (no infeasible objective bound found)\n"
                  f"pivots = {res.pivots}\n")
        return EXIT_UNBOUNDED
    out.write(f"z_lower = {render(res.z_lower)}\npivots = {res.pivots}\n")
    return EXIT_OK


def cmd_gen(args, out):
    if args.kind == "klee-minty":
        if args.dim is None or args.dim < 1:
            raise UsageError("klee-minty needs --dim >= 1")
        model = klee_minty(args.dim)
        comment = f"Klee-Minty cube, dimension {args.dim}"
    else:
        if args.vars is None or args.cons is None or args.seed is None:
            raise UsageError("random needs --vars, --cons and --seed")
        if args.vars < 1 or args.cons < 0:
            raise UsageError("--vars must be >= 1 and --cons >= 0")
        rng = random.Random(args.seed)
        if args.lp:
            model = random_lp(args.vars, args.cons, rng)
        else:
            model = random_system(args.vars, args.cons, rng)
        comment = f"random instance: vars={args.vars} cons={args.cons} seed={args.seed}"
    text = formats.emit_json(model) if args.format == "json" else formats.emit_text(model, comment)
    _write(args.output, text, out)
    return EXIT_OK


def cmd_check(args, out):
    model = _read_model(args.file)
    system = model.system if isinstance(model, LinearProgram) else model
    if (args.x is None) == (args.farkas is None):
        raise UsageError("give exactly one of --x or --farkas")
    if args.x is not None:
        x = _vector_arg(args.x)
        if len(x) != system.n:
            raise UsageError(f"--x has {len(x)} entries, system has {system.n} variables")
        rep = check_solution(system, x)
        if rep.feasible:
            out.write("feasible\n")
            return EXIT_OK
        out.write("infeasible\n")
        for i, short in rep.violations:
            where = f"row {i + 1}" if i >= 0 else f"x{-i} >= 0"
            out.write(f"violated {where}: shortfall {render(short)}\n")
        return EXIT_INFEASIBLE
    u = _vector_arg(args.farkas)
    if len(u) != system.m:
        raise UsageError(f"--farkas has {len(u)} entries, system has {system.m} rows")
    if check_farkas(system, u):
        out.write("valid infeasibility certificate\n")
        return EXIT_OK
    out.write("not an infeasibility certificate\n")
    return EXIT_INFEASIBLE


def cmd_bench(args, out):
    if args.corpus:
        report = corpus_stats()
    else:
        if args.count < 0 or args.vars < 1 or args.cons < 0 or args.jobs < 1:
            raise UsageError("--count, --cons must be >= 0; --vars, --jobs >= 1")
        report = pivot_stats(args.vars, args.cons, args.count, args.seed, args.vary_sizes, args.jobs)
    _write(args.output, report.to_csv(), out)
    frac = report.fraction_le_m
    if frac is not None:
        le = sum(1 for r in report.rows if r.pivots <= r.m)
        sys.stderr.write(f"fraction_pivots_le_m={formats.format_entry(frac, 'decimal', 6)} ({le}/{len(report.rows)})\n")
    limits = sum(1 for r in report.rows if r.verdict == "limit")
    return EXIT_UNBOUNDED if limits else EXIT_OK


def _write(path, text, out):
    if path in (None, "-"):
        out.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _add_render_flags(p):
    p.add_argument("--trace", action="store_true", help="print every tableau")
    p.add_argument("--style", choices=("fraction", "decimal"), default="fraction")
    p.add_argument("--places", type=int, default=3)
    p.add_argument("--comma", action="store_true", help="decimal comma in decimal style")
    p.add_argument("--max-pivots", type=int, default=None)


def build_parser():
    parser = _Parser(prog="ineqsimplex", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="find x >= 0 with Ax >= b, or a certificate that none exists")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    _add_render_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("thresholds", help="decide -c x >= t for increasing bounds t")
    p.add_argument("file")
    p.add_argument("--t", required=True, help="comma-separated increasing bounds")
    p.add_argument("--json", action="store_true")
    _add_render_flags(p)
    p.set_defaults(func=cmd_thresholds)

    p = sub.add_parser("optimize", help="minimize c x")
    p.add_argument("file")
    p.add_argument("--eps", default="1")
    p.add_argument("--mode", choices=("threshold", "primal-dual"), default="threshold")
    p.add_argument("--max-pivots", type=int, default=None)
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("gen", help="write a generated problem")
    p.add_argument("kind", choices=("klee-minty", "random"))
    p.add_argument("--dim", type=int)
    p.add_argument("--vars", type=int)
    p.add_argument("--cons", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--lp", action="store_true", help="random: add an objective")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="verify a point or an infeasibility certificate")
    p.add_argument("file")
    p.add_argument("--x", help="comma-separated point")
    p.add_argument("--farkas", help="comma-separated multipliers, one per row")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bench", help="pivot-count statistics as CSV")
    p.add_argument("--vars", type=int, default=5)
    p.add_argument("--cons", type=int, default=5)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--vary-sizes", action="store_true", help="draw each shape from 1..vars x 1..cons")
    p.add_argument("--corpus", action="store_true", help="run the built-in worked instances instead")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"ineqsimplex: {exc}\n")
        return EXIT_USAGE
    except (formats.ParseError, ModelError) as exc:
        sys.stderr.write(f"ineqsimplex: parse error: {exc}\n")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())

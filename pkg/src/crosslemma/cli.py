"""Command line interface.

Exit codes: 0 on success, 1 when a check finds a violation, 2 for usage,
parse and input errors.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import bounds, constructions, decomposition, transforms
from .drawing import (LensKind, crossing_number, max_multiplicity, validate_general_position)
from .errors import CrossLemmaError, InvariantViolation, ParseError
from .io import parse_drawing, render_svg, serialize_drawing
from .styles import DEFAULT_GIRTH_EDGE_CONSTANT, STYLE_NAMES, check_style, girth, style_params

OK, VIOLATION, USAGE = 0, 1, 2
BOUND_STYLES = tuple(s for s in STYLE_NAMES if s != "single-crossing")


class _Fail(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Fail(USAGE, f"cannot read {path}: {exc.strerror}") from exc


def _load(path: str, validate: bool = True):
    text = _read(path)
    return parse_drawing(text, validate), text


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _params(args):
    return style_params(args.style, args.m, args.r,
                        args.girth_constant if args.style == "girth" else None)


def _fmt(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, float):
        return "inf" if math.isinf(value) else f"{value:.6g}"
    return str(value)


# -- commands ---------------------------------------------------------------------

def cmd_validate(args) -> int:
    d, _ = _load(args.file, validate=False)
    report = validate_general_position(d)
    if report.ok:
        print(f"ok: n={d.n} e={d.e} general position holds")
        return OK
    print(f"{len(report)} finding(s):")
    for f in report:
        print(f"  {f}")
    return VIOLATION


def cmd_stats(args) -> int:
    d, _ = _load(args.file)
    g = girth(d)
    print(f"n={d.n} e={d.e} cr={crossing_number(d)} max_multiplicity={max_multiplicity(d)} "
          f"girth={_fmt(g)} max_degree={d.max_degree()}")
    return OK


def cmd_style_check(args) -> int:
    d, _ = _load(args.file)
    rep = check_style(d, args.style, args.m, args.r)
    if rep.holds:
        print(f"{rep.style}: holds")
        return OK
    print(f"{rep.style}: fails")
    print(f"witness: {rep.witness}")
    return VIOLATION


def cmd_bisect(args) -> int:
    d, _ = _load(args.file)
    rep = check_style(d, args.style, args.m, args.r)
    if not rep.holds:
        print(f"input is not {rep.style}: {rep.witness}")
        return VIOLATION
    finder = decomposition.bisection_heuristic if args.heuristic else decomposition.bisection_width_oracle
    width, bp = finder(d, args.style, args.m, args.r)
    k2 = _params(args).k2
    cr, delta = crossing_number(d), d.max_degree()
    inner = cr + delta * d.e + d.n
    holds = width * width <= k2 * k2 * inner
    print(f"method={'heuristic' if args.heuristic else 'oracle'} width={width} "
          f"cut={len(bp.cut)} repair={len(bp.repair)}")
    print(f"part1={' '.join(bp.part1)}")
    print(f"part2={' '.join(bp.part2)}")
    print(f"k2*sqrt(cr + max_degree*e + n) = {float(k2) * math.sqrt(inner):.6g} "
          f"(cr={cr} max_degree={delta} e={d.e} n={d.n}): {'holds' if holds else 'VIOLATED'}")
    return OK if holds else VIOLATION


def cmd_decompose(args) -> int:
    d, _ = _load(args.file)
    trace = decomposition.decompose(d, _params(args), cutter=args.cutter)
    print(trace.to_text())
    return OK if trace.invariants_hold else VIOLATION


def cmd_bound_check(args) -> int:
    d, _ = _load(args.file)
    params = _params(args)
    rep = check_style(d, params.name, params.m, params.r)
    if not rep.holds:
        print(f"input is not {params.label}: {rep.witness}")
        return VIOLATION
    r = bounds.bound_report(d.n, d.e, crossing_number(d), params)
    print(f"style={r.style} n={r.n} e={r.e} cr={r.cr} x={r.x} alpha={r.alpha or _fmt(r.alpha_float)} "
          f"beta={r.beta:.6g}")
    print(f"threshold (k1+1)n={r.threshold} applicable={'yes' if r.applicable else 'no'}")
    print(f"bound={_fmt(r.bound)} ratio={_fmt(r.ratio)} verdict={r.verdict}")
    if r.applicable:
        print(f"linear bound cr >= e - k1 n: {'holds' if r.linear_bound_holds else 'VIOLATED'}")
    for note in r.notes:
        print(f"note: {note}")
    failed = False
    for chk in bounds.verify_edge_bounds(d, params):
        print(f"{chk.name}: value={chk.value} limit={_fmt(chk.limit)} {'ok' if chk.holds else 'VIOLATED'}")
        failed |= not chk.holds
    if r.verdict == "VIOLATED" or r.linear_bound_holds is False or failed:
        return VIOLATION
    return OK


def cmd_transform(args) -> int:
    d, _ = _load(args.file)
    if args.op == "split":
        degree = Fraction(args.degree) if args.degree else Fraction(2 * d.e, d.n)
        out = transforms.split_high_degree(d, degree)
    elif args.op == "reroute":
        kinds = set(LensKind)
        if args.style == "locally-starlike":
            kinds.discard(LensKind.ENDPOINT_TO_CROSSING)
        out = transforms.reroute_to_fixpoint(d, kinds)
    else:
        out = transforms.planarize(d)
    print(f"# {args.op}: n {d.n}->{out.n} e {d.e}->{out.e} "
          f"cr {crossing_number(d)}->{crossing_number(out)}", file=sys.stderr)
    _emit(serialize_drawing(out), args.output)
    return OK


def cmd_construct(args) -> int:
    spec = constructions.ConstructionSpec(args.family, args.n, args.seed, args.resolution,
                                          r=args.r, e=args.e)
    _emit(serialize_drawing(constructions.build(spec)), args.output)
    return OK


def cmd_render(args) -> int:
    d, text = _load(args.file)
    _emit(render_svg(d, show_crossings=not args.no_crossings, shade_lenses=args.lenses,
                     width=args.width, source=text), args.output)
    return OK


def _n_range(text: str) -> range:
    try:
        a, b = (int(t) for t in text.split(".."))
    except ValueError:
        raise argparse.ArgumentTypeError("expected A..B") from None
    if a > b or a < 1:
        raise argparse.ArgumentTypeError("expected 1 <= A <= B")
    return range(a, b + 1)


COLUMNS = ("style", "n", "e", "cr", "bound", "ratio", "verdict",
           "headline_threshold", "headline_verdict", "in_style")


def _report_row(family, n, args, params):
    # --r is the style's girth parameter here; the family is sized by n alone.
    spec = constructions.ConstructionSpec(family, n, args.seed, args.resolution, e=args.e)
    d = constructions.build(spec)
    cr = crossing_number(d)
    rep = bounds.bound_report(d.n, d.e, cr, params)
    inside = check_style(d, params.name, params.m, params.r).holds
    head_thr = bounds.headline_threshold(d.n, params)
    if d.e > head_thr:
        head = "satisfied" if bounds.bound_holds(cr, d.n, d.e, params) else "VIOLATED"
    else:
        head = "n/a"
    return {"style": params.label, "n": d.n, "e": d.e, "cr": cr, "bound": rep.bound,
            "ratio": rep.ratio, "verdict": rep.verdict if inside else "not-in-style",
            "headline_threshold": head_thr, "headline_verdict": head if inside else "not-in-style",
            "in_style": inside}, rep


def cmd_report(args) -> int:
    params = _params(args)
    rows = [_report_row(args.family, n, args, params) for n in args.n_range]
    if args.format == "json":
        print(json.dumps([row for row, _ in rows], indent=2, default=str))
    elif args.format == "csv":
        print(",".join(COLUMNS))
        for row, _ in rows:
            print(",".join(_fmt(row[c]) for c in COLUMNS))
    else:
        table = [COLUMNS] + [tuple(_fmt(row[c]) for c in COLUMNS) for row, _ in rows]
        widths = [max(len(r[i]) for r in table) for i in range(len(COLUMNS))]
        for r in table:
            print("  ".join(cell.rjust(w) for cell, w in zip(r, widths)))
        rep = rows[0][1] if rows else None
        if rep is not None:
            print(f"# general bound: alpha e^(x+2)/n^(x+1), x={rep.x}, alpha={rep.alpha or _fmt(rep.alpha_float)}, "
                  f"applies for e > (k1+1)n = {params.k1 + 1}n")
            print(f"# headline bound: {rep.headline}, classically stated for e > "
                  f"{'4mn' if params.name == 'multiplicity' else '4n'}")
            for note in rep.notes:
                print(f"# note: {note}")
    bad = any(row["verdict"] == "VIOLATED" or row["headline_verdict"] == "VIOLATED" for row, _ in rows)
    return VIOLATION if bad else OK


# -- parser ------------------------------------------------------------------------

def _style_flags(p, default=None):
    p.add_argument("--style", choices=STYLE_NAMES if default is None else BOUND_STYLES,
                   required=default is None, default=default)
    p.add_argument("--m", type=int, help="multiplicity bound (multiplicity style)")
    p.add_argument("--r", type=int, help="girth parameter (girth style)")
    p.add_argument("--girth-constant", type=Fraction, default=DEFAULT_GIRTH_EDGE_CONSTANT,
                   help="edge-count constant k3 for the girth style")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crosslemma",
                                     description="Topological multigraph drawings and crossing bounds.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check general position")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("stats", help="n, e, cr, multiplicity and girth")
    p.add_argument("file")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("style-check", help="evaluate a drawing style")
    p.add_argument("file")
    _style_flags(p)
    p.set_defaults(func=cmd_style_check)

    p = sub.add_parser("bisect", help="style-aware bisection width")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--oracle", action="store_true", help="exhaustive search (default)")
    g.add_argument("--heuristic", action="store_true", help="sweep and local search")
    _style_flags(p, default="separated")
    p.set_defaults(func=cmd_bisect)

    p = sub.add_parser("decompose", help="run the decomposition and print its trace")
    p.add_argument("file")
    _style_flags(p, default="separated")
    p.add_argument("--cutter", choices=("oracle", "heuristic"), default="oracle")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("bound-check", help="compare cr with the lower bound")
    p.add_argument("file")
    _style_flags(p, default="separated")
    p.set_defaults(func=cmd_bound_check)

    p = sub.add_parser("transform", help="split, reroute or planarize")
    p.add_argument("op", choices=("split", "reroute", "planarize"))
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.add_argument("--degree", help="degree bound for split (default 2e/n)")
    p.add_argument("--style", choices=STYLE_NAMES, default="separated",
                   help="style for the reroute lens-kind filter")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("construct", help="emit a drawing from a family")
    p.add_argument("--family", choices=constructions.FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--resolution", type=int, default=16)
    p.add_argument("--e", type=int, help="edge count (random family)")
    p.add_argument("--r", type=int, help="cycle parameter (even-cycle family)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("render", help="SVG picture of a drawing")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.add_argument("--no-crossings", action="store_true")
    p.add_argument("--lenses", action="store_true", help="shade empty lenses")
    p.add_argument("--width", type=int, default=640)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("report", help="cr against the bound over a family")
    p.add_argument("--family", choices=constructions.FAMILIES, required=True)
    p.add_argument("--n-range", type=_n_range, required=True)
    p.add_argument("--style", choices=BOUND_STYLES, default="separated")
    p.add_argument("--m", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--girth-constant", type=Fraction, default=DEFAULT_GIRTH_EDGE_CONSTANT)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--resolution", type=int, default=16)
    p.add_argument("--e", type=int)
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except _Fail as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (ParseError, InvariantViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except (CrossLemmaError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return USAGE


def main_exit() -> None:
    sys.exit(main())

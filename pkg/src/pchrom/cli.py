"""Command-line entry point.

    pchrom bound (--g6 S | --edgelist PATH | --named NAME[:a,b]) [--format text|csv|json]
    pchrom curve SOURCE P_LO P_HI STEPS
    pchrom scan [--checks ...] [--exact] [--jobs N] < corpus.g6
    pchrom check-paper

Exit codes: 0 ok, 1 check failure, 2 parse error, 3 size limit.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys

import numpy as np

from .bounds import OptimizerConfig, f_curve, report_from_spectrum
from .eigen import N_MAX, spectrum
from .errors import GraphError, InputError, SizeError
from .exact import EXACT_MAX_N, chromatic_number, clique_number, conclude_quantum
from .graphio import Graph, parse_edgelist, parse_graph6, parse_named
from .paperchecks import format_results, run_paper_checks
from .scan import (
    CHECKS,
    CSV_COLUMNS,
    DEFAULT_PS,
    ScanRecord,
    fmt_num,
    json_num,
    record_json,
    record_row,
    report_fields,
    scan_lines,
)

EXIT_OK, EXIT_CHECK, EXIT_PARSE, EXIT_SIZE = 0, 1, 2, 3


def _add_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--g6", metavar="STRING", help="graph6 string")
    src.add_argument("--edgelist", metavar="PATH", help="edge-list file (first line n)")
    src.add_argument("--named", metavar="NAME[:PARAMS]", help="named graph, e.g. turan:2,3")


def _add_optimizer(p: argparse.ArgumentParser) -> None:
    p.add_argument("--p-max", type=float, default=200.0)
    p.add_argument("--grid", type=int, default=2048, help="optimizer grid points")
    p.add_argument("--refine", type=int, default=80, help="golden-section iterations")
    p.add_argument("--n-max", type=int, default=N_MAX, help="eigensolver size limit")


def _config(args, emit_curve: bool = False) -> OptimizerConfig:
    return OptimizerConfig(args.p_max, args.grid, args.refine, emit_curve)


def load_graph(args) -> tuple[str, Graph]:
    if args.g6 is not None:
        return args.g6, parse_graph6(args.g6)
    if args.named is not None:
        return args.named, parse_named(args.named)
    try:
        with open(args.edgelist, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {args.edgelist}: {exc}") from None
    return args.edgelist, parse_edgelist(text)


def cmd_bound(args, out) -> int:
    ident, g = load_graph(args)
    s = spectrum(g, args.n_max)
    r = report_from_spectrum(s, _config(args, args.emit_curve))
    chi = omega = chi_q = None
    if args.exact and g.n <= EXACT_MAX_N:
        chi, omega = chromatic_number(g), clique_number(g)
        chi_q = conclude_quantum(g, r)
    fields = report_fields(r)

    if args.format == "json":
        obj = {"id": ident, "n": g.n, "m": g.m, "inertia_triple": list(s.inertia)}
        obj.update({k: json_num(v) for k, v in fields.items()})
        obj["inertia_bound"] = obj.pop("inertia")
        if args.exact:
            obj.update({"chi": chi, "omega": omega, "chi_q": chi_q})
        if r.curve is not None:
            obj["curve"] = [[json_num(p), json_num(f)] for p, f in r.curve]
        out.write(json.dumps(obj) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        w.writerow(record_row(ScanRecord(ident, g.n, g.m, r, chi, omega)))
    else:
        out.write(f"graph: {ident} n={g.n} m={g.m}\n")
        out.write("spectrum: " + " ".join("%.6g" % v for v in s.values) + "\n")
        out.write("inertia: (%d, %d, %d)\n" % s.inertia)
        for key in ("hoffman", "inertia", "ando_lin", "sum_bound", "f_best"):
            label = "inertia_bound" if key == "inertia" else key
            out.write(f"{label}≈{fields[key]:.6g}\n")
        out.write("p_best≈" + ("inf" if math.isinf(r.p_best) else "%.4g" % r.p_best) + "\n")
        if args.exact:
            out.write(f"chi={chi} omega={omega} chi_q={'undetermined' if chi_q is None else chi_q}\n")
    return EXIT_OK


def curve_points(p_lo: float, p_hi: float, steps: int) -> np.ndarray:
    if not (0 <= p_lo < p_hi) or steps < 2:
        raise InputError("curve needs 0 <= p_lo < p_hi and steps >= 2")
    return np.linspace(p_lo, p_hi, steps)


def cmd_curve(args, out) -> int:
    _, g = load_graph(args)
    if args.curve_range is not None:
        p_lo, p_hi, steps = args.curve_range
    elif args.p_lo is not None and args.p_hi is not None and args.steps is not None:
        p_lo, p_hi, steps = args.p_lo, args.p_hi, args.steps
    else:
        raise InputError("curve needs P_LO P_HI STEPS or --curve-range")
    ps = curve_points(float(p_lo), float(p_hi), int(steps))
    fs = f_curve(spectrum(g, args.n_max), ps)
    out.write("p,f\n")
    for p, f in zip(ps, fs):
        out.write(f"{fmt_num(float(p))},{fmt_num(float(f))}\n")
    return EXIT_OK


def _parse_checks(text: str) -> tuple:
    if text.strip().lower() in ("", "none"):
        return ()
    if text.strip().lower() == "all":
        return CHECKS
    names = tuple(t.strip().upper() for t in text.split(",") if t.strip())
    unknown = [t for t in names if t not in CHECKS]
    if unknown:
        raise argparse.ArgumentTypeError(f"unknown check(s) {unknown}; choose from {', '.join(CHECKS)}")
    return names


def _parse_ps(text: str) -> tuple:
    try:
        ps = tuple(float(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad p list {text!r}") from None
    if any(p < 0 for p in ps):
        raise argparse.ArgumentTypeError("p values must be >= 0")
    return ps


def cmd_scan(args, out) -> int:
    records = scan_lines(
        args.input,
        checks=args.checks,
        cfg=_config(args),
        exact=args.exact,
        ps=args.ps,
        jobs=args.jobs,
        n_max=args.n_max,
    )
    writer = None
    if args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
    malformed = oversize = violated = False
    for rec in records:
        if writer is not None:
            writer.writerow(record_row(rec))
        else:
            out.write(record_json(rec) + "\n")
        malformed |= rec.error_kind == "input"
        oversize |= rec.error_kind == "size"
        violated |= bool(rec.flags)
        if rec.error:
            print(f"line {rec.id}: {rec.error}", file=sys.stderr)
    if malformed:
        return EXIT_PARSE
    if oversize:
        return EXIT_SIZE
    return EXIT_CHECK if violated else EXIT_OK


def cmd_check_paper(args, out) -> int:
    results = run_paper_checks()
    out.write(format_results(results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_CHECK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pchrom",
        description="Spectral p-energy lower bounds on chromatic numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="bound report for one graph")
    _add_source(p)
    _add_optimizer(p)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--exact", action="store_true", help="also compute chi, omega (n <= 64)")
    p.add_argument("--emit-curve", action="store_true", help="include sampled f(p) in json output")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("curve", help="CSV of f(p) on a uniform p grid")
    _add_source(p)
    p.add_argument("p_lo", type=float, nargs="?")
    p.add_argument("p_hi", type=float, nargs="?")
    p.add_argument("steps", type=int, nargs="?")
    p.add_argument("--curve-range", nargs=3, metavar=("LO", "HI", "STEPS"), type=float)
    p.add_argument("--n-max", type=int, default=N_MAX)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("scan", help="scan graph6 lines from stdin")
    _add_optimizer(p)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--checks", type=_parse_checks, default=CHECKS,
                   help="comma list of %s, 'all' or 'none'" % ",".join(CHECKS))
    p.add_argument("--ps", type=_parse_ps, default=DEFAULT_PS, help="p samples for energy checks")
    p.add_argument("--exact", action="store_true", help="report chi and omega (n <= 64)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_scan, input=None)

    p = sub.add_parser("check-paper", help="recompute the published worked examples")
    p.set_defaults(func=cmd_check_paper)
    return parser


def main(argv=None, stdin=None, stdout=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = stdout if stdout is not None else sys.stdout
    if args.command == "scan":
        args.input = stdin if stdin is not None else sys.stdin
    try:
        return args.func(args, out)
    except SizeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except InputError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GraphError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())

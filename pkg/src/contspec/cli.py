"""Command-line front end.

Exit codes: 0 success, 2 input error, 3 window too small,
4 verification failure (computed spectrum differs from the input set).
Set CONTSPEC_LOG=DEBUG (or INFO, ...) for diagnostics on stderr.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import algebraic as alg
from . import figure
from . import topology as topo
from .piecewise import (
    ColumnSpace,
    WindowExhausted,
    build_line_map,
    build_line_space,
    line_case,
    line_powers,
)
from .submonoid import canonicalize, closure_oracle, is_negation_closed, window

EXIT_OK, EXIT_INPUT, EXIT_WINDOW, EXIT_VERIFY = 0, 2, 3, 4

class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


def parse_ints(text: str) -> list[int]:
    items = [t.strip() for t in text.split(",") if t.strip()]
    try:
        return [int(t) for t in items]
    except ValueError:
        raise CliError(f"malformed integer list: {text!r}") from None


def emit(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def cmd_submonoid(args) -> tuple[str, int]:
    gens = parse_ints(args.generators)
    if args.N < 1:
        raise CliError("N must be >= 1")
    s = canonicalize(gens)
    members = window(s, args.N)
    if members != closure_oracle(gens, args.N):
        return emit({"error": "canonical form disagrees with closure oracle"}), EXIT_VERIFY
    report = {
        "generators": gens,
        "canonical": s.to_json(),
        "N": args.N,
        "members": members,
        "negation_closed": is_negation_closed(s),
    }
    if args.format == "text":
        return f"S = {s}\nmembers in [-{args.N}, {args.N}]: {members}\n", EXIT_OK
    return emit(report), EXIT_OK


def cmd_realize_line(args) -> tuple[str, int]:
    gens = parse_ints(args.generators)
    n = args.N
    if n < 1:
        raise CliError("N must be >= 1")
    w = args.W if args.W is not None else 2 * n
    s = canonicalize(gens)
    try:
        reports = line_powers(s, n, w)
    except WindowExhausted as exc:
        raise CliError(f"{exc} (required W={exc.required})", EXIT_WINDOW) from None
    found = [k for k, r in reports.items() if r.continuous]
    expected = window(s, n)
    code = EXIT_OK if found == expected else EXIT_VERIFY
    report = {
        "canonical": s.to_json(),
        "N": n,
        "W": w,
        "spectrum": found,
        "expected": expected,
        "match": found == expected,
        "powers": {str(k): r.to_json() for k, r in reports.items()},
        "cases": {str(m): line_case(s, m) for m in range(-n, n)},
    }
    space = build_line_space(s, w)
    f = build_line_map(s, w)
    shown = ColumnSpace({c: space[c] for c in range(-n, n + 1)}, window=n)
    shown_map = f.restrict(range(-n, n))
    title = f"S = {s}; spectrum on [-{n}, {n}] = {found}"
    svg = figure.to_svg(shown, shown_map, title=title, witnesses=reports[1].witnesses)
    if args.figure:
        with open(args.figure, "w", encoding="utf-8") as fh:
            fh.write(svg)
    if args.format == "svg":
        return svg, code
    if args.format == "dot":
        return figure.to_dot(shown, shown_map), code
    if args.format == "text":
        lines = [f"S = {s}", f"window W = {w}", f"spectrum on [-{n}, {n}]: {found}",
                 f"expected:            {expected}", "match" if code == EXIT_OK else "MISMATCH"]
        return "\n".join(lines) + "\n", code
    return emit(report), code


def cmd_topologies(args) -> tuple[str, int]:
    try:
        labeled = topo.enumerate_topologies(args.n)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    by_preorder = topo.topologies_from_preorders(args.n)
    classes = topo.homeomorphism_classes(args.n)
    rows = []
    for t in classes:
        group = topo.continuous_bijection_monoid(t)
        rows.append({"opens": t.as_sets(), "group_order": len(group), "group_type": topo.group_type(group)})
    report = {
        "n": args.n,
        "labeled": len(labeled),
        "labeled_by_preorders": len(by_preorder),
        "classes": len(classes),
        "group_orders": sorted(r["group_order"] for r in rows),
        "class_groups": rows,
    }
    if args.n == 3:
        report["table"] = topo.three_point_table()
        report["c3_realized"] = bool(topo.realizes_subgroup(3, [(0, 1, 2), (1, 2, 0), (2, 0, 1)]))
    code = EXIT_OK if set(labeled) == set(by_preorder) else EXIT_VERIFY
    if args.format == "text":
        out = [f"{report['labeled']} labeled topologies, {report['classes']} classes on {args.n} points"]
        for r in report.get("table", rows):
            label = str(r.get("class_id", ""))
            out.append(f"{label:>3} |C(B(X))| = {r['group_order']} ({r['group_type']})  opens={r['opens']}")
        return "\n".join(out) + "\n", code
    return emit(report), code


def _load_table(args) -> tuple[alg.CayleyTable, str]:
    if bool(args.builtin) == bool(args.table):
        raise CliError("give exactly one of --builtin or --table")
    try:
        if args.builtin:
            return alg.builtin(args.builtin), args.builtin
        return alg.CayleyTable.load(args.table), args.table
    except (KeyError, OSError, ValueError, TypeError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot load table: {exc}") from None


def cmd_group(args) -> tuple[str, int]:
    table, label = _load_table(args)
    try:
        kind = alg.validate(table)
        subset = frozenset(table.lookup(x.strip()) for x in args.subset.split(",") if x.strip())
        if args.variant == "open":
            real = alg.build_group_realization(table, subset)
        elif args.variant == "compact":
            real = alg.build_compact_realization(table, subset)
        else:
            real = alg.build_monoid_realization(table, subset)
    except (KeyError, ValueError) as exc:
        raise CliError(str(exc)) from None
    found = alg.spectrum_of_family(real)
    names = lambda xs: [table.name(x) for x in sorted(xs)]
    reports = alg.continuity_reports(real)
    law = alg.verify_composition_law(real)
    bij = alg.bijective_members(real)
    inverse_closed = kind == "group" and all(table.inverse(x) in found for x in found)
    report = {
        "table": label,
        "kind": kind,
        "variant": args.variant,
        "subset": names(subset),
        "spectrum": names(found),
        "match": found == subset,
        "composition_law": law,
        "faithful": alg.is_faithful(real),
        "bijective": names(bij),
        "all_bijective": len(bij) == table.size,
        "inverse_closed": inverse_closed,
        "witnesses": {table.name(n): r.to_json()["witnesses"] for n, r in reports.items() if not r.continuous},
    }
    code = EXIT_OK if found == subset and law else EXIT_VERIFY
    if args.format == "text":
        out = [f"{label} ({kind}), variant {args.variant}",
               f"S        = {report['subset']}", f"spectrum = {report['spectrum']}",
               f"composition law: {'ok' if law else 'FAILED'}",
               f"bijective maps: {report['bijective']}"]
        return "\n".join(out) + "\n", code
    return emit(report), code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="contspec", description="Continuity spectra of bijections and their iterates.")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("submonoid", help="canonical form and members of a submonoid of Z")
    q.add_argument("-g", "--generators", required=True, help="comma-separated integers, may be empty")
    q.add_argument("-N", type=int, default=10)
    q.add_argument("--format", choices=["json", "text"], default="json")
    q.set_defaults(func=cmd_submonoid)

    q = sub.add_parser("realize-line", help="build the integer-line space and map, compute its spectrum")
    q.add_argument("-g", "--generators", required=True)
    q.add_argument("-N", type=int, default=6)
    q.add_argument("-W", type=int, default=None, help="window half-width, default 2N")
    q.add_argument("--format", choices=["json", "text", "svg", "dot"], default="json")
    q.add_argument("--figure", metavar="PATH", help="also write the SVG figure here")
    q.set_defaults(func=cmd_realize_line)

    q = sub.add_parser("topologies", help="enumerate topologies on n points")
    q.add_argument("-n", type=int, required=True)
    q.add_argument("--format", choices=["json", "text"], default="json")
    q.set_defaults(func=cmd_topologies)

    q = sub.add_parser("group", help="realize a (monoid, submonoid) pair from a Cayley table")
    q.add_argument("--builtin", help="z1..z8, s3, d4, m2, mul01")
    q.add_argument("--table", help="Cayley table JSON file")
    q.add_argument("--subset", required=True, help="comma-separated element names or ids")
    q.add_argument("--variant", choices=["open", "compact", "monoid"], default="open")
    q.add_argument("--format", choices=["json", "text"], default="json")
    q.set_defaults(func=cmd_group)
    return p


def main(argv=None) -> int:
    level = os.environ.get("CONTSPEC_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        text, code = args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    sys.stdout.write(text)
    if code == EXIT_VERIFY:
        print("error: verification failed", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())

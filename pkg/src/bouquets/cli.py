"""Command-line front end: ``bouquets {eval,table,family,search,check}``.

Exit codes: 0 success (or interpolating for ``check``), 1 input error,
2 internal verification mismatch, 3 not interpolating (``check`` only).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from itertools import combinations

from .families import FamilyError, FamilyKind, closed_form, family_rotation, lemma_epsilon
from .polynomial import (
    PolynomialError,
    format_table,
    gap_exponents,
    is_interpolating,
    parse_polynomial,
    partial_dual_euler_genus,
    partial_dual_euler_polynomial,
    partial_dual_orientable_polynomial,
    subset_table,
    table_csv,
)
from .rotation import RotationError, format_rotation, parse_rotation
from .search import SearchConfig, SearchError, run_search

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH, EXIT_NOT_INTERPOLATING = 0, 1, 2, 3
VERIFY_GUARD = 5


class UsageError(Exception):
    pass


def _bool(v: bool) -> str:
    return "true" if v else "false"


def _poly_report(poly, fmt: str, out, extra: dict | None = None) -> None:
    gaps = gap_exponents(poly)
    extra = extra or {}
    if fmt == "json":
        payload = {**extra, "polynomial": poly.to_json(), "text": str(poly),
                   "interpolating": not gaps, "gaps": gaps}
        out.write(json.dumps(payload) + "\n")
    elif fmt == "text":
        for k, v in extra.items():
            out.write(f"{k}: {v}\n")
        out.write(f"polynomial: {poly}\n")
        out.write(f"interpolating: {_bool(not gaps)}\n")
        out.write(f"gaps: {gaps}\n")
    else:
        raise UsageError("csv output is only available for tables")


def cmd_eval(args, out) -> int:
    rot = parse_rotation(args.rotation)
    if args.orientable_genus:
        poly = partial_dual_orientable_polynomial(rot)
        kind = "orientable"
    else:
        poly = partial_dual_euler_polynomial(rot)
        kind = "euler"
    _poly_report(poly, args.format, out, {"rotation": format_rotation(rot), "genus": kind})
    return EXIT_OK


def cmd_table(args, out) -> int:
    table = subset_table(parse_rotation(args.rotation))
    if args.format == "csv":
        out.write(table_csv(table, args.ascii))
    elif args.format == "json":
        rows = [{"A": list(r.A), "eps_A": r.eps_A, "eps_Ac": r.eps_Ac, "eps_BA": r.eps_BA}
                for r in table.rows]
        out.write(json.dumps({"rotation": format_rotation(table.rotation), "rows": rows}) + "\n")
    else:
        out.write(format_table(table, args.ascii))
    return EXIT_OK


def verify_family(fam: FamilyKind) -> list[str]:
    """Brute-force checks of the closed form and per-subset case formula."""
    rot = family_rotation(fam, check=True)
    problems = []
    brute = partial_dual_euler_polynomial(rot)
    if brute != closed_form(fam):
        problems.append(f"closed form {closed_form(fam)} != brute force {brute}")
    for k in range(rot.m + 1):
        for A in combinations(rot.edges, k):
            got, want = partial_dual_euler_genus(rot, A), lemma_epsilon(fam, A)
            if got != want:
                problems.append(f"A={set(A) or '{}'}: case formula {want} != {got}")
    return problems


def cmd_family(args, out) -> int:
    fam = FamilyKind(args.kind, args.n)
    if args.verify and fam.n > VERIFY_GUARD:
        raise UsageError(f"--verify is limited to n <= {VERIFY_GUARD}")
    poly = closed_form(fam)
    extra = {"family": fam.name, "rotation": format_rotation(family_rotation(fam))}
    problems = verify_family(fam) if args.verify else []
    if args.verify:
        extra["verified"] = _bool(not problems)
    _poly_report(poly, args.format, out, extra)
    for p in problems:
        print(f"mismatch: {p}", file=sys.stderr)
    return EXIT_MISMATCH if problems else EXIT_OK


def cmd_search(args, out) -> int:
    if args.format == "csv":
        raise UsageError("csv output is only available for tables")
    cfg = SearchConfig(
        max_edges=args.max_edges,
        prime_only=not args.all,
        nonorientable_only=not args.all,
        worker_count=args.jobs,
        allow_large=args.allow_large,
    )
    report = run_search(cfg)
    if args.out:
        with open(args.out, "w") as fh:
            for rec in report.records:
                fh.write(rec.to_json() + "\n")
        summary = out
    else:
        for rec in report.records:
            out.write(rec.to_json() + "\n")
        summary = sys.stderr
    print(f"summary: {report.summary()}", file=summary)
    return EXIT_OK


def cmd_check(args, out) -> int:
    if (args.poly is None) == (args.rotation is None):
        raise UsageError("give exactly one of --poly or --rotation")
    if args.poly is not None:
        poly = parse_polynomial(args.poly)
    else:
        poly = partial_dual_euler_polynomial(parse_rotation(args.rotation))
    _poly_report(poly, args.format, out)
    return EXIT_OK if is_interpolating(poly) else EXIT_NOT_INTERPOLATING


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--format", choices=("text", "json", "csv"), default="text")
    shared.add_argument("--ascii", action="store_true", help="render the empty set as {}")

    parser = argparse.ArgumentParser(
        prog="bouquets", description="Partial-dual genus polynomials of bouquets."
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[shared], help="polynomial of a signed rotation")
    p.add_argument("rotation")
    p.add_argument("--orientable-genus", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("table", parents=[shared], help="genera of all partial duals")
    p.add_argument("rotation")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("family", parents=[shared], help="closed form for B_{2n+1} or C_{2n+2}")
    p.add_argument("kind", choices=("B", "C"))
    p.add_argument("n", type=int)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("search", parents=[shared], help="exhaustive counterexample search")
    p.add_argument("max_edges", type=int)
    p.add_argument("--all", action="store_true",
                   help="include non-prime and orientable bouquets")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.add_argument("--allow-large", action="store_true",
                   help="permit 7 edges (slow)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("check", parents=[shared], help="interpolation verdict")
    p.add_argument("--poly")
    p.add_argument("--rotation")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args, out)
    except (RotationError, PolynomialError, FamilyError, SearchError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit status: 0 on success (and all verifications passing), 1 when a
verification fails, 2 on usage or resource errors.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from typing import Optional, Sequence, TextIO

from .bracket import jones
from .cable import blackboard_cable, zero_framed_cable
from .colored import (
    a_sequence,
    colored_jones,
    eval_colored_at_root,
    reports_to_json,
    verify_theorems,
)
from .config import WIDTH_CAP_ENV, ZETA3_BRANCHES, EngineConfig
from .diagram import KnotTableEntry, diagram_to_json, parse_pd, serialize_pd
from .errors import KnotEngineError
from .goeritz import determinant
from .knotdata import BUILTIN, entry_to_json, find_entry, load_knot_table, validate_entry
from .laurent import LaurentPoly, format_poly

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def render_poly(p: LaurentPoly, variable: str) -> str:
    if variable == "A":
        return format_poly(p, "A")
    bad = [e for e in p.terms if e % 4]
    if bad:
        raise UsageError(f"exponents {sorted(bad)} are not multiples of 4; cannot render in q")
    return format_poly(LaurentPoly({-e // 4: c for e, c in p.terms.items()}), "q")


def build_parser() -> argparse.ArgumentParser:
    # global options are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--table", default=argparse.SUPPRESS, help="knot table (JSON lines) or 'builtin'")
    common.add_argument("--strict", action="store_true", default=argparse.SUPPRESS,
                        help="cross-check declared determinants on load")
    common.add_argument("--width-cap", type=int, default=argparse.SUPPRESS,
                        help=f"contraction width cap (env {WIDTH_CAP_ENV}; default 16)")
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="worker processes for verify")
    common.add_argument("--zeta3-branch", choices=sorted(ZETA3_BRANCHES), default=argparse.SUPPRESS)
    common.add_argument("--format", choices=("plain", "json"), default=argparse.SUPPRESS)
    parser = argparse.ArgumentParser(prog="coloredjones", description=__doc__.splitlines()[0],
                                     parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jones", parents=[common], help="Jones polynomial")
    p.add_argument("knot", help="table name or PD code")
    p.add_argument("--variable", choices=("A", "q"), default="A")

    p = sub.add_parser("colored-jones", parents=[common], help="colored Jones polynomial via cabling")
    p.add_argument("knot")
    p.add_argument("--color", type=int, required=True)
    p.add_argument("--eval", choices=("minus-one", "zeta3"), dest="root")
    p.add_argument("--variable", choices=("A", "q"), default="A")

    p = sub.add_parser("det", parents=[common], help="knot determinant (Goeritz matrix)")
    p.add_argument("knot")

    p = sub.add_parser("cable", parents=[common], help="emit the PD code of a cable")
    p.add_argument("knot")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--blackboard", action="store_true", help="skip the 0-framing twists")

    p = sub.add_parser("an", parents=[common], help="print a_n = sum_j (-1)^j C(n-j, j)")
    p.add_argument("n", type=int)

    p = sub.add_parser("verify", parents=[common], help="check the value patterns at q = -1 (thm1) or q = zeta3 (thm2)")
    p.add_argument("theorem", choices=("thm1", "thm2"))
    p.add_argument("--knots", default=None, help="comma-separated names (default: whole table)")
    p.add_argument("--max-color", type=int, required=True)

    p = sub.add_parser("table", parents=[common], help="list or validate the knot table")
    p.add_argument("action", nargs="?", choices=("list", "validate"), default="list")
    return parser


def _resolve_knot(text: str, table: list[KnotTableEntry]) -> KnotTableEntry:
    if "X(" in text or text.strip().startswith("loops"):
        d = parse_pd(text)
        return KnotTableEntry("<pd>", serialize_pd(d), None, d.num_crossings)
    try:
        return find_entry(table, text)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from exc


def _emit(out: TextIO, fmt: str, plain: str, obj) -> None:
    if fmt == "json":
        out.write(json.dumps(obj, indent=2) + "\n")
    else:
        out.write(plain + "\n")


def _run(args, config: EngineConfig, out: TextIO) -> int:
    fmt = config.output_format
    cap = config.width_cap
    table = load_knot_table(getattr(args, "table", BUILTIN), strict=getattr(args, "strict", False))

    if args.command == "an":
        if args.n < 0:
            raise UsageError("n must be nonnegative")
        a = a_sequence(args.n)
        _emit(out, fmt, str(a), {"n": args.n, "a": a})
        return EXIT_OK

    if args.command == "table":
        if args.action == "validate":
            for e in table:
                validate_entry(e, strict=True)
        if fmt == "json":
            out.write("[" + ",\n ".join(entry_to_json(e) for e in table) + "]\n")
        else:
            for e in table:
                det = "-" if e.declared_determinant is None else e.declared_determinant
                out.write(f"{e.name}\t{e.crossing_number}\t{det}\t{e.pd}\n")
        return EXIT_OK

    if args.command == "verify":
        if args.max_color < 1:
            raise UsageError("--max-color must be positive")
        entries = table
        if args.knots:
            entries = [_resolve_knot(k.strip(), table) for k in args.knots.split(",") if k.strip()]
        reports = verify_theorems(entries, args.theorem, args.max_color, cap=cap,
                                  jobs=config.jobs, branch=config.zeta3_branch)
        if fmt == "json":
            out.write(reports_to_json(reports) + "\n")
        else:
            for r in reports:
                for row in r.rows:
                    status = "SKIP" if row.skipped else ("PASS" if row.passed else "FAIL")
                    out.write(f"{r.theorem} {r.knot} N={row.N} computed={row.computed} "
                              f"expected={row.expected} {status}\n")
                out.write(f"{r.theorem} {r.knot} {'PASS' if r.passed else 'FAIL'}\n")
        return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL

    entry = _resolve_knot(args.knot, table)
    d = entry.diagram

    if args.command == "det":
        det = determinant(d)
        _emit(out, fmt, str(det), {"knot": entry.name, "determinant": det})
    elif args.command == "jones":
        v = jones(d, cap)
        _emit(out, fmt, render_poly(v, args.variable),
              {"knot": entry.name, "variable": "A", "polynomial": v.to_json()})
    elif args.command == "cable":
        if args.n < 0:
            raise UsageError("--n must be nonnegative")
        c = blackboard_cable(d, args.n) if args.blackboard else zero_framed_cable(d, args.n)
        _emit(out, fmt, serialize_pd(c), json.loads(diagram_to_json(c)))
    elif args.command == "colored-jones":
        if args.color < 1:
            raise UsageError("--color must be positive")
        if args.root:
            root = args.root.replace("-", "_")
            z = eval_colored_at_root(d, args.color, root, branch=config.zeta3_branch, cap=cap)
            value = z.to_int() if z.is_rational_integer() else list(z.coeffs)
            sq = z.norm_squared()
            _emit(out, fmt, str(z), {
                "knot": entry.name, "color": args.color, "root": root, "value": value,
                "squared_modulus": sq.to_int() if sq.is_rational_integer() else list(sq.coeffs),
            })
        else:
            res = colored_jones(d, args.color, entry.name, cap)
            _emit(out, fmt, render_poly(res.polynomial, args.variable), res.to_json())
    return EXIT_OK


def run_command(argv: Sequence[str], config: Optional[EngineConfig] = None,
                out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        overrides = {}
        for name, flag in (("zeta3_branch", "zeta3_branch"), ("output_format", "format"),
                           ("width_cap", "width_cap"), ("jobs", "jobs")):
            if hasattr(args, flag):
                overrides[name] = getattr(args, flag)
        if config is None:
            config = EngineConfig.from_env(**overrides)
        elif overrides:
            config = dataclasses.replace(config, **overrides)
        return _run(args, config, out)
    except (UsageError, KnotEngineError, FileNotFoundError, ValueError) as exc:
        err.write(f"coloredjones: error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()

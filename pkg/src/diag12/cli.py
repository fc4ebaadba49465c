"""Command line entry point: ``diag12 {table,check,invert,survey}``.

Exit codes: 0 on success (or when ``--expect`` matches), 1 for a negative
verdict, an ``--expect`` mismatch or a non-unit, 2 for usage, parse and
budget errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from .diagonal import (
    SCHEMA_VERSION,
    DiagonalReport,
    PairWitness,
    UnitWitness,
    diagonal_poly_enumerate,
    diagonal_poly_theorem,
    diagonal_zn_involution,
    diagonal_zn_table,
    diagonal_zn_theorem,
    check_table_budget,
)
from .polyring import BudgetExceededError, PolynomialParseError, parse_polynomial, to_text
from .units import NotAUnitError, invert_unit

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2

DEFAULT_DEGREE = 2


class UsageError(Exception):
    pass


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonnegative_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diag12",
        description="Multiplication tables, units and involutions in Z_n and Z_n[x1..xm].",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="print the multiplication table of Z_n")
    p.add_argument("n", type=_positive_int)
    p.add_argument("--highlight-ones", action="store_true", help="mark cells equal to 1")
    p.add_argument("--format", choices=("text", "csv"), default="text")

    p = sub.add_parser("check", help="decide the diagonal property")
    p.add_argument("n", type=_positive_int)
    p.add_argument("--poly", action="store_true", help="check Z_n[x1..xm] instead of Z_n")
    p.add_argument("--vars", type=_positive_int, default=None, metavar="M")
    p.add_argument("--degree", type=_nonnegative_int, default=None, metavar="D")
    p.add_argument("--method", choices=("theorem", "enumerate", "table", "involution"))
    p.add_argument("--exhaustive", action="store_true",
                   help="enumerate every polynomial instead of only unit candidates")
    p.add_argument("--expect", choices=("yes", "no"))
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("invert", help="invert a unit of Z_n[x1..xm]")
    p.add_argument("n", type=_positive_int)
    p.add_argument("polynomial", help='e.g. "2*x1 + 1"')
    p.add_argument("--vars", type=_positive_int, default=None, metavar="M")

    p = sub.add_parser("survey", help="check every modulus from 1 to N")
    p.add_argument("--max-n", type=_positive_int, required=True, metavar="N")
    p.add_argument("--poly", action="store_true")
    p.add_argument("--vars", type=_positive_int, default=None, metavar="M")
    p.add_argument("--degree", type=_nonnegative_int, default=None, metavar="D")
    p.add_argument("--json", action="store_true")
    return parser


def _yes_no(verdict: bool) -> str:
    return "yes" if verdict else "no"


def _witness_lines(witness) -> list[str]:
    if isinstance(witness, PairWitness):
        return [f"witness: {witness.a} * {witness.b} = 1"]
    if isinstance(witness, UnitWitness):
        return [f"witness: {witness.u}", f"square: {witness.square()}"]
    return []


def render_report(report: DiagonalReport) -> str:
    lines = [f"ring: {report.ring_name}"]
    if report.degree_bound is not None:
        lines.append(f"degree bound: {report.degree_bound}")
    lines.append(f"method: {report.method.value}")
    lines.append(f"verdict: {_yes_no(report.verdict)}")
    lines.extend(_witness_lines(report.witness))
    if report.search_bound_note:
        lines.append(f"note: {report.search_bound_note}")
    return "\n".join(lines)


def _resolve_check(args) -> tuple[str, int | None, int | None]:
    if not args.poly:
        if args.vars is not None or args.degree is not None:
            raise UsageError("--vars and --degree require --poly")
        if args.exhaustive:
            raise UsageError("--exhaustive requires --poly --method enumerate")
        method = args.method or "table"
        if method == "enumerate":
            raise UsageError("--method enumerate requires --poly")
        return method, None, None
    if args.method in ("table", "involution"):
        raise UsageError(f"--method {args.method} cannot be combined with --poly")
    method = args.method or ("enumerate" if args.degree is not None else "theorem")
    if method == "theorem" and args.degree is not None:
        raise UsageError("--degree applies only to --method enumerate")
    if method == "theorem" and args.exhaustive:
        raise UsageError("--exhaustive applies only to --method enumerate")
    m = args.vars or 1
    degree = DEFAULT_DEGREE if args.degree is None else args.degree
    return method, m, degree if method == "enumerate" else None


def run_check(n, method, m=None, degree=None, exhaustive=False) -> DiagonalReport:
    if method == "table":
        return diagonal_zn_table(n)
    if method == "involution":
        return diagonal_zn_involution(n)
    if method == "theorem":
        return diagonal_zn_theorem(n) if m is None else diagonal_poly_theorem(n, m)
    return diagonal_poly_enumerate(n, m, degree, exhaustive=exhaustive)


def cmd_check(args, out, err) -> int:
    method, m, degree = _resolve_check(args)
    report = run_check(args.n, method, m, degree, args.exhaustive)
    if args.json:
        print(report.to_json(indent=2), file=out)
    else:
        print(render_report(report), file=out)
    if args.expect is not None:
        if _yes_no(report.verdict) != args.expect:
            print(f"expected verdict {args.expect}, got {_yes_no(report.verdict)}", file=err)
            return EXIT_NEGATIVE
        return EXIT_OK
    return EXIT_OK if report.verdict else EXIT_NEGATIVE


def cmd_table(args, out, err) -> int:
    n = args.n
    check_table_budget(n, None)
    if args.format == "csv":
        print("a\\b," + ",".join(str(b) for b in range(n)), file=out)
        for a in range(n):
            print(f"{a}," + ",".join(str(a * b % n) for b in range(n)), file=out)
        return EXIT_OK

    one = 1 % n
    width = len(str(n - 1)) + (1 if args.highlight_ones else 0)
    label = "a\\b"
    head = max(len(label), len(str(n - 1)))
    pad = " " if args.highlight_ones else ""
    lines = [f"{label:>{head}} | " + " ".join(f"{str(b) + pad:>{width}}" for b in range(n)).rstrip()]
    lines.append("-" * (head + 1) + "+" + "-" * (len(lines[0]) - head - 2))
    off_diagonal = []
    for a in range(n):
        cells = []
        for b in range(n):
            v = a * b % n
            cell = str(v)
            if args.highlight_ones:
                cell += "*" if v == one else " "
            cells.append(f"{cell:>{width}}")
            if v == one and a != b:
                off_diagonal.append((a, b))
        lines.append(f"{a:>{head}} | " + " ".join(cells).rstrip())
    if args.highlight_ones:
        ones = ", ".join(f"({a},{b})" for a in range(n) for b in range(n) if a * b % n == one)
        lines.append(f"ones (marked *): {ones}")
        if off_diagonal:
            lines.append("off-diagonal ones: " + ", ".join(f"({a},{b})" for a, b in off_diagonal))
    lines.append(f"diagonal: {_yes_no(not off_diagonal)}")
    print("\n".join(lines), file=out)
    return EXIT_OK


def cmd_invert(args, out, err) -> int:
    f = parse_polynomial(args.polynomial, args.n, args.vars)
    try:
        cert = invert_unit(f)
    except NotAUnitError as exc:
        print(f"not a unit: {exc}", file=err)
        return EXIT_NEGATIVE
    print(to_text(cert.inverse), file=out)
    print(f"product = 1 (mod {args.n})", file=out)
    return EXIT_OK


def cmd_survey(args, out, err) -> int:
    if not args.poly and (args.vars is not None or args.degree is not None):
        raise UsageError("--vars and --degree require --poly")
    if args.poly:
        m = args.vars or 1
        method = "enumerate" if args.degree is not None else "theorem"
        mode = "Z_n[x1]" if m == 1 else f"Z_n[x1..x{m}]"
    else:
        m, method, mode = None, "table", "Z_n"
    reports = [run_check(n, method, m, args.degree) for n in range(1, args.max_n + 1)]
    positives = [r.n for r in reports if r.verdict]
    if args.json:
        doc = {
            "schema": SCHEMA_VERSION,
            "mode": mode,
            "reports": [r.to_dict() for r in reports],
            "positives": positives,
        }
        print(json.dumps(doc, indent=2), file=out)
    else:
        width = len(str(args.max_n))
        for r in reports:
            line = f"n={r.n:<{width}}  {_yes_no(r.verdict):<3}  {r.method.value}"
            if r.witness is not None:
                line += "  " + "; ".join(_witness_lines(r.witness))
            print(line, file=out)
        print(f"positives ({mode}): " + ", ".join(map(str, positives)), file=out)
    return EXIT_OK


COMMANDS = {"table": cmd_table, "check": cmd_check, "invert": cmd_invert, "survey": cmd_survey}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out, err)
    except UsageError as exc:
        parser.print_usage(err)
        print(f"diag12 {args.command}: error: {exc}", file=err)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"refused: {exc}", file=err)
        return EXIT_USAGE
    except (PolynomialParseError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()

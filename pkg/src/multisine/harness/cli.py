"""Command line interface: ``multisine verify|eval|list|table``."""

from __future__ import annotations

import argparse
import sys

import mpmath

from ..errors import MultisineError
from ..mp_core import Precision
from .evaluator import evaluate
from .registry import builtin_registry, load_identity_file
from .verify import reports_json, verify_all

# (label, expression, closed form, provenance)
SPECIAL_VALUES = [
    ("S2(1/2)", "S2(1/2)", "sqrt(2)", "Kurokawa-Koyama"),
    ("S2(1/4)", "S2(1/4)", "2^(1/8)*exp(catalan/(2*pi))", "Kurokawa-Koyama"),
    ("S3(1/2)", "S3(1/2)", "2^(1/4)*exp(-7*zeta3/(8*pi^2))", "Kurokawa zeta(3) formula"),
    ("C3(1/4)", "C3(1/4)", "2^(1/32)*exp(21*zeta3/(64*pi^2) - catalan/(4*pi))",
     "Kurokawa-Wakayama, sign of G/4pi corrected"),
    ("S3'(1)", "S3deriv1()", "-2*pi", "Kurokawa-Wakayama"),
    ("D(2)", "D(2)", "pi*e/2", "Melzak"),
    ("D(1/2)/D(-1/2)", "Dratio(1/2)", "exp(2*catalan/pi + 1/2)", "Kachi-Tzermias"),
    ("E(1/4)", "E(1/4)", "exp(1/8 - 2*catalan/pi + 7*zeta3/(2*pi^2))", "Adamchik"),
    ("prod_{k>=2} Adamchik", "shiftedAdamchik()", "(pi/4)*exp(1/2 + 7*zeta3/pi^2)",
     "Adamchik"),
    ("e^(3/2) H", "exp(3/2)*holcombeProduct()", "pi", "Holcombe"),
    ("G(3/2)/G(1/2)", "barnesGratio(1/2)", "sqrt(pi)", "Gamma(1/2)"),
    ("G(5/4)/G(3/4)", "barnesGratio(1/4)", "2^(1/8)*pi^(1/4)*exp(-catalan/(2*pi))", "Markov"),
]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="multisine",
                                     description="High-precision multiple sine identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="verify identities")
    p.add_argument("--builtin", action="store_true", help="include the built-in registry")
    p.add_argument("--file", action="append", default=[], metavar="PATH",
                   help="identity file (repeatable)")
    p.add_argument("--filter", metavar="SUBSTR", help="only identities whose name contains SUBSTR")
    p.add_argument("--digits", type=int, default=50)
    p.add_argument("--json", action="store_true", help="JSON output")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")

    p = sub.add_parser("eval", help="evaluate an expression")
    p.add_argument("expr")
    p.add_argument("--digits", type=int, default=50)

    sub.add_parser("list", help="list the built-in identities")

    p = sub.add_parser("table", help="special-value table")
    p.add_argument("--digits", type=int, default=30)
    return parser


def _cmd_verify(args) -> int:
    specs = []
    if args.builtin or not args.file:
        specs.extend(builtin_registry())
    for path in args.file:
        specs.extend(load_identity_file(path))
    if args.filter:
        specs = [s for s in specs if args.filter in s.name]
    names = [s.name for s in specs]
    duplicates = sorted({n for n in names if names.count(n) > 1})
    if duplicates:
        raise MultisineError(f"duplicate identity names: {', '.join(duplicates)}")
    reports = verify_all(specs, Precision(args.digits), jobs=args.jobs)
    if args.json:
        print(reports_json(reports, args.digits))
    else:
        for r in reports:
            print(r.line())
    return 0 if all(r.status == "PASS" for r in reports) else 1


def _cmd_eval(args) -> int:
    prec = Precision(args.digits)
    value = evaluate(args.expr, prec)
    print(mpmath.nstr(value, args.digits))
    return 0


def _cmd_list(args) -> int:
    for s in builtin_registry():
        tags = f" [{','.join(sorted(s.tags))}]" if s.tags else ""
        print(f"{s.name}{tags}: {s.lhs_text} == {s.rhs_text}")
    return 0


def _cmd_table(args) -> int:
    prec = Precision(args.digits)
    for label, expr, closed, source in SPECIAL_VALUES:
        value = evaluate(expr, prec)
        reference = evaluate(closed, prec)
        print(f"{label:<22} {mpmath.nstr(value, args.digits):<{args.digits + 4}} "
              f"= {closed}  ({source}; diff {mpmath.nstr(abs(value - reference), 3)})")
    return 0


_COMMANDS = {"verify": _cmd_verify, "eval": _cmd_eval, "list": _cmd_list, "table": _cmd_table}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (MultisineError, ValueError) as exc:
        print(f"multisine: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

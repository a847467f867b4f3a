"""Command-line front end.

Subcommands::

    psiq exact <p/q> [--format text|json|latex]
    psiq eval <p/q> [--digits D] [--format text|json]
    psiq table-check [--corpus PATH] [--digits D] [--format text|json]
    psiq compare [--qmax N] [--digits D] [--format text|json]
    psiq errata [--qmax N] [--digits D] [--format text|json]

Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage
error (including malformed rationals), 3 pole or domain error.  Results go
to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .closedform import render
from .formulas import psi_closed
from .numerics import EvalContext, eval_closed_form, format_decimal
from .rationals import PoleError, parse_rational
from .verification import (
    ComparisonReport,
    bundled_corpus_path,
    compare_formulas,
    errata_gr,
    errata_jensen,
    load_corpus,
    verify_tables,
)

__all__ = ["main", "run"]

DEFAULT_DIGITS = 50
DEFAULT_QMAX = 40

# flags that consume the following argv token
_VALUE_FLAGS = {"--digits", "--format", "--corpus", "--qmax"}


def _digits_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid digit count {text!r}") from exc
    if value < 15:
        raise argparse.ArgumentTypeError("digits must be at least 15")
    return value


def _qmax_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid qmax {text!r}") from exc
    if value < 2:
        raise argparse.ArgumentTypeError("qmax must be at least 2")
    return value


def _extract_rational_token(args: Sequence[str]) -> tuple[Optional[str], list[str]]:
    """Pull the positional rational out of an argv tail.

    argparse treats "-7/3" as an option, so the rational token (first
    non-flag token, skipping values of flags that take one) is extracted
    before argparse parses the remaining flags.
    """
    rational: Optional[str] = None
    rest: list[str] = []
    i = 0
    while i < len(args):
        token = args[i]
        if token in _VALUE_FLAGS:
            rest.append(token)
            if i + 1 < len(args):
                rest.append(args[i + 1])
                i += 2
                continue
            i += 1
            continue
        if token.startswith("--"):
            rest.append(token)  # --flag=value or unknown flag (argparse reports it)
            i += 1
            continue
        if rational is None:
            rational = token
            i += 1
            continue
        rest.append(token)
        i += 1
    return rational, rest


def _print_report(report: ComparisonReport, fmt: str) -> None:
    if fmt == "json":
        print(report.to_json())
    else:
        print(report.to_text())


def _cmd_exact(rational_text: str, fmt: str) -> int:
    try:
        r = parse_rational(rational_text)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        form = psi_closed(r)
    except PoleError:
        print("digamma pole at non-positive integer", file=sys.stderr)
        return 3
    if fmt == "json":
        print(
            json.dumps(
                {
                    "argument": str(r),
                    "closedForm": render(form, "plain"),
                    "latex": render(form, "latex"),
                }
            )
        )
    elif fmt == "latex":
        print(render(form, "latex"))
    else:
        print(render(form, "plain"))
    return 0


def _cmd_eval(rational_text: str, digits: int, fmt: str) -> int:
    try:
        r = parse_rational(rational_text)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        form = psi_closed(r)
    except PoleError:
        print("digamma pole at non-positive integer", file=sys.stderr)
        return 3
    ctx = EvalContext(digits)
    text = format_decimal(eval_closed_form(form, ctx), digits)
    if fmt == "json":
        print(json.dumps({"argument": str(r), "digits": digits, "value": text}))
    else:
        print(text)
    return 0


def _cmd_table_check(corpus: Optional[str], digits: int, fmt: str) -> int:
    path = corpus if corpus is not None else bundled_corpus_path()
    try:
        entries = load_corpus(path)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = verify_tables(entries, EvalContext(digits))
    _print_report(report, fmt)
    return 0 if report.all_pass else 1


def _cmd_compare(qmax: int, digits: int, fmt: str) -> int:
    report = compare_formulas(qmax, EvalContext(digits))
    _print_report(report, fmt)
    return 0 if report.all_pass else 1


def _cmd_errata(qmax: int, digits: int, fmt: str) -> int:
    ctx = EvalContext(digits)
    gr_report = errata_gr(qmax, ctx)
    jensen_report = errata_jensen(ctx)
    if fmt == "json":
        print(json.dumps([gr_report.to_json_dict(), jensen_report.to_json_dict()], indent=2))
    else:
        print(gr_report.to_text())
        print(jensen_report.to_text())
    return 0 if (gr_report.all_pass and jensen_report.all_pass) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="psiq",
        description="Exact closed forms and high-precision values of the"
        " digamma function at rational arguments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_exact = sub.add_parser("exact", help="print the exact closed form of psi(p/q)")
    p_exact.add_argument("--format", choices=("text", "json", "latex"), default="text")

    p_eval = sub.add_parser("eval", help="evaluate psi(p/q) to D significant digits")
    p_eval.add_argument("--digits", type=_digits_arg, default=DEFAULT_DIGITS)
    p_eval.add_argument("--format", choices=("text", "json"), default="text")

    p_table = sub.add_parser("table-check", help="verify the corpus of published values")
    p_table.add_argument("--corpus", default=None, help="corpus file (default: bundled)")
    p_table.add_argument("--digits", type=_digits_arg, default=DEFAULT_DIGITS)
    p_table.add_argument("--format", choices=("text", "json"), default="text")

    p_compare = sub.add_parser(
        "compare", help="cross-check the Gauss, Nielsen and Murty-Saradha forms"
    )
    p_compare.add_argument("--qmax", type=_qmax_arg, default=DEFAULT_QMAX)
    p_compare.add_argument("--digits", type=_digits_arg, default=DEFAULT_DIGITS)
    p_compare.add_argument("--format", choices=("text", "json"), default="text")

    p_errata = sub.add_parser(
        "errata", help="measure published-formula discrepancies (GR 8.363(6), Jensen)"
    )
    p_errata.add_argument("--qmax", type=_qmax_arg, default=DEFAULT_QMAX)
    p_errata.add_argument("--digits", type=_digits_arg, default=DEFAULT_DIGITS)
    p_errata.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Dispatch a command line; returns the process exit code."""
    # exact shift corrections can have numerators beyond the default
    # int-to-str conversion limit (e.g. `exact 10001/3`)
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()

    rational_text: Optional[str] = None
    if argv and argv[0] in ("exact", "eval"):
        rational_text, rest = _extract_rational_token(argv[1:])
        argv = [argv[0], *rest]

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.command in ("exact", "eval"):
        if rational_text is None:
            print("error: missing rational argument", file=sys.stderr)
            return 2
        if args.command == "exact":
            return _cmd_exact(rational_text, args.format)
        return _cmd_eval(rational_text, args.digits, args.format)
    if args.command == "table-check":
        return _cmd_table_check(args.corpus, args.digits, args.format)
    if args.command == "compare":
        return _cmd_compare(args.qmax, args.digits, args.format)
    if args.command == "errata":
        return _cmd_errata(args.qmax, args.digits, args.format)
    raise AssertionError(f"unhandled command {args.command!r}")


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

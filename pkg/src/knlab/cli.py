"""Command-line front end.

Exact rationals cross this boundary as strings like "5/3"; floating input
is rejected so the pipeline stays exact end to end.  Exit codes: 0 when
every check passes, 1 on a check failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from fractions import Fraction

from . import __version__
from .report import Report
from .suites import (
    FAULTS,
    bicanonical_suite,
    construct_suite,
    core_suite,
    group_suite,
    horikawa_suite,
)
from .surface import KNParams

_RATIONAL = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")

DEFAULT_PRECISION = 1e-12


def _rational(text: str) -> Fraction:
    if not _RATIONAL.match(text.strip()):
        raise argparse.ArgumentTypeError(
            f"{text!r} is not an exact rational (write it as p or p/q)"
        )
    return Fraction(text.strip())


def _legendre_parameter(text: str) -> Fraction:
    value = _rational(text)
    if value in (0, 1):
        raise argparse.ArgumentTypeError("Legendre parameter must avoid 0 and 1")
    return value


def _coeff_list(text: str) -> tuple[Fraction, ...]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 5:
        raise argparse.ArgumentTypeError("expected exactly 5 comma-separated rationals")
    coeffs = tuple(_rational(p) for p in parts)
    if all(c == 0 for c in coeffs):
        raise argparse.ArgumentTypeError("coefficients must not all vanish")
    return coeffs


def _resolve_precision(flag_value: float | None, default: float = DEFAULT_PRECISION) -> float:
    """Flag wins over the KN_PRECISION environment variable, which wins over
    the built-in default."""
    if flag_value is not None:
        return flag_value
    env = os.environ.get("KN_PRECISION")
    if env:
        try:
            value = float(env)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"bad KN_PRECISION value {env!r}") from exc
        if value <= 0:
            raise argparse.ArgumentTypeError("KN_PRECISION must be positive")
        return value
    return default


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kn-lab",
        description="Exact verification laboratory for Keum-Naie surface data.",
    )
    parser.add_argument("--version", action="version", version=f"kn-lab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output_options(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--output", metavar="PATH", help="write the report here instead of stdout")

    p_core = sub.add_parser("verify-core", help="run the full parameter-independent suite")
    add_output_options(p_core)
    p_core.add_argument(
        "--inject-fault",
        choices=FAULTS,
        help="self-test: plant a known defect and confirm the suite catches it",
    )

    p_con = sub.add_parser("construct", help="assemble a surface candidate and verify it")
    add_output_options(p_con)
    p_con.add_argument("--lambda1", type=_legendre_parameter, required=True)
    p_con.add_argument("--lambda2", type=_legendre_parameter, required=True)
    sel = p_con.add_mutually_exclusive_group(required=True)
    sel.add_argument("--coeffs", type=_coeff_list, help="c0,c1,c2,c3,c4 as exact rationals")
    sel.add_argument("--seed", type=int, help="draw random rational coefficients")
    p_con.add_argument("--precision", type=float, default=None)

    p_grp = sub.add_parser("group", help="presentation, relator check, abelianization")
    add_output_options(p_grp)
    p_grp.add_argument("--subject", choices=("gamma", "gamma1", "gamma2"), required=True)

    p_hor = sub.add_parser("horikawa", help="canonical-resolution enumeration")
    add_output_options(p_hor)
    p_hor.add_argument("--k2", type=int, default=16)
    p_hor.add_argument("--chi", type=int, default=4)
    p_hor.add_argument("--bound", type=int, default=10)

    p_bic = sub.add_parser("bicanonical", help="quadric basis, identities, nodes, degree")
    add_output_options(p_bic)
    p_bic.add_argument("--lambda1", type=_legendre_parameter, required=True)
    p_bic.add_argument("--lambda2", type=_legendre_parameter, required=True)
    p_bic.add_argument("--precision", type=float, default=None)

    return parser


def _emit(report: Report, fmt: str, output: str | None) -> None:
    text = report.to_json() if fmt == "json" else report.to_text()
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def run(args: argparse.Namespace) -> int:
    if args.command == "verify-core":
        report = core_suite(args.inject_fault)
    elif args.command == "construct":
        precision = _resolve_precision(args.precision)
        if args.coeffs is not None:
            params = KNParams(args.lambda1, args.lambda2, args.coeffs, precision)
        else:
            params = KNParams.from_seed(args.lambda1, args.lambda2, args.seed, precision)
            report_seed = args.seed
        report = construct_suite(params)
        if args.coeffs is None:
            report.params["seed"] = report_seed
    elif args.command == "group":
        report = group_suite(args.subject)
    elif args.command == "horikawa":
        report = horikawa_suite(args.k2, args.chi, args.bound)
    elif args.command == "bicanonical":
        precision = _resolve_precision(args.precision, default=1e-9)
        report = bicanonical_suite(args.lambda1, args.lambda2, precision)
    else:  # pragma: no cover - argparse enforces the choices
        raise AssertionError(args.command)

    _emit(report, args.format, args.output)
    if report.passed:
        return 0
    failure = report.first_failure()
    print(
        f"FAILED: {failure.name} = {failure.value!r} (expected {failure.expected!r})"
        f" :: {failure.ref}",
        file=sys.stderr,
    )
    return 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    try:
        return run(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

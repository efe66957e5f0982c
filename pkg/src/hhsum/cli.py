"""Command-line front end.

    hhsum eval   --kind linear -p 1 -s 1 -m 2 -k 1
    hhsum verify --kind quadratic -p 1 -s 1 -p2 1 -s2 1 -m 3 -k 2 --tol 1e-8
    hhsum suite  identities --n-max 100 --json

Exit codes: 0 success, 1 discrepancy, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

import mpmath

from . import config as _config
from .closed_forms import SumSpec, closed_value
from .errors import DomainError
from .verification.reports import (
    VERIFIED,
    exit_code,
    reports_to_csv,
    reports_to_json,
    verify,
)
from .verification.suites import SUITES, coeff_table_lines, run_suite

EXIT_OK, EXIT_DISCREPANCY, EXIT_USAGE = 0, 1, 2


def _common() -> argparse.ArgumentParser:
    # accepted before or after the subcommand; SUPPRESS keeps the later one from resetting
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--config", default=argparse.SUPPRESS, help="key=value or JSON config file")
    p.add_argument("--precision", type=int, default=argparse.SUPPRESS, help="significant digits")
    return p


def _spec_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--kind", choices=("linear", "quadratic"), default="linear")
    p.add_argument("--alt", action="store_true", help="alternating (-1)^(n+1) weight")
    p.add_argument("-p", "--p1", dest="p", type=int, required=True)
    p.add_argument("-s", "--s1", dest="s", type=int, required=True)
    p.add_argument("-p2", "--p2", dest="p2", type=int)
    p.add_argument("-s2", "--s2", dest="s2", type=int)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-k", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="hhsum",
        description="Hyperharmonic number sums: closed forms, oracle checks, suites.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", parents=[common], help="closed-form value of one series")
    _spec_args(ev)
    ev.add_argument("--json", action="store_true")

    ve = sub.add_parser("verify", parents=[common], help="closed form against the oracle")
    _spec_args(ve)
    ve.add_argument("--tol", type=float)
    ve.add_argument("--max-terms", type=int)
    ve.add_argument("--json", action="store_true")
    ve.add_argument("--csv", action="store_true")

    su = sub.add_parser("suite", parents=[common], help="run a named suite")
    su.add_argument("name", choices=(*SUITES, "all"))
    su.add_argument("--tol", type=float)
    su.add_argument("--n-max", type=int, default=200)
    su.add_argument("--r-max", type=int, default=5)
    fmt = su.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    return parser


def _spec(args: argparse.Namespace) -> SumSpec:
    if args.kind == "linear":
        if args.p2 is not None or args.s2 is not None:
            raise DomainError("-p2/-s2 only apply to --kind quadratic")
        return SumSpec("linear", args.p, args.s, args.m, args.k, args.alt)
    if args.p2 is None or args.s2 is None:
        raise DomainError("--kind quadratic needs -p2 and -s2")
    return SumSpec("quadratic", args.p, args.s, args.m, args.k, args.alt, args.p2, args.s2)


def _digits() -> int:
    return _config.get_config().precision_digits


def cmd_eval(args: argparse.Namespace) -> int:
    spec = _spec(args)
    value = closed_value(spec)
    if args.json:
        print(json.dumps({
            "id": spec.id,
            "value": mpmath.nstr(value.value, _digits()),
            "err": float(value.err),
        }))
    else:
        print(f"{spec.id} = {mpmath.nstr(value.value, _digits())} ± {mpmath.nstr(value.err, 3)}")
    return EXIT_OK


def _emit(reports, args: argparse.Namespace, single: bool = False) -> None:
    if getattr(args, "json", False):
        print(reports[0].to_json() if single else reports_to_json(reports))
    elif getattr(args, "csv", False):
        sys.stdout.write(reports_to_csv(reports))
    else:
        for r in reports:
            print(r.line())


def cmd_verify(args: argparse.Namespace) -> int:
    spec = _spec(args)
    report = verify(spec, args.tol, args.max_terms)
    _emit([report], args, single=True)
    if report.status.startswith("SKIPPED"):
        return EXIT_USAGE
    return EXIT_OK if report.status == VERIFIED else EXIT_DISCREPANCY


def cmd_suite(args: argparse.Namespace) -> int:
    for name, v in (("--n-max", args.n_max), ("--r-max", args.r_max)):
        if v < 1:
            raise DomainError(f"{name} must be >= 1")
    if args.name in ("coeffs", "all") and not (args.json or args.csv):
        print("\n".join(coeff_table_lines(args.r_max)))
    reports = run_suite(args.name, args.tol, args.n_max, args.r_max)
    _emit(reports, args)
    if not (args.json or args.csv):
        counts = {}
        for r in reports:
            key = "SKIPPED" if r.status.startswith("SKIPPED") else r.status
            counts[key] = counts.get(key, 0) + 1
        summary = ", ".join(f"{k}={v}" for k, v in sorted(counts.items()))
        print(f"suite {args.name}: {len(reports)} reports ({summary})")
    return exit_code(reports)


COMMANDS = {"eval": cmd_eval, "verify": cmd_verify, "suite": cmd_suite}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for bad usage
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    previous = _config.get_config()
    try:
        cfg = _config.config_from_sources(
            getattr(args, "config", None),
            precision_digits=getattr(args, "precision", None),
        )
    except (OSError, ValueError) as exc:
        print(f"hhsum: config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _config.set_config(cfg)
    try:
        return COMMANDS[args.command](args)
    except DomainError as exc:
        print(f"hhsum: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        _config.set_config(previous)


def run(argv: Optional[List[str]] = None) -> None:
    sys.exit(main(argv))


if __name__ == "__main__":
    run()

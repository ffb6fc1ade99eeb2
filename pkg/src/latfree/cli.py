"""Command-line front end: enumerate | construct | verify-catalog | report.

Exit codes: 0 success, 2 usage/domain error, 3 I/O failure, 4 certification
failure, 5 catalog verification failure. The LATFREE_MAX_D environment
variable raises the enumeration dimension cap (default 8).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog as catalog_mod
from .egyptian import DEFAULT_MAX_D, count_tuples, enumerate_tuples, growth_report
from .errors import (
    DimensionOutOfRange,
    InvalidInput,
    LatfreeError,
    NonPositiveComponent,
    ShapeMismatch,
    WitnessVerificationFailed,
)
from .geometry import DEFAULT_BUDGET
from .linalg import fmt_frac
from .verify import certificate_to_json, certify

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_CERT = 4
EXIT_CATALOG = 5

REPORT_MAX_D = 7


def _max_d() -> int:
    env = os.environ.get("LATFREE_MAX_D")
    if env is None:
        return DEFAULT_MAX_D
    try:
        return max(DEFAULT_MAX_D, int(env))
    except ValueError:
        return DEFAULT_MAX_D


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latfree",
        description="Enumerate unit-fraction tuples, lift them to lattice-free "
        "simplices, and emit machine-checkable certificates.",
    )
    parser.add_argument("--jobs", type=int, default=1, help="parallel workers for counting")
    parser.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_BUDGET,
        help="bounding-box point budget for brute-force enumeration",
    )
    parser.add_argument("--quiet", action="store_true", help="suppress informational output")
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate", help="list or count the tuples of one dimension")
    p_enum.add_argument("d", type=int)
    p_enum.add_argument("--out", help="write tuples to this file instead of stdout")
    p_enum.add_argument("--count-only", action="store_true")
    p_enum.add_argument("--jobs", type=int, dest="jobs_local", default=None)

    p_con = sub.add_parser("construct", help="lift a tuple and optionally certify it")
    p_con.add_argument("components", type=int, nargs="+", metavar="a")
    p_con.add_argument("--certify", action="store_true")
    p_con.add_argument("--brute-force-budget", type=int, default=None)
    p_con.add_argument("--catalog", help="append the certificate to this JSONL catalog")

    p_ver = sub.add_parser("verify-catalog", help="re-verify every entry of a catalog file")
    p_ver.add_argument("file")

    p_rep = sub.add_parser("report", help="growth table in CSV form")
    p_rep.add_argument("d_max", type=int)
    p_rep.add_argument("--csv", help="write CSV to this file instead of stdout")

    return parser


def _cmd_enumerate(args) -> int:
    jobs = args.jobs_local if args.jobs_local is not None else args.jobs
    try:
        if args.count_only:
            count = count_tuples(args.d, jobs=jobs, max_d=_max_d())
            print(count)
            return EXIT_OK
        lines = (" ".join(str(x) for x in t) for t in enumerate_tuples(args.d, max_d=_max_d()))
        if args.out:
            try:
                with open(args.out, "w", encoding="utf-8") as fh:
                    for line in lines:
                        fh.write(line + "\n")
            except OSError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return EXIT_IO
        else:
            for line in lines:
                print(line)
        return EXIT_OK
    except DimensionOutOfRange as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _cmd_construct(args) -> int:
    budget = args.brute_force_budget if args.brute_force_budget is not None else args.budget
    try:
        cert = certify(tuple(args.components), budget=budget)
    except (InvalidInput, NonPositiveComponent, ShapeMismatch) as exc:
        print(f"error: invalid tuple: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except WitnessVerificationFailed as exc:
        print(f"error: certification failed: {exc}", file=sys.stderr)
        return EXIT_CERT
    if not args.quiet:
        print("eta: " + " ".join(fmt_frac(x) for x in cert.leg_vector))
        print("kappa: " + fmt_frac(1) + " (exact)")
    if args.certify:
        print(json.dumps(certificate_to_json(cert), indent=2))
    if args.catalog:
        try:
            catalog_mod.append_entries(args.catalog, [catalog_mod.make_entry(cert)])
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_IO
    return EXIT_OK


def _cmd_verify_catalog(args) -> int:
    if not os.path.exists(args.file):
        print(f"error: no such file: {args.file}", file=sys.stderr)
        return EXIT_IO
    report = catalog_mod.verify_catalog(args.file)
    if report.total == 0 and report.passed:
        print("warning: 0 entries")
        return EXIT_OK
    if report.passed:
        print(f"ok: {report.ok}/{report.total} entries verified")
        return EXIT_OK
    lineno, reason = report.first_failure
    print(f"error: entry at line {lineno} failed verification: {reason}", file=sys.stderr)
    return EXIT_CATALOG


def _fmt_cell(x: float | None) -> str:
    return "" if x is None else f"{x:.4f}"


def _cmd_report(args) -> int:
    if args.d_max > REPORT_MAX_D:
        print(f"error: d_max={args.d_max} exceeds the report cap {REPORT_MAX_D}", file=sys.stderr)
        return EXIT_USAGE
    try:
        rows = growth_report(args.d_max, jobs=args.jobs, max_d=_max_d())
    except DimensionOutOfRange as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    lines = ["d,count,lnln_count,d_over_ln_d"]
    for r in rows:
        lines.append(f"{r.d},{r.count},{_fmt_cell(r.lnln_count)},{_fmt_cell(r.d_over_ln_d)}")
    text = "\n".join(lines) + "\n"
    if args.csv:
        try:
            with open(args.csv, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_IO
    else:
        sys.stdout.write(text)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "enumerate":
            return _cmd_enumerate(args)
        if args.command == "construct":
            return _cmd_construct(args)
        if args.command == "verify-catalog":
            return _cmd_verify_catalog(args)
        if args.command == "report":
            return _cmd_report(args)
    except LatfreeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    parser.error("unknown command")
    return EXIT_USAGE


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()

"""Command line front end.

Subcommands map one-to-one onto library operations:

    pmspec eta    --partition 3+2+1
    pmspec xi     --partition 2+1
    pmspec table  --n 3 --family pm --format csv
    pmspec verify --suite thm6 --n-max 14 [--format json|text] [--threads K]
    pmspec oracle --family pm --n 4 [--format json|text]
    pmspec scan   --n-max 12 [--progress]

Exit codes: 0 success/pass, 1 verification failure, 2 usage error.  All
numbers print in plain decimal; identical invocations produce byte-identical
json/csv output (timing is therefore excluded from json reports).
"""

from __future__ import annotations

import argparse
import os
import sys

from . import analysis, oracle
from .partitions import Partition
from .pm_spectrum import eta, pm_spectrum_table
from .sym_spectrum import sym_spectrum_table, xi


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pmspec",
        description="Exact eigenvalues of the matching and permutation derangement graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eta = sub.add_parser("eta", help="eigenvalue of the matching family for one partition")
    p_eta.add_argument("--partition", required=True, help="'+'-joined parts, e.g. 3+2+1; '0' for empty")

    p_xi = sub.add_parser("xi", help="eigenvalue of the permutation family for one partition")
    p_xi.add_argument("--partition", required=True)

    p_table = sub.add_parser("table", help="full spectrum table for one n")
    p_table.add_argument("--n", type=int, required=True)
    p_table.add_argument("--family", choices=("pm", "sym"), default="pm")
    p_table.add_argument("--format", choices=("json", "csv", "text"), default="text")

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", required=True, choices=analysis.SUITE_NAMES)
    p_verify.add_argument("--n-max", type=int, required=True)
    p_verify.add_argument("--format", choices=("json", "text"), default="text")
    p_verify.add_argument("--threads", type=int, default=os.cpu_count() or 1)

    p_oracle = sub.add_parser("oracle", help="certify a table against the real graph")
    p_oracle.add_argument("--family", choices=("pm", "sym"), default="pm")
    p_oracle.add_argument("--n", type=int, required=True)
    p_oracle.add_argument("--format", choices=("json", "text"), default="text")

    p_scan = sub.add_parser("scan", help="exploratory conjecture scan (always exit 0)")
    p_scan.add_argument("--target", choices=("conjecture2",), default="conjecture2")
    p_scan.add_argument("--n-max", type=int, required=True)
    p_scan.add_argument("--progress", action="store_true")
    p_scan.add_argument("--threads", type=int, default=os.cpu_count() or 1)

    return parser


def _cmd_eta(args) -> int:
    lam = Partition.from_text(args.partition)
    value = eta(lam)
    n, first = lam.size, (lam[0] if lam else 0)
    sign_ok = "ok" if (not lam or lam == (1,) or (-1) ** (n - first) * value.eta > 0) else "UNEXPECTED"
    print(f"partition: {lam.to_text()}")
    print(f"eta: {value.eta}")
    print(f"f: {value.f}")
    print(f"sign-pattern: {sign_ok}")
    return 0


def _cmd_xi(args) -> int:
    mu = Partition.from_text(args.partition)
    value = xi(mu)
    print(f"partition: {mu.to_text()}")
    print(f"xi: {value.xi}")
    return 0


def _cmd_table(args) -> int:
    if args.n < 1:
        return _usage_error("--n must be at least 1")
    table = pm_spectrum_table(args.n) if args.family == "pm" else sym_spectrum_table(args.n)
    if args.format == "csv":
        sys.stdout.write(table.to_csv())
    elif args.format == "json":
        sys.stdout.write(table.to_json())
    else:
        sys.stdout.write(table.to_text())
    return 0


def _cmd_verify(args) -> int:
    try:
        report = analysis.run_suite(args.suite, args.n_max, threads=args.threads)
    except ValueError as exc:
        return _usage_error(str(exc))
    if args.format == "json":
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(report.to_text())
    return 0 if report.passed else 1


def _cmd_oracle(args) -> int:
    try:
        if args.family == "pm":
            graph = oracle.build_pm_graph(args.n)
            table = pm_spectrum_table(args.n)
        else:
            graph = oracle.build_derangement_graph(args.n)
            table = sym_spectrum_table(args.n)
    except ValueError as exc:
        return _usage_error(str(exc))
    report = oracle.certify(table, graph)
    if args.format == "json":
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(report.to_text())
    return 0 if report.passed else 1


def _cmd_scan(args) -> int:
    progress = None
    if args.progress:
        def progress(n, checks):
            print(f"scan: finished n={n} ({checks} checks so far)", file=sys.stderr)
    try:
        report = analysis.scan_cross_gap_conjecture(args.n_max, progress=progress)
    except ValueError as exc:
        return _usage_error(str(exc))
    if report.failure_count:
        print("*** CONJECTURE VIOLATIONS FOUND ***")
        for item in report.failures:
            print(f"  violation: {item}")
        print(f"*** total violations: {report.failure_count} ***")
    else:
        print(f"0 violations in {report.checks_run} dominated pairs (n <= {args.n_max})")
    return 0


def _usage_error(message: str) -> int:
    print(f"pmspec: error: {message}", file=sys.stderr)
    return 2


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "eta": _cmd_eta,
        "xi": _cmd_xi,
        "table": _cmd_table,
        "verify": _cmd_verify,
        "oracle": _cmd_oracle,
        "scan": _cmd_scan,
    }
    try:
        return handlers[args.command](args)
    except ValueError as exc:
        return _usage_error(str(exc))


if __name__ == "__main__":
    sys.exit(main())

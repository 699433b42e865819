"""Command-line front end.

Subcommands: ``count``, ``sequence``, ``enumerate``, ``turan``,
``interval-count``, ``verify``, ``bench``.  Counts are printed in full
decimal -- exactness is the point.  Exit codes are a stable contract:
0 success, 1 verification failure, 2 usage error, 3 brute-force guard
exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
import time

from .bfile import bfile_from_sequence
from .counting import (
    count_schreier_direct,
    count_schreier_recurrence,
    schreier_sequence,
)
from .enumeration import (
    ORACLE_LIMIT,
    OracleLimitError,
    count_interval_bruteforce,
    count_schreier_bruteforce,
    enumerate_schreier,
)
from .sets import Ratio
from .turan import (
    interval_count_closed,
    interval_count_sum,
    turan_edges_construction,
    turan_edges_formula,
)
from .verify import run_suite

_COUNT_METHODS = {
    "oracle": count_schreier_bruteforce,
    "recurrence": count_schreier_recurrence,
    "direct": count_schreier_direct,
}

_INTERVAL_METHODS = {
    "sum": interval_count_sum,
    "closed": interval_count_closed,
    "enum": count_interval_bruteforce,
}


def cmd_count(args: argparse.Namespace) -> int:
    value = _COUNT_METHODS[args.method](args.n, Ratio(args.p, args.q))
    print(value)
    return 0


def cmd_sequence(args: argparse.Namespace) -> int:
    if args.max < 1:
        raise ValueError(f"--max must be at least 1, got {args.max}")
    sequence = schreier_sequence(Ratio(args.p, args.q), args.max)
    start = 0 if args.include_zero else args.offset
    if not 0 <= start <= args.max:
        raise ValueError(f"--offset {start} outside the computed range 0..{args.max}")
    if args.format == "csv":
        print(",".join(str(sequence[n]) for n in range(start, args.max + 1)))
    else:
        print(bfile_from_sequence(sequence, offset=start).render(), end="")
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    listing = enumerate_schreier(args.n, Ratio(args.p, args.q))
    for member in listing:
        print(member)
    return 0


def cmd_turan(args: argparse.Namespace) -> int:
    if args.method == "formula":
        print(turan_edges_formula(args.n, args.parts))
    else:
        print(turan_edges_construction(args.n, args.parts))
    return 0


def cmd_interval_count(args: argparse.Namespace) -> int:
    print(_INTERVAL_METHODS[args.method](args.n, args.p))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    reports = run_suite(args.suite, args.pmax, args.qmax, args.nmax)
    for report in reports:
        print(report.summary())
    return 0 if all(report.passed for report in reports) else 1


def cmd_bench(args: argparse.Namespace) -> int:
    """Time each counting method per n; digests double as a cross-check."""
    if args.max < 1:
        raise ValueError(f"--max must be at least 1, got {args.max}")
    ratio = Ratio(args.p, args.q)
    print("# n\tmethod\tns\tdigest")
    for n in range(1, args.max + 1):
        for method, fn in _COUNT_METHODS.items():
            if method == "oracle" and n > ORACLE_LIMIT:
                continue
            started = time.perf_counter_ns()
            value = fn(n, ratio)
            elapsed = time.perf_counter_ns() - started
            digest = hashlib.sha256(str(value).encode()).hexdigest()[:12]
            print(f"{n}\t{method}\t{elapsed}\t{digest}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schreier",
        description="Exact counting, enumeration, and verification of "
        "min-constrained set families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="one family size |S(n)| for a ratio p/q")
    count.add_argument("--p", type=int, required=True)
    count.add_argument("--q", type=int, required=True)
    count.add_argument("--n", type=int, required=True)
    count.add_argument(
        "--method",
        choices=sorted(_COUNT_METHODS),
        default="recurrence",
        help="oracle is exponential and guarded at n <= %d" % ORACLE_LIMIT,
    )
    count.set_defaults(func=cmd_count)

    sequence = sub.add_parser("sequence", help="family sizes for n = 1..max")
    sequence.add_argument("--p", type=int, required=True)
    sequence.add_argument("--q", type=int, required=True)
    sequence.add_argument("--max", type=int, required=True)
    sequence.add_argument("--format", choices=("csv", "bfile"), default="csv")
    sequence.add_argument(
        "--offset", type=int, default=1, help="first n emitted (default 1)"
    )
    sequence.add_argument(
        "--include-zero",
        action="store_true",
        help="also emit the n=0 value (which is 0 by convention)",
    )
    sequence.set_defaults(func=cmd_sequence)

    enumerate_ = sub.add_parser("enumerate", help="list every family member at n")
    enumerate_.add_argument("--p", type=int, required=True)
    enumerate_.add_argument("--q", type=int, required=True)
    enumerate_.add_argument("--n", type=int, required=True)
    enumerate_.set_defaults(func=cmd_enumerate)

    turan = sub.add_parser("turan", help="edge count of the Turán graph T(n, parts)")
    turan.add_argument("--n", type=int, required=True)
    turan.add_argument("--parts", type=int, required=True)
    turan.add_argument("--method", choices=("formula", "graph"), default="formula")
    turan.set_defaults(func=cmd_turan)

    interval = sub.add_parser(
        "interval-count", help="qualifying intervals within {1..n}"
    )
    interval.add_argument("--n", type=int, required=True)
    interval.add_argument("--p", type=int, required=True)
    interval.add_argument(
        "--method", choices=sorted(_INTERVAL_METHODS), default="closed"
    )
    interval.set_defaults(func=cmd_interval_count)

    verify = sub.add_parser("verify", help="run a verification suite over its grid")
    verify.add_argument(
        "--suite",
        choices=(
            "recurrence",
            "bijections",
            "turan-identity",
            "scale-invariance",
            "all",
        ),
        default="all",
    )
    verify.add_argument("--pmax", type=int, default=None)
    verify.add_argument("--qmax", type=int, default=None)
    verify.add_argument("--nmax", type=int, default=None)
    verify.set_defaults(func=cmd_verify)

    bench = sub.add_parser(
        "bench", help="time oracle vs recurrence vs direct for n = 1..max"
    )
    bench.add_argument("--p", type=int, required=True)
    bench.add_argument("--q", type=int, required=True)
    bench.add_argument("--max", type=int, required=True)
    bench.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OracleLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point.

Exit status: 0 on success, 1 when a check reports violations, 2 on usage
errors (including arguments outside an operation's domain).
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import __version__
from .config import Config, parse_natural
from .errors import PNTError
from .estimator import estimator_bundle
from .exactnum import format_ratio, parse_ratio
from .logs import LogVariant, all_variants
from .primes import PrimeEngine, set_engine
from .primorial import enumerate_totatives, primorial, totative_count
from .report import COLUMNS, build_table, deviation_report, parse_columns, parse_rows, render
from .representation import decompose
from .theorems import check_bertrand, check_mertens, check_squeeze_brackets, check_suzuki


def natural(text: str) -> int:
    try:
        return parse_natural(text)
    except PNTError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def ratio(text: str):
    try:
        return parse_ratio(text)
    except PNTError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _config_parent() -> argparse.ArgumentParser:
    # SUPPRESS keeps subparser defaults from clobbering values given before the subcommand
    parent = argparse.ArgumentParser(add_help=False)
    g = parent.add_argument_group("configuration (env fallback PNT_<KEY>)")
    g.add_argument("--sieve-threshold", type=natural, default=argparse.SUPPRESS)
    g.add_argument("--combinatorial-threshold", type=natural, default=argparse.SUPPRESS)
    g.add_argument("--segment-size", type=natural, default=argparse.SUPPRESS)
    g.add_argument("--totative-bound", dest="totative_enumeration_bound", type=natural, default=argparse.SUPPRESS)
    g.add_argument("--table-limit", type=natural, default=argparse.SUPPRESS)
    return parent


def build_parser() -> argparse.ArgumentParser:
    parent = _config_parent()
    parser = argparse.ArgumentParser(
        prog="pnt",
        description="Primorial forms of the prime number theorem.",
        parents=[parent],
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("pi", parents=[parent], help="exact prime count pi(x)")
    p.add_argument("x", type=natural)
    p.add_argument("--method", choices=["auto", "sieve", "combinatorial", "checkpoint"], default="auto")
    p.set_defaults(func=cmd_pi)

    p = sub.add_parser("primorial", parents=[parent], help="#(n), the product of the first n primes")
    p.add_argument("n", type=natural)
    p.set_defaults(func=cmd_primorial)

    p = sub.add_parser("totatives", parents=[parent], help="n-totatives in {2, ..., #(n)+1}")
    p.add_argument("n", type=natural)
    p.add_argument("--count", action="store_true", help="print only the count (any n)")
    p.set_defaults(func=cmd_totatives)

    p = sub.add_parser("represent", parents=[parent], help="decompose x over a succession")
    p.add_argument("x", type=natural)
    p.add_argument("--succession", choices=["primorial", "prime"], default="primorial")
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("logs", parents=[parent], help="all eleven log approximations at x")
    p.add_argument("x", type=natural)
    p.add_argument("--a-prime", type=ratio, default=1, help="a(x) for prime.parametric (default 1)")
    p.add_argument("--a-primorial", type=ratio, default=1, help="a(x) for primorial.parametric (default 1)")
    p.set_defaults(func=cmd_logs)

    p = sub.add_parser("totstar", parents=[parent], help="tot*(x) and the f, g, f°, g°, h° chain")
    p.add_argument("x", type=natural)
    p.set_defaults(func=cmd_totstar)

    p = sub.add_parser("check", parents=[parent], help="finite instance checks of the cited theorems")
    checks = p.add_subparsers(dest="check", required=True, metavar="CHECK")
    c = checks.add_parser("bertrand", parents=[parent], help="p(n+1) <= 2 p(n) - 1 for n <= N")
    c.add_argument("--max-n", type=natural, required=True)
    c.set_defaults(func=lambda a: check_bertrand(a.max_n))
    c = checks.add_parser("suzuki", parents=[parent], help="threshold for p(n+1)^m < #(n)")
    c.add_argument("--m", type=natural, required=True)
    c.add_argument("--limit", type=natural, default=100)
    c.set_defaults(func=lambda a: check_suzuki(a.m, a.limit))
    c = checks.add_parser("mertens", parents=[parent], help="prod p/(p-1) vs e^gamma ln x")
    c.add_argument("--x", type=natural, required=True)
    c.add_argument("--tolerance", type=float, default=0.01)
    c.set_defaults(func=lambda a: check_mertens(a.x, a.tolerance))
    c = checks.add_parser("squeeze", parents=[parent], help="bracket checks at random x")
    c.add_argument("--samples", type=natural, required=True)
    c.add_argument("--x-max", type=natural, required=True)
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=lambda a: check_squeeze_brackets(a.samples, a.x_max, a.seed))
    p.set_defaults(report=True)

    p = sub.add_parser("table", parents=[parent], help="pi(x) ratio tables at x = 10^k")
    p.add_argument("--rows", default="1..25", help="exponent range, e.g. 1..25 or 1,3,5")
    p.add_argument("--columns", default="all", help=f"'all' or comma list of {', '.join(COLUMNS)}")
    p.add_argument("--family", choices=["primorial", "prime"], default="primorial")
    p.add_argument("--format", dest="fmt", choices=["csv", "md"], default="csv")
    p.add_argument("--method", choices=["auto", "sieve", "combinatorial", "checkpoint"], default="auto")
    p.add_argument("--deviations", action="store_true", help="computed vs published ratios")
    p.set_defaults(func=cmd_table)
    return parser


def cmd_pi(args: argparse.Namespace) -> str:
    return str(args.engine.count_primes(args.x, args.method))


def cmd_primorial(args: argparse.Namespace) -> str:
    return str(primorial(args.n))


def cmd_totatives(args: argparse.Namespace) -> str:
    if args.count:
        return str(totative_count(args.n))
    return " ".join(map(str, enumerate_totatives(args.n)))


def cmd_represent(args: argparse.Namespace) -> str:
    return decompose(args.x, args.succession).record()


def cmd_logs(args: argparse.Namespace) -> str:
    values = all_variants(args.x, args.a_prime, args.a_primorial)
    return "\n".join(f"{v} {values[v]:.12g}" for v in LogVariant)


def cmd_totstar(args: argparse.Namespace) -> str:
    lines = []
    for key, value in estimator_bundle(args.x).as_dict().items():
        if isinstance(value, float):
            text = f"{value:.12g}"
        elif isinstance(value, int):
            text = str(value)
        else:
            text = format_ratio(value)
        lines.append(f"{key}={text}")
    return "\n".join(lines)


def cmd_table(args: argparse.Namespace) -> str:
    columns = parse_columns(args.columns)
    rows = build_table(parse_rows(args.rows), columns, args.family, args.method)
    if args.deviations:
        return deviation_report(columns, args.family, rows).rstrip("\n")
    return render(rows, columns, args.fmt).rstrip("\n")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    overrides = {
        key: getattr(args, key)
        for key in ("sieve_threshold", "combinatorial_threshold", "segment_size",
                    "totative_enumeration_bound", "table_limit")
        if hasattr(args, key)
    }
    try:
        args.engine = PrimeEngine(Config.from_env(**overrides))
        set_engine(args.engine)
        result = args.func(args)
    except PNTError as exc:
        print(f"pnt: error: {exc}", file=sys.stderr)
        return 2
    if getattr(args, "report", False):
        print(result.summary())
        print(f"elapsed {result.elapsed:.3f}s", file=sys.stderr)
        return 0 if result.passed else 1
    print(result)
    return 0


if __name__ == "__main__":
    sys.exit(main())

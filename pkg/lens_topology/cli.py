"""Command-line interface for building spaces and running the check battery."""

import argparse
import json
import logging
import sys
from typing import Optional

from lens_topology.checks import CHECKS, CheckOptions, run_checks
from lens_topology.config import DEFAULT_SETTINGS, override_settings
from lens_topology.errors import TopologyError
from lens_topology.expression import describe, parse
from lens_topology.spaces.report import space_report


def _report_error(error: TopologyError) -> int:
    print(json.dumps(error.to_dict(), ensure_ascii=False), file=sys.stderr)
    return error.exit_code


def eval_command(args: argparse.Namespace) -> int:
    """Build a space from an expression and print its report."""
    changes = {}
    if args.max_simplices is not None:
        changes["max_simplices"] = args.max_simplices
    if args.validate:
        changes["eager_validation"] = True

    try:
        expr = parse(args.expression)
        with override_settings(**changes):
            D = expr.build()
            report = space_report(
                describe(expr),
                expr.render(),
                D,
                with_homology=args.homology or args.up_to is not None or args.reduced,
                up_to=args.up_to,
                reduced=args.reduced,
            )
    except TopologyError as e:
        return _report_error(e)

    if args.csv:
        print(report.f_vector_csv(), end="")
    if args.json or not args.csv:
        print(report.to_json())
    return 0


def check_command(args: argparse.Namespace) -> int:
    """Run named checks (all by default) and print PASS/FAIL per check."""
    if args.list:
        for name, (_, description) in CHECKS.items():
            print(f"{name:24s} {description}")
        return 0

    options = CheckOptions(m=args.m, n=args.n, seed=args.seed)
    try:
        results = run_checks(args.names, options)
    except KeyError as e:
        print(f"Error: {e.args[0]}")
        print("Use 'topo check --list' to see the available checks.")
        return 1

    for result in results:
        print(result.summary())
        for failure in result.failures[:10]:
            print(f"  - {failure}")
        if len(result.failures) > 10:
            print(f"  ... {len(result.failures) - 10} more")

    failed = sum(1 for r in results if not r.passed)
    total_seconds = sum(r.seconds for r in results)
    print(f"\n{len(results) - failed}/{len(results)} checks passed ({total_seconds:.2f}s of check time)")
    return 1 if failed else 0


def main(argv: Optional[list[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="topo",
        description="Lens spaces, Milnor models and exact integral homology of Δ-sets",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  topo eval "lens 5 [1,1]" --homology --up-to 3
  topo eval "milnor Z:2 3" --homology
  topo eval "join(sphere 1, sphere 1)" --csv
  topo check wedge-lemma
  topo check lens-vs-minimal --m 5 --n 2
        """,
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Log debug output to stderr")

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    # Eval command
    eval_parser = subparsers.add_parser("eval", help="Build a space from an expression and report on it")
    eval_parser.add_argument("expression", help='Space expression, e.g. "lens 5 [1,2]"')
    eval_parser.add_argument("--homology", action="store_true", help="Include integral homology")
    eval_parser.add_argument(
        "--up-to",
        type=int,
        default=None,
        help="Highest homology degree (defaults to the dimension)",
    )
    eval_parser.add_argument("--reduced", action="store_true", help="Report reduced homology")
    eval_parser.add_argument("--json", action="store_true", help="Print the JSON report (default output)")
    eval_parser.add_argument("--csv", action="store_true", help="Print the f-vector as CSV")
    eval_parser.add_argument(
        "--max-simplices",
        type=int,
        default=None,
        help=f"Abort constructions larger than this (default {DEFAULT_SETTINGS.max_simplices})",
    )
    eval_parser.add_argument("--validate", action="store_true", help="Validate every constructed Δ-set")
    eval_parser.set_defaults(func=eval_command)

    # Check command
    check_parser = subparsers.add_parser("check", help="Run the reproducibility checks")
    check_parser.add_argument("names", nargs="*", help="Checks to run (default: all)")
    check_parser.add_argument("--m", type=int, default=None, help="Restrict the modulus grid to one value")
    check_parser.add_argument("--n", type=int, default=None, help="Restrict the dimension grid to one value")
    check_parser.add_argument("--seed", type=int, default=0, help="Seed for randomized batteries")
    check_parser.add_argument("--list", action="store_true", help="List the available checks")
    check_parser.set_defaults(func=check_command)

    args = parser.parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
        stream=sys.stderr,
    )

    if args.command is None:
        parser.print_help()
        return 1

    try:
        return args.func(args)
    except TopologyError as e:
        return _report_error(e)


if __name__ == "__main__":
    sys.exit(main())

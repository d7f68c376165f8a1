"""Command-line front end for the bracket series engine."""

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence

from identity_catalog import IDENTITY_CATALOG, get_identities_by_family
from series.coupon import METHODS
from tools.annulus_tools import expand_rational_impl
from tools.coupon_tools import coupon_expectation_impl
from tools.identity_tools import GRID_IDENTITIES, check_identity_impl
from tools.responses import is_error
from tools.series_tools import (
    evaluate_bracket_impl,
    expand_series_impl,
    revert_series_impl,
    series_coefficient_impl,
)
from utils.settings import configure_logging

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE = 2


def _rational_text(pair: Sequence[int]) -> str:
    return str(Fraction(int(pair[0]), int(pair[1])))


# ============================================================================
# SUBCOMMANDS
# ============================================================================
# Handlers return the tool response dict; _render turns it into text.

def _run_series(args: argparse.Namespace) -> Dict[str, Any]:
    return expand_series_impl(args.expression, args.order)


def _run_coeff(args: argparse.Namespace) -> Dict[str, Any]:
    return series_coefficient_impl(args.expression, args.n, args.order)


def _run_bracket(args: argparse.Namespace) -> Dict[str, Any]:
    return evaluate_bracket_impl(args.f, args.g, args.order)


def _run_revert(args: argparse.Namespace) -> Dict[str, Any]:
    return revert_series_impl(args.expression, args.order)


def _run_expand_rational(args: argparse.Namespace) -> Dict[str, Any]:
    return expand_rational_impl(
        numerator=args.num,
        poles=args.poles,
        shift=args.shift,
        inner=args.inner,
        outer=args.outer,
        start=args.start,
        stop=args.stop,
        scale=args.scale,
    )


def _run_identity(args: argparse.Namespace) -> Dict[str, Any]:
    if args.list:
        entries = get_identities_by_family(args.family) if args.family else IDENTITY_CATALOG
        return {"count": len(entries), "identities": entries}
    return check_identity_impl(args.name, args.max)


def _run_coupon(args: argparse.Namespace) -> Dict[str, Any]:
    return coupon_expectation_impl(args.probs, args.n, args.method)


def _render(command: str, result: Dict[str, Any]) -> str:
    if command in ("series", "revert", "coeff", "bracket"):
        return result["text"]
    if command == "expand-rational":
        lines = [f"annulus: {result['annulus']}"]
        for pole in result["poles"]:
            lines.append(f"pole {pole['root']} (multiplicity {pole['multiplicity']}): {pole['side']}")
        for n, pair in sorted(result["coefficients"].items(), key=lambda item: int(item[0])):
            lines.append(f"z^{n}: {_rational_text(pair)}")
        return "\n".join(lines)
    if command == "identity":
        if "identities" in result:
            return "\n".join(
                f"{name} [{entry['family']}]: {entry['statement']}"
                for name, entry in sorted(result["identities"].items())
            )
        if not result["failures"]:
            return f"{result['identity']}: all {result['checked']} points agree (max {result['max']})"
        failed = ", ".join(str(tuple(f)) for f in result["failures"])
        return f"{result['identity']}: {len(result['failures'])} of {result['checked']} points fail: {failed}"
    if command == "coupon":
        lines = [f"expected: {_rational_text(result['expected'])}"]
        for method, pair in result["methods"].items():
            lines.append(f"  {method}: {_rational_text(pair)}")
        lines.append(f"methods agree: {'true' if result['methods_agree'] else 'false'}")
        return "\n".join(lines)
    return json.dumps(result)


def _failed(command: str, result: Dict[str, Any]) -> bool:
    """Reports that completed but found a disagreement."""
    if command == "identity" and result.get("failures"):
        return True
    if command == "coupon" and not result.get("methods_agree", True):
        return True
    return False


_HANDLERS: Dict[str, Callable[[argparse.Namespace], Dict[str, Any]]] = {
    "series": _run_series,
    "coeff": _run_coeff,
    "bracket": _run_bracket,
    "revert": _run_revert,
    "expand-rational": _run_expand_rational,
    "identity": _run_identity,
    "coupon": _run_coupon,
}


# ============================================================================
# PARSER
# ============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bracket-series",
        description="Exact formal Laurent series and the bracket coefficient-of operator.",
    )
    parser.add_argument("--json", action="store_true", help="Print JSON instead of text")
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        default=None,
        help="Logging level (default BRACKET_LOG_LEVEL)",
    )

    # --json is accepted after the subcommand too
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="Print JSON instead of text")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", parents=[common], help="Expand an expression as a truncated series")
    p.add_argument("expression")
    p.add_argument("--order", type=int, default=None)

    p = sub.add_parser("coeff", parents=[common], help="Coefficient of z^n")
    p.add_argument("expression")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--order", type=int, default=None)

    p = sub.add_parser("bracket", parents=[common], help="Evaluate [F] G")
    p.add_argument("--f", required=True, help="Bracket argument, read in powers of 1/z")
    p.add_argument("--g", required=True, help="Series read in powers of z")
    p.add_argument("--order", type=int, default=None)

    p = sub.add_parser("revert", parents=[common], help="Compositional inverse of a series with valuation 1")
    p.add_argument("expression")
    p.add_argument("--order", type=int, default=None)

    p = sub.add_parser("expand-rational", parents=[common], help="Expand a factored rational function in an annulus")
    p.add_argument("--num", required=True, help="Laurent polynomial numerator")
    p.add_argument("--poles", required=True, help='Poles as "r1^m1,r2^m2"')
    p.add_argument("--shift", type=int, default=0)
    p.add_argument("--scale", default="1")
    p.add_argument("--inner", default="0")
    p.add_argument("--outer", default="inf")
    p.add_argument("--from", dest="start", type=int, default=-4)
    p.add_argument("--to", dest="stop", type=int, default=4)

    p = sub.add_parser("identity", parents=[common], help="Check an identity on a parameter grid")
    p.add_argument("name", nargs="?", choices=GRID_IDENTITIES)
    p.add_argument("--max", type=int, default=3)
    p.add_argument("--list", action="store_true", help="List the identity catalog instead")
    p.add_argument("--family", default=None, help="Restrict --list to one family")

    p = sub.add_parser("coupon", parents=[common], help="Expected trials to collect n distinct coupons")
    p.add_argument("--probs", required=True, help='Comma-separated probabilities, e.g. "1/3,1/3,1/3"')
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=METHODS + ("all",), default="all")

    return parser


# ============================================================================
# ENTRY POINTS
# ============================================================================

def cli_main(argv: Optional[List[str]] = None) -> int:
    """
    Run one subcommand and return its exit code.

    0 on success, 1 on domain errors and failed checks, 2 on usage and
    parse errors.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    if args.command == "identity" and not args.list and args.name is None:
        parser.print_usage(sys.stderr)
        print("error: identity needs a name or --list", file=sys.stderr)
        return EXIT_USAGE

    configure_logging(args.log_level)

    result = _HANDLERS[args.command](args)
    if is_error(result):
        print(f"error: {result['error']}: {result['message']}", file=sys.stderr)
        if args.json:
            print(json.dumps(result))
        return EXIT_USAGE if result["error"] == "ParseError" else EXIT_DOMAIN_ERROR

    print(json.dumps(result) if args.json else _render(args.command, result))
    return EXIT_DOMAIN_ERROR if _failed(args.command, result) else EXIT_OK


def main() -> None:
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()

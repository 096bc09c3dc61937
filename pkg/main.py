"""
Main CLI entry point for sigma-trace.

Exact trace formula computations at level one, the q-expansion oracle, class
numbers, archimedean orbital integrals and the sigma-conjugation suites.

Exit status: 0 on success, 1 when a verification fails, 2 on usage or
domain errors.
"""

import argparse
import sys
from typing import List, Optional

from config import (
    OUTPUT_MODE,
    OUTPUT_MODES,
    VERIFY_K_MAX,
    VERIFY_K_MIN,
    VERIFY_M_MAX,
    VERIFY_WORKERS,
    validate_config,
)
from cli import COMMANDS, EXIT_FAILED, EXIT_USAGE, SUITES, diagnostic, emit
from utils.logger import get_logger
from utils.exceptions import (
    ConfigurationError,
    DomainError,
    ExactnessError,
    TraceEngineError,
    UnsupportedScopeError,
)

# Set up centralized logging
logger = get_logger(__name__)

USAGE_ERRORS = (ConfigurationError, DomainError, ExactnessError, UnsupportedScopeError)


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subparser per command."""
    # Global options are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--output",
        choices=OUTPUT_MODES,
        default=argparse.SUPPRESS,
        help="Output mode: aligned table or one JSON record per line"
    )
    common.add_argument(
        "--workers",
        type=int,
        default=argparse.SUPPRESS,
        help="Worker threads for grid evaluation"
    )

    parser = argparse.ArgumentParser(
        prog="sigma-trace",
        description="sigma-trace - exact trace formula engine with Galois-conjugation checks",
        parents=[common],
    )
    subparsers = parser.add_subparsers(dest="command", help="Command to execute")

    # Trace command
    trace_parser = subparsers.add_parser("trace", parents=[common], help="Trace of T_m on S_k with its breakdown")
    trace_parser.add_argument("--k", type=int, required=True, help="Even weight >= 4")
    trace_parser.add_argument("--m", type=int, required=True, help="Hecke index >= 1")

    # Oracle command
    oracle_parser = subparsers.add_parser("oracle", parents=[common], help="Spectral oracle from q-expansions")
    oracle_parser.add_argument("--k", type=int, required=True, help="Even weight >= 4")
    oracle_parser.add_argument("--m", type=int, required=True, help="Hecke index >= 1")
    oracle_parser.add_argument("--matrix", action="store_true", help="Include the Hecke matrix")
    oracle_parser.add_argument("--charpoly", action="store_true", help="Include the characteristic polynomial")

    # Class number command
    classnum_parser = subparsers.add_parser("classnum", parents=[common], help="Hurwitz class number H(N)")
    classnum_parser.add_argument("--n", type=int, required=True, help="N >= 0")
    classnum_parser.add_argument("--forms", action="store_true", help="List the reduced forms")

    # Orbital command
    orbital_parser = subparsers.add_parser("orbital", parents=[common], help="Archimedean orbital integral")
    orbital_parser.add_argument("--d", type=int, required=True, help="Field seed; 1 for Q")
    orbital_parser.add_argument(
        "--gamma",
        type=str,
        required=True,
        help="Entries a,b,c,e as rationals or a+b*sqrt(d)"
    )
    orbital_parser.add_argument("--k", type=str, required=True, help="Weights, one per place: K or K1,K2")
    orbital_parser.add_argument("--w", type=int, required=True, help="Central exponent, same parity as the weights")

    # Equivariance command
    equivariance_parser = subparsers.add_parser(
        "equivariance", parents=[common], help="Sigma-conjugation suites"
    )
    equivariance_parser.add_argument("--suite", choices=SUITES, required=True, help="Suite to run")
    equivariance_parser.add_argument("--k-list", type=str, help="Weights: comma list or range like 4-30")
    equivariance_parser.add_argument("--m-max", type=int, help="Largest Hecke index")
    equivariance_parser.add_argument("--samples", type=int, help="Random elements per field and weight")
    equivariance_parser.add_argument("--seed", type=int, help="Random seed")

    # Verify command
    verify_parser = subparsers.add_parser("verify", parents=[common], help="Engine against oracle on a grid")
    verify_parser.add_argument("--k-min", type=int, default=VERIFY_K_MIN, help="Smallest weight")
    verify_parser.add_argument("--k-max", type=int, default=VERIFY_K_MAX, help="Largest weight")
    verify_parser.add_argument("--m-max", type=int, default=VERIFY_M_MAX, help="Largest Hecke index")

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments, execute one command and print its records.

    Returns:
        Process exit status
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else 0

    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    output = getattr(args, "output", OUTPUT_MODE)
    args.workers = getattr(args, "workers", VERIFY_WORKERS)

    try:
        validate_config()
        records, status = COMMANDS[args.command](args)
        emit(records, output)
    except USAGE_ERRORS as e:
        logger.debug("Command %s rejected: %s", args.command, e)
        diagnostic(str(e))
        return EXIT_USAGE
    except ValueError as e:
        diagnostic(f"invalid argument: {e}")
        return EXIT_USAGE
    except TraceEngineError as e:
        logger.error(f"Command {args.command} failed: {e}")
        diagnostic(str(e))
        return EXIT_FAILED

    return status


def main():
    """Main CLI entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()

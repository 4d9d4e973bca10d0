"""
Main entry point for the plethyx command line.
"""

import argparse
import logging
import sys
from typing import List, Optional

from plethyx_core import __version__
from plethyx_core.formats import parse_composition, parse_partition
from plethyx_core.interfaces import (
    FormatError,
    InvalidCornerError,
    InvalidPartitionError,
    InvalidTableauError,
    MalformedBiwordError,
    PlethyxError,
    RunnerConfigError,
)
from plethyx_core.verification import SUITES

from .commands import COMMANDS, EXIT_FAILURE, EXIT_USAGE, RunConfig

logger = logging.getLogger("plethyx")

USAGE_ERRORS = (
    FormatError,
    InvalidPartitionError,
    InvalidTableauError,
    MalformedBiwordError,
    InvalidCornerError,
    RunnerConfigError,
)


def _partition(text: str):
    try:
        return parse_partition(text)
    except FormatError as e:
        raise argparse.ArgumentTypeError(str(e))


def _composition(text: str):
    try:
        return parse_composition(text)
    except FormatError as e:
        raise argparse.ArgumentTypeError(str(e))


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got '{text}'")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=("table", "json"), default="table",
                        help="output format")
    common.add_argument("--threads", type=_positive, default=None,
                        help="worker processes (default: $PLETHYX_THREADS, then the CPU count)")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logs")

    parser = argparse.ArgumentParser(
        prog="plethyx",
        description="Split h_lambda^2 and e_lambda^2 into symmetric and anti-symmetric Schur parts.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("decompose", parents=[common], help="signed Kostka table for h or e")
    p.add_argument("--basis", choices=("h", "e"), default="h")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True, metavar="PARTITION")
    p.add_argument("--mu", type=_partition, default=None, metavar="PARTITION", help="skew inner shape")

    p = sub.add_parser("rectify", parents=[common], help="rectify a skew tableau by jeu de taquin")
    p.add_argument("--tableau", required=True, help="JSON tableau or path to a JSON file")
    p.add_argument("--trace", action="store_true", help="print every slide")

    p = sub.add_parser("rsk", parents=[common], help="RSK of a biword or RSK~ of a Burge word")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--biword", help="'u1,u2,.../v1,v2,...'")
    group.add_argument("--burge", help="'u1,u2,.../v1,v2,...' with v decreasing for equal u")

    p = sub.add_parser("enumerate", parents=[common], help="semistandard tableaux of a shape and content")
    p.add_argument("--shape", type=_partition, required=True, metavar="PARTITION")
    p.add_argument("--mu", type=_partition, default=None, metavar="PARTITION", help="skew inner shape")
    p.add_argument("--content", type=_composition, required=True, metavar="COUNTS")
    p.add_argument("--conjugate", action="store_true", help="conjugate-semistandard fillings instead")

    p = sub.add_parser("domino", parents=[common], help="Yamanouchi domino tableaux for h_n^2 or e_n^2")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--basis", choices=("h", "e"), default="h")
    p.add_argument("--render", action="store_true", help="draw each tableau")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("--list-suites", action="store_true")
    p.add_argument("--max-n", type=_positive)
    p.add_argument("--max-weight", type=_positive)
    p.add_argument("--count", type=_positive)
    p.add_argument("--seed", type=int)
    p.add_argument("--max-cells", type=_positive)
    p.add_argument("--alphabet", type=_positive)
    p.add_argument("--config-dir", help="directory of suite presets")
    return parser


def _setup_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s", force=True)


def _run_config(args: argparse.Namespace) -> RunConfig:
    values = {k: v for k, v in vars(args).items() if v is not None and k in RunConfig.__dataclass_fields__}
    return RunConfig(**values)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    _setup_logging(args.verbose)

    if args.command == "verify" and not args.list_suites and args.suite is None:
        print("plethyx verify: one of --suite or --list-suites is required", file=sys.stderr)
        return EXIT_USAGE

    cfg = _run_config(args)
    try:
        text, status = COMMANDS[cfg.command](cfg)
    except USAGE_ERRORS as e:
        print(f"plethyx {cfg.command}: {e}", file=sys.stderr)
        return EXIT_USAGE
    except PlethyxError as e:
        logger.error("%s failed: %s", cfg.command, e)
        return EXIT_FAILURE

    print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())

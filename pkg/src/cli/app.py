import argparse
import sys
from typing import Optional, Sequence

from .. import config
from ..utils.error_handler import ErrorHandler
from ..utils.logging_config import setup_logging, DebugCategory
from . import commands


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verbose", action="store_true", help="human-readable summary on stderr")
    common.add_argument("--log-file", default=config.LOG_FILE, help="also write logs to this file")
    common.add_argument(
        "--path-cap", type=int, default=None,
        help=f"simple path enumeration cap (default: ${config.PATH_CAP_ENV} or {config.DEFAULT_PATH_CAP})"
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="mmatrix",
        description="M-matrix inverses: classification, path sums, sign patterns, banded structure",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="Z-/M-matrix classification")
    p.add_argument("input", help="matrix file, '-' for stdin")
    p.set_defaults(handler=commands.cmd_classify)

    p = sub.add_parser("invert", parents=[common], help="exact inverse")
    p.add_argument("input")
    p.add_argument("--method", choices=("direct", "maybee", "both"), default="both")
    p.add_argument("--decimal", type=int, metavar="K", default=None, help="also print K-digit decimals")
    p.add_argument("--explain", type=int, nargs=2, metavar=("I", "J"), help="path-term breakdown of one entry")
    p.set_defaults(handler=commands.cmd_invert)

    p = sub.add_parser("signs", parents=[common], help="inverse sign pattern from reachability")
    p.add_argument("input")
    p.add_argument("--verify", action="store_true", help="compare with the computed inverse")
    p.add_argument("--dot", action="store_true", help="emit D(A) in DOT instead")
    p.set_defaults(handler=commands.cmd_signs)

    p = sub.add_parser("check", parents=[common], help="banded inverse conditions")
    p.add_argument("input")
    p.add_argument("which", choices=("tri", "penta"))
    p.set_defaults(handler=commands.cmd_check)

    p = sub.add_parser("hunt", parents=[common], help="search for converse counterexamples")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--budget", type=int, default=1 << 20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--checkpoint", default=None, help="JSON checkpoint for resumable hunts")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(handler=commands.cmd_hunt)

    p = sub.add_parser("dot", parents=[common], help="D(A) in DOT format")
    p.add_argument("input")
    p.set_defaults(handler=commands.cmd_dot)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(
        [DebugCategory.CLI, DebugCategory.SEARCH, DebugCategory.BANDED] if args.verbose else None,
        log_file=args.log_file,
    )
    try:
        return int(args.handler(args))
    except Exception as e:
        return int(ErrorHandler().handle_error(e, args.command))


if __name__ == "__main__":
    sys.exit(main())

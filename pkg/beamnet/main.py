"""Configures the top-level `beamnet` command and its subcommands"""

import argparse
import logging
from collections.abc import Sequence

from . import __version__, commands
from .commands.options import PRECEDENCE, add_common_options
from .environment import settings
from .exceptions import BeamnetException

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="beamnet",
        description=(
            "Deterministic simulator of self-organizing wireless nodes: region formation "
            "by lateral inhibition, centroid election and flocking-inspired sector beams."
        ),
        epilog=PRECEDENCE,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    add_common_options(parser)
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    # Setup our subcommands
    commands.trial.add_parser(subparsers)
    commands.sweep.add_parser(subparsers)
    commands.validate.add_parser(subparsers)
    commands.plot.add_parser(subparsers)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if settings.debug or args.verbose else logging.WARNING
    )
    try:
        return args.handler(args)
    except BeamnetException as e:
        logger.error(e.detail)
        return e.exit_code

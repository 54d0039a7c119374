"""`beamnet validate`: oracle comparisons and per-trial invariants"""

import argparse
import logging

from beamnet.commands.options import add_common_options, resolve_config
from beamnet.exceptions import ConfigError
from beamnet.services.validation import run_validation

logger = logging.getLogger(__name__)


def add_parser(subparsers):
    parser = subparsers.add_parser(
        "validate",
        help="check measurements against brute-force oracles and trials against invariants",
        description="Prints one `PASS|FAIL name detail` line per check and exits nonzero "
        "when any check fails.",
    )
    add_common_options(parser, suppress=True)
    parser.add_argument(
        "--trials",
        type=int,
        default=9,
        help="number of seeded trials in the invariant suite (default: 9)",
    )
    parser.add_argument(
        "--seed", type=int, default=None, help="master seed of the checks (default: 0)"
    )
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    if args.trials < 0:
        raise ConfigError("--trials cannot be negative.", keys=("trials",))
    report = run_validation(resolve_config(args), trials=args.trials)
    for check in report:
        print(check)
    if report.has_errors:
        logger.error("Validation FAILED")
        return 1
    return 0

"""`beamnet sweep`: the density by gradient grid, averaged over seeds"""

import argparse
import logging
from pathlib import Path

from beamnet.commands.options import (
    PRECEDENCE,
    add_common_options,
    add_output_option,
    add_world_options,
    prepare_output_dir,
    resolve_config,
    write_manifest,
)
from beamnet.environment import settings
from beamnet.exceptions import ConfigError
from beamnet.schemas import SummaryRow
from beamnet.services.experiment import run_sweep
from beamnet.services.reporting import (
    emit_svg_plot,
    write_diagnostics_csv,
    write_failures_csv,
    write_records_csv,
    write_summary_csv,
)
from beamnet.services.statistics import METRICS, summarize_all

logger = logging.getLogger(__name__)

DEFAULT_N_VALUES = [20, 60, 120, 200, 400]
DEFAULT_GRADIENTS = [3, 6, 10]
DEFAULT_SEEDS = 50


def add_parser(subparsers):
    parser = subparsers.add_parser(
        "sweep",
        help="run the full parameter sweep and plot its summaries",
        description="Runs every (node count, gradient, seed index) trial and writes the "
        "records, their 95% confidence summaries and one SVG per metric family.",
        epilog=PRECEDENCE + " Trial seeds derive from --seed and the seed index.",
    )
    add_common_options(parser, suppress=True)
    add_output_option(parser)
    parser.add_argument(
        "--n-values",
        type=int,
        nargs="+",
        default=DEFAULT_N_VALUES,
        metavar="N",
        help=f"node counts to sweep (default: {' '.join(map(str, DEFAULT_N_VALUES))})",
    )
    parser.add_argument(
        "--gradients",
        type=int,
        nargs="+",
        default=DEFAULT_GRADIENTS,
        metavar="G",
        help=f"gradients to sweep (default: {' '.join(map(str, DEFAULT_GRADIENTS))})",
    )
    parser.add_argument(
        "--seeds",
        type=int,
        default=DEFAULT_SEEDS,
        help=f"trials per grid cell (default: {DEFAULT_SEEDS})",
    )
    parser.add_argument(
        "--jobs",
        type=int,
        default=None,
        help="worker processes; never changes the results (default: BEAMNET_JOBS or 1)",
    )
    add_world_options(parser, exclude=("node_count", "gradient"))
    parser.set_defaults(handler=run)


def write_sweep_summaries(
    summaries: list[SummaryRow], output_dir: Path, field_size: float
):
    write_summary_csv(summaries, output_dir / "summary.csv")
    for metric in METRICS:
        emit_svg_plot(summaries, metric, output_dir / f"{metric}.svg", field_size)


def run(args: argparse.Namespace) -> int:
    if args.seeds < 1:
        raise ConfigError("--seeds must be at least 1.", keys=("seeds",))
    if any(n < 1 for n in args.n_values):
        raise ConfigError("--n-values must all be at least 1.", keys=("n_values",))
    if any(g < 1 for g in args.gradients):
        raise ConfigError("--gradients must all be at least 1.", keys=("gradients",))
    jobs = args.jobs or settings.jobs
    if jobs < 1:
        raise ConfigError("--jobs must be at least 1.", keys=("jobs",))
    base = resolve_config(args)
    output_dir = prepare_output_dir(args.output_dir)

    outcome = run_sweep(base, args.n_values, args.gradients, args.seeds, jobs=jobs)
    records = outcome.records
    write_records_csv(records, output_dir / "records.csv")
    write_diagnostics_csv(
        [result.diagnostics for result in outcome.results], output_dir / "diagnostics.csv"
    )
    write_failures_csv(outcome.failures, output_dir / "failures.csv")
    write_sweep_summaries(summarize_all(records), output_dir, base.field_size)
    write_manifest(
        base,
        "sweep",
        output_dir,
        n_values=args.n_values,
        gradients=args.gradients,
        seeds=args.seeds,
        jobs=jobs,
    )
    print(
        f"{len(records)} trials recorded, {len(outcome.failures)} failed; "
        f"artifacts in {output_dir}"
    )
    return 0

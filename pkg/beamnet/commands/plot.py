"""`beamnet plot`: re-summarize and re-plot an existing records CSV"""

import argparse
import logging
from pathlib import Path

from beamnet.commands.options import (
    add_common_options,
    prepare_output_dir,
    resolve_config,
)
from beamnet.commands.sweep import write_sweep_summaries
from beamnet.services.reporting import read_records_csv
from beamnet.services.statistics import summarize_all

logger = logging.getLogger(__name__)


def add_parser(subparsers):
    parser = subparsers.add_parser(
        "plot",
        help="rebuild summary.csv and the SVG plots from a records CSV",
        description="Reads a records CSV written by `sweep` and regenerates its summary "
        "and plots. Density on the x axis uses the field size from --config.",
    )
    add_common_options(parser, suppress=True)
    parser.add_argument(
        "--input", type=Path, required=True, help="records CSV written by `sweep`"
    )
    parser.add_argument(
        "--output-dir",
        type=Path,
        default=None,
        help="where summary.csv and the SVG files go (default: next to --input)",
    )
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    config = resolve_config(args)
    records = read_records_csv(args.input)
    output_dir = prepare_output_dir(args.output_dir or args.input.parent)
    summaries = summarize_all(records)
    write_sweep_summaries(summaries, output_dir, config.field_size)
    logger.info(f"Plotted <{len(records)}> records from <{args.input}>")
    print(f"{len(summaries)} summary rows from {len(records)} records; artifacts in {output_dir}")
    return 0

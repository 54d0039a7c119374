"""`beamnet trial`: one seeded trial with every intermediate dump"""

import argparse
import logging

from beamnet.commands.options import (
    PRECEDENCE,
    add_common_options,
    add_output_option,
    add_world_options,
    prepare_output_dir,
    resolve_config,
    write_manifest,
)
from beamnet.exceptions import ArtifactError
from beamnet.services.experiment import simulate
from beamnet.services.reporting import write_diagnostics_csv, write_records_csv
from beamnet.utils.formats import (
    beam_report_text,
    centroid_text,
    directed_edges_text,
    region_text,
    write_edge_list,
    write_placement,
    write_text,
)

logger = logging.getLogger(__name__)


def add_parser(subparsers):
    parser = subparsers.add_parser(
        "trial",
        help="run a single trial and dump every phase",
        description="Runs placement, region formation, centroid election and beamforming "
        "for one seed and writes metrics plus plain-text dumps of each phase.",
        epilog=PRECEDENCE,
    )
    add_common_options(parser, suppress=True)
    add_output_option(parser)
    parser.add_argument(
        "--trace",
        action="store_true",
        help="write the round-by-round region formation trace to trace.txt",
    )
    add_world_options(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    config = resolve_config(args)
    output_dir = prepare_output_dir(args.output_dir)
    if args.trace:
        try:
            with open(output_dir / "trace.txt", "w", encoding="utf-8") as trace:
                outcome = simulate(config, trace=trace)
        except OSError as e:
            raise ArtifactError(f"Unable to write <{output_dir / 'trace.txt'}>: {e}")
    else:
        outcome = simulate(config)

    write_records_csv([outcome.result.record], output_dir / "metrics.csv")
    write_diagnostics_csv([outcome.result.diagnostics], output_dir / "diagnostics.csv")
    write_placement(outcome.placement.positions, output_dir / "placement.txt")
    write_edge_list(outcome.omni, output_dir / "omni_edges.txt")
    write_edge_list(outcome.directional, output_dir / "directional_edges.txt")
    write_text(
        output_dir / "unidirectional_edges.txt",
        directed_edges_text(outcome.beamforming.links.directed_edges),
    )
    phase = outcome.phase
    write_text(output_dir / "regions.txt", region_text(phase.centroid_of, phase.hop_counts))
    write_text(output_dir / "centroids.txt", centroid_text(phase.regions))
    write_text(output_dir / "beams.txt", beam_report_text(outcome.beamforming.reports))
    write_manifest(config, "trial", output_dir, trace=args.trace)

    record = outcome.result.record
    print(
        f"n={record.n} gradient={record.gradient} seed={record.seed} "
        f"regions={len(phase.regions)} beams={outcome.beamforming.beams_formed} "
        f"apl {record.apl_omni:.4f} -> {record.apl_dir:.4f} "
        f"components {record.components_omni} -> {record.components_dir}"
    )
    logger.info(f"Wrote trial artifacts to <{output_dir}>")
    return 0

"""CSV and SVG artifacts of trials and sweeps

The records CSV holds one row per (trial, mode) under the fixed header `RECORD_COLUMNS`; trial-wide
values (peripheral and centroid fractions) repeat on both rows, and the omni row carries zero
unidirectional links.
"""

import logging
from collections.abc import Iterable, Sequence
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import pandas as pd  # noqa: E402

from beamnet.exceptions import ArtifactError  # noqa: E402
from beamnet.schemas import (  # noqa: E402
    GraphMode,
    MetricsRecord,
    SummaryRow,
    TrialDiagnostics,
    TrialFailure,
)
from beamnet.services.statistics import records_frame  # noqa: E402

logger = logging.getLogger(__name__)

RECORD_COLUMNS = [
    "n",
    "gradient",
    "seed",
    "mode",
    "apl",
    "cc",
    "components",
    "frac_peripheral",
    "frac_centroid",
    "unidirectional_links",
]
SUMMARY_COLUMNS = [
    "metric",
    "n",
    "gradient",
    "mode",
    "mean",
    "ci95_halfwidth",
    "sample_count",
    "insufficient",
]
METRIC_LABELS = {
    "apl": "Average path length",
    "cc": "Clustering coefficient",
    "components": "Number of components",
    "frac_peripheral": "Fraction of nodes as peripheral",
    "frac_centroid": "Fraction of nodes designated as centroid",
    "unidirectional_links": "Unidirectional links",
}


def _write_frame(frame: pd.DataFrame, path: Path):
    try:
        frame.to_csv(path, index=False, lineterminator="\n")
    except OSError as e:
        raise ArtifactError(f"Unable to write <{path}>: {e}")


def write_records_csv(records: Iterable[MetricsRecord], path: Path):
    _write_frame(records_frame(records)[RECORD_COLUMNS], path)


def read_records_csv(path: Path) -> list[MetricsRecord]:
    """Rebuilds the MetricsRecords a records CSV was written from"""
    try:
        frame = pd.read_csv(path, float_precision="round_trip")
    except (OSError, pd.errors.ParserError) as e:
        raise ArtifactError(f"Unable to read <{path}>: {e}")
    missing = [column for column in RECORD_COLUMNS if column not in frame.columns]
    if missing:
        raise ArtifactError(f"<{path}> lacks columns: {', '.join(missing)}")
    records = []
    for (n, gradient, seed), trial in frame.groupby(
        ["n", "gradient", "seed"], sort=False
    ):
        rows = {row["mode"]: row for row in trial.to_dict("records")}
        omni = rows[GraphMode.omni.value]
        directional = rows[GraphMode.directional.value]
        records.append(
            MetricsRecord(
                n=int(n),
                gradient=int(gradient),
                seed=int(seed),
                apl_omni=omni["apl"],
                apl_dir=directional["apl"],
                cc_omni=omni["cc"],
                cc_dir=directional["cc"],
                components_omni=int(omni["components"]),
                components_dir=int(directional["components"]),
                frac_peripheral=directional["frac_peripheral"],
                frac_centroid=directional["frac_centroid"],
                unidirectional_links=int(directional["unidirectional_links"]),
            )
        )
    return records


def write_summary_csv(rows: Iterable[SummaryRow], path: Path):
    frame = pd.DataFrame(
        [row.model_dump(mode="json") for row in rows], columns=SUMMARY_COLUMNS
    )
    _write_frame(frame, path)


def write_diagnostics_csv(diagnostics: Iterable[TrialDiagnostics], path: Path):
    columns = list(TrialDiagnostics.model_fields)
    frame = pd.DataFrame([d.model_dump() for d in diagnostics], columns=columns)
    _write_frame(frame, path)


def write_failures_csv(failures: Iterable[TrialFailure], path: Path):
    columns = list(TrialFailure.model_fields)
    frame = pd.DataFrame([f.model_dump() for f in failures], columns=columns)
    _write_frame(frame, path)


def emit_svg_plot(
    rows: Sequence[SummaryRow], metric: str, path: Path, field_size: float = 10.0
) -> int:
    """Mean +/- CI against density n/L^2, one series per (gradient, mode).

    Returns the number of series drawn.
    """
    selected = sorted(
        (row for row in rows if row.metric == metric),
        key=lambda row: (row.gradient, row.mode.value, row.n),
    )
    series: dict[tuple[int, str], list[SummaryRow]] = {}
    for row in selected:
        series.setdefault((row.gradient, row.mode.value), []).append(row)
    # Fixed hash salt and no date stamp keep the SVG byte-identical between runs
    with plt.rc_context({"svg.hashsalt": "beamnet", "svg.fonttype": "none"}):
        fig, ax = plt.subplots(figsize=(6.4, 4.8))
        for (gradient, mode), points in series.items():
            ax.errorbar(
                [p.n / field_size**2 for p in points],
                [p.mean for p in points],
                yerr=[p.ci95_halfwidth or 0.0 for p in points],
                marker="o" if mode == GraphMode.omni.value else "s",
                linestyle="--" if mode == GraphMode.omni.value else "-",
                capsize=3,
                label=f"g={gradient} {mode}",
            )
        ax.set_xlabel("Node density (nodes per unit area)")
        ax.set_ylabel(METRIC_LABELS.get(metric, metric))
        if series:
            ax.legend()
        try:
            fig.savefig(path, format="svg", metadata={"Date": None})
        except OSError as e:
            raise ArtifactError(f"Unable to write <{path}>: {e}")
        finally:
            plt.close(fig)
    logger.debug(f"Plotted <{len(series)}> series of <{metric}> to <{path}>")
    return len(series)

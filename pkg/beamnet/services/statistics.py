"""Per-group means with Student-t 95% confidence intervals"""

import math
from collections.abc import Iterable, Sequence

import pandas as pd
from scipy import stats

from beamnet.schemas import GraphMode, MetricsRecord, SummaryRow

METRICS = (
    "apl",
    "cc",
    "components",
    "frac_peripheral",
    "frac_centroid",
    "unidirectional_links",
)


def ci95_halfwidth(samples: Sequence[float]) -> float | None:
    """t(0.975, s - 1) * sample stddev / sqrt(s); undefined below two samples"""
    count = len(samples)
    if count < 2:
        return None
    mean = sum(samples) / count
    variance = sum((x - mean) ** 2 for x in samples) / (count - 1)
    return float(stats.t.ppf(0.975, count - 1) * math.sqrt(variance) / math.sqrt(count))


def records_frame(records: Iterable[MetricsRecord]) -> pd.DataFrame:
    """Long format: one row per (trial, mode) with every metric family as a column"""
    rows = []
    for record in records:
        for mode in GraphMode:
            row = {"n": record.n, "gradient": record.gradient, "seed": record.seed}
            row["mode"] = mode.value
            row.update({metric: record.metric(metric, mode) for metric in METRICS})
            rows.append(row)
    return pd.DataFrame(rows, columns=["n", "gradient", "seed", "mode", *METRICS])


def summarize(records: Iterable[MetricsRecord], metric: str) -> list[SummaryRow]:
    """Mean and CI half-width of `metric` for every (n, gradient, mode) group"""
    if metric not in METRICS:
        raise ValueError(f"Unknown metric <{metric}>; expected one of {', '.join(METRICS)}")
    frame = records_frame(records)
    summary = []
    for (n, gradient, mode), group in frame.groupby(["n", "gradient", "mode"], sort=True):
        samples = group[metric].astype(float).tolist()
        halfwidth = ci95_halfwidth(samples)
        summary.append(
            SummaryRow(
                metric=metric,
                n=int(n),
                gradient=int(gradient),
                mode=GraphMode(mode),
                mean=sum(samples) / len(samples),
                ci95_halfwidth=halfwidth,
                sample_count=len(samples),
                insufficient=halfwidth is None,
            )
        )
    return summary


def summarize_all(records: Sequence[MetricsRecord]) -> list[SummaryRow]:
    return [row for metric in METRICS for row in summarize(records, metric)]

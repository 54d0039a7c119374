"""Plain-text dumps of a trial

All dumps are whitespace-separated, one record per line, with floats written in their shortest
round-tripping form so that equal runs give byte-identical files.
"""

from collections.abc import Iterable, Sequence
from pathlib import Path

import numpy as np

from beamnet.exceptions import ArtifactError, InputError
from beamnet.schemas import BeamReportRow
from beamnet.utils.graph import Edge, Graph
from beamnet.utils.helpers import format_float


def write_text(path: Path, text: str):
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as e:
        raise ArtifactError(f"Unable to write <{path}>: {e}")


def read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as e:
        raise ArtifactError(f"Unable to read <{path}>: {e}")


def placement_text(positions: np.ndarray) -> str:
    """`id x y` per node"""
    return "".join(
        f"{node} {format_float(x)} {format_float(y)}\n"
        for node, (x, y) in enumerate(positions.tolist())
    )


def parse_placement_text(text: str) -> np.ndarray:
    """Inverse of `placement_text`; ids must run 0 .. N-1 in order"""
    points = []
    for line in text.splitlines():
        if not line.strip():
            continue
        try:
            node, x, y = line.split()
            node = int(node)
            point = (float(x), float(y))
        except ValueError:
            raise InputError(f"Malformed placement line: <{line}>")
        if node != len(points):
            raise InputError(f"Placement lists node <{node}> where <{len(points)}> was expected.")
        points.append(point)
    return np.array(points, dtype=float).reshape(-1, 2)


def write_placement(positions: np.ndarray, path: Path):
    write_text(path, placement_text(positions))


def read_placement(path: Path) -> np.ndarray:
    return parse_placement_text(read_text(path))


def write_edge_list(g: Graph, path: Path):
    write_text(path, g.to_edge_list_text())


def read_edge_list(path: Path) -> Graph:
    return Graph.from_edge_list_text(read_text(path))


def directed_edges_text(edges: Iterable[Edge]) -> str:
    """Unacknowledged beam coverage, `origin target` per line"""
    return "".join(f"{u} {v}\n" for u, v in sorted(edges))


def region_text(centroid_of: Sequence[int], hop_counts: Sequence[int]) -> str:
    """`node head hopcount` per node, measured from the elected centroid"""
    return "".join(
        f"{node} {head} {hops}\n"
        for node, (head, hops) in enumerate(zip(centroid_of, hop_counts))
    )


def centroid_text(regions) -> str:
    """`region_head centroid_id consensus_x consensus_y rounds` per region"""
    return "".join(
        f"{r.head} {r.centroid} {format_float(r.consensus[0])} "
        f"{format_float(r.consensus[1])} {r.rounds}\n"
        for r in regions
    )


def beam_report_text(rows: Iterable[BeamReportRow]) -> str:
    """`p_id k azimuth width range target status` per peripheral; `-` marks unset values"""
    lines = []
    for row in rows:
        target = "-" if row.target is None else str(row.target)
        lines.append(
            f"{row.peripheral} {row.elements} {format_float(row.azimuth)} "
            f"{format_float(row.width)} {format_float(row.range)} {target} {row.status.value}\n"
        )
    return "".join(lines)

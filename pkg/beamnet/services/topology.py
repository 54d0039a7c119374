from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from beamnet.schemas import WorldConfig
from beamnet.utils.graph import Graph


@dataclass(frozen=True, eq=False)
class Placement:
    """Planar node positions; row `i` holds node `i`"""

    field_size: float
    positions: np.ndarray

    def __post_init__(self):
        self.positions.setflags(write=False)

    @property
    def node_count(self) -> int:
        return len(self.positions)

    def point(self, node: int) -> tuple[float, float]:
        x, y = self.positions[node]
        return float(x), float(y)


def place_nodes(config: WorldConfig, rng: np.random.Generator) -> Placement:
    """Uniform independent coordinates in [0, L] for every node"""
    positions = rng.uniform(0.0, config.field_size, size=(config.node_count, 2))
    return Placement(field_size=config.field_size, positions=positions)


def unit_disk_graph(placement: Placement, radio_range: float) -> Graph:
    """Connects every pair within `radio_range`; the disk is closed"""
    tree = cKDTree(placement.positions)
    pairs = tree.query_pairs(r=radio_range, output_type="ndarray")
    return Graph(placement.node_count, (tuple(pair) for pair in pairs.tolist()))

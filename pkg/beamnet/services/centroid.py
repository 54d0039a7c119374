"""Centroid election inside each region

Members draw random virtual coordinates and repeatedly replace theirs with the mean over their
closed same-region neighborhood until every member holds (almost) the same point. Members whose
initial coordinate lies within epsilon of that consensus are candidates; the candidate with the
largest degree + egocentric betweenness becomes the centroid, and the region's gradient is
rebuilt around it.

The consensus of closed-neighborhood averaging is a degree-weighted mix of the initial points,
not their arithmetic mean. Only its consensus property is relied on.
"""

import logging
import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import pdist

from beamnet.exceptions import ProtocolConvergenceError
from beamnet.services.regions import RegionFormation
from beamnet.utils.graph import Graph, egocentric_betweenness, shortest_path_lengths

logger = logging.getLogger(__name__)

Point = tuple[float, float]


@dataclass(frozen=True, slots=True)
class VirtualCoordinate:
    initial: Point
    current: Point


@dataclass(frozen=True)
class RegionCentroid:
    head: int
    centroid: int
    consensus: Point
    rounds: int
    members: tuple[int, ...]


@dataclass(frozen=True)
class CentroidPhase:
    """Regions after election and gradient rebuild.

    Per-node lists are indexed by node id. `known_centroids[v]` maps centroid id to the smallest
    hopcount `v` heard for it: head-era values carried over to the centroid that replaced the
    head, updated by what the centroid broadcasts revealed.
    """

    regions: list[RegionCentroid]
    centroid_of: list[int]
    hop_counts: list[int]
    known_centroids: list[dict[int, int]]
    gradient_violations: int

    @property
    def centroids(self) -> list[int]:
        return sorted(region.centroid for region in self.regions)

    @property
    def averaging_rounds(self) -> int:
        return max((region.rounds for region in self.regions), default=0)


def assign_virtual_coordinates(
    region: Sequence[int], rng: np.random.Generator
) -> dict[int, VirtualCoordinate]:
    """Independent uniform draws from the unit square, in member order"""
    draws = rng.random((len(region), 2))
    coords = {}
    for node, (x, y) in zip(region, draws.tolist()):
        coords[node] = VirtualCoordinate(initial=(x, y), current=(x, y))
    return coords


def _averaging_operator(nodes: Sequence[int], region_subgraph: Graph) -> np.ndarray:
    """Row-stochastic matrix averaging each node with its same-region neighbors, equal weights"""
    index = {node: i for i, node in enumerate(nodes)}
    operator = np.eye(len(nodes))
    for node in nodes:
        for neighbor in region_subgraph.neighbors(node):
            if neighbor in index:
                operator[index[node], index[neighbor]] = 1.0
    return operator / operator.sum(axis=1, keepdims=True)


def _average_once(operator: np.ndarray, points: np.ndarray) -> np.ndarray:
    return operator @ points


def averaging_round(
    region_subgraph: Graph, coords: Mapping[int, VirtualCoordinate]
) -> dict[int, VirtualCoordinate]:
    """One synchronous averaging step over the closed same-region neighborhood.

    Per-node form of a single iteration of `run_averaging`, which keeps the coordinates in one
    array and the operator built once instead.
    """
    nodes = list(coords)
    current = np.array([coords[node].current for node in nodes])
    updated = _average_once(_averaging_operator(nodes, region_subgraph), current)
    return {
        node: VirtualCoordinate(initial=coords[node].initial, current=(x, y))
        for node, (x, y) in zip(nodes, updated.tolist())
    }


def _spread_below(points: np.ndarray, delta: float) -> bool:
    if len(points) < 2:
        return True
    span = np.ptp(points, axis=0)
    # Cheap bounds first: the bounding box diagonal caps the diameter and each side floors it
    if math.hypot(*span) < delta:
        return True
    if span.max() >= delta:
        return False
    return bool(pdist(points).max() < delta)


def detect_convergence(coords: Mapping[int, VirtualCoordinate], delta: float) -> bool:
    """True when the largest pairwise distance between current coordinates is below delta"""
    return _spread_below(np.array([c.current for c in coords.values()]), delta)


def run_averaging(
    region_subgraph: Graph,
    coords: Mapping[int, VirtualCoordinate],
    delta: float,
    max_rounds: int,
) -> tuple[dict[int, VirtualCoordinate], int]:
    """Averages until `detect_convergence` holds; returns final coordinates and rounds used.

    Equivalent to applying `averaging_round` until `detect_convergence`, round for round.
    """
    nodes = list(coords)
    operator = _averaging_operator(nodes, region_subgraph)
    current = np.array([coords[node].current for node in nodes])
    rounds = 0
    while not _spread_below(current, delta):
        if rounds >= max_rounds:
            raise ProtocolConvergenceError(
                f"Averaging for region of <{len(nodes)}> nodes still spread after "
                f"<{max_rounds}> rounds."
            )
        current = _average_once(operator, current)
        rounds += 1
    final = {
        node: VirtualCoordinate(initial=coords[node].initial, current=(x, y))
        for node, (x, y) in zip(nodes, current.tolist())
    }
    return final, rounds


def consensus_point(coords: Mapping[int, VirtualCoordinate]) -> Point:
    """The agreed point; members differ by less than delta, so their mean stands for it"""
    x, y = np.mean([c.current for c in coords.values()], axis=0).tolist()
    return (x, y)


def elect_centroid(
    region: Sequence[int],
    initials: Mapping[int, Point],
    consensus: Point,
    epsilon: float,
    g_topo: Graph,
) -> int:
    """Candidates within epsilon of the consensus; the best degree + ego betweenness wins.

    When no member is within epsilon the nearest member is the only candidate. Ties go to the
    lower id.
    """
    distances = {node: math.dist(initials[node], consensus) for node in region}
    candidates = [node for node in region if distances[node] <= epsilon]
    if not candidates:
        candidates = [min(region, key=lambda node: (distances[node], node))]
    return max(
        sorted(candidates),
        key=lambda node: (g_topo.degree(node) + egocentric_betweenness(g_topo, node), -node),
    )


def rebuild_gradient_from_centroid(
    region: Sequence[int], centroid: int, g_topo: Graph
) -> dict[int, int]:
    """Hop distance from the centroid to every member, inside the region's induced subgraph"""
    lengths = shortest_path_lengths(g_topo.induced(region), centroid)
    return {node: lengths[node] for node in region}


def run_centroid_phase(
    g_topo: Graph,
    formation: RegionFormation,
    gradient: int,
    epsilon: float,
    delta: float,
    rng: np.random.Generator,
    max_rounds: int = 50_000,
) -> CentroidPhase:
    """Elects a centroid per region and rebuilds every gradient around it"""
    regions = formation.regions
    region_rngs = rng.spawn(len(regions))
    elected: list[RegionCentroid] = []
    centroid_of = [0] * g_topo.node_count
    hop_counts = [0] * g_topo.node_count
    centroid_of_head: dict[int, int] = {}
    for (head, members), region_rng in zip(regions.items(), region_rngs):
        subgraph = g_topo.induced(members)
        coords = assign_virtual_coordinates(members, region_rng)
        final, rounds = run_averaging(subgraph, coords, delta, max_rounds)
        consensus = consensus_point(final)
        initials = {node: coords[node].initial for node in members}
        centroid = elect_centroid(members, initials, consensus, epsilon, g_topo)
        for node, hops in rebuild_gradient_from_centroid(members, centroid, g_topo).items():
            centroid_of[node] = centroid
            hop_counts[node] = hops
        centroid_of_head[head] = centroid
        elected.append(
            RegionCentroid(
                head=head,
                centroid=centroid,
                consensus=consensus,
                rounds=rounds,
                members=tuple(members),
            )
        )

    known_centroids = []
    for state in formation.states:
        node = state.node_id
        table: dict[int, int] = {}
        # Head-era knowledge of foreign regions now names their centroids; stale heads are gone
        for head, hops in state.known_heads.items():
            if head in centroid_of_head and head != state.head_id:
                centroid = centroid_of_head[head]
                table[centroid] = min(hops, table.get(centroid, hops))
        table[centroid_of[node]] = hop_counts[node]
        # Centroid broadcasts overheard from neighbors in other regions
        for neighbor in g_topo.neighbors(node):
            centroid = centroid_of[neighbor]
            if centroid != centroid_of[node]:
                table[centroid] = min(hop_counts[neighbor] + 1, table.get(centroid, math.inf))
        known_centroids.append(table)

    violations = sum(1 for hops in hop_counts if hops > gradient)
    if violations:
        logger.debug(f"<{violations}> nodes sit beyond the gradient after the rebuild")
    return CentroidPhase(
        regions=elected,
        centroid_of=centroid_of,
        hop_counts=hop_counts,
        known_centroids=known_centroids,
        gradient_violations=violations,
    )

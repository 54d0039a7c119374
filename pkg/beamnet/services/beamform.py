"""Flocking-inspired beamforming

Alignment picks the nodes that may beamform: region peripherals, the local maxima of the
centroid gradient. Cohesion picks what to aim at: centroids the node has no hopcount for come
first, then the farthest known foreign centroid, then the node's own centroid when it is more
than one hop away. Separation keeps neighboring peripherals apart: peripherals decide in
ascending id order, announce the arc they claim, and later neighbors may not overlap it.

Each peripheral draws its antenna element count k uniformly, which fixes the sector width 2pi/k
and its reach r0 * k^(1/alpha). The sweep steps through azimuths and the simulator, standing in
for the physical medium, reports whether a sector reaches an eligible centroid. The centroid
acknowledges with a one-time back-beam, turning that link symmetric; every other node the beam
covers only gains a unidirectional link.
"""

import logging
import math
from collections.abc import Collection, Mapping, Sequence
from dataclasses import dataclass
from enum import Enum

import numpy as np

from beamnet.exceptions import ContractViolation, InputError
from beamnet.schemas import BeamReportRow, BeamStatus, PeripheralRule, SectorBeam
from beamnet.services.centroid import CentroidPhase
from beamnet.services.topology import Placement
from beamnet.utils.geometry import TOLERANCE, TWO_PI, arcs_overlap, sector_covers, sector_mask
from beamnet.utils.graph import Edge, Graph, normalize_edge

logger = logging.getLogger(__name__)

Point = tuple[float, float]


class TargetMode(str, Enum):
    """Why a peripheral aims where it does.

    * `discovery`: centroids the node holds no hopcount for (treated as infinitely far)
    * `foreign`: the farthest centroid of another region the node knows about
    * `own`: the node's own centroid, only when it is more than one hop away
    """

    discovery = "discovery"
    foreign = "foreign"
    own = "own"


@dataclass(frozen=True)
class TargetChoice:
    mode: TargetMode
    # Unset in discovery mode, where the sweep decides which unknown centroid answers
    centroid: int | None
    hop_count: float


@dataclass(frozen=True)
class Arc:
    """An azimuth interval claimed by a peripheral"""

    center: float
    width: float


@dataclass(frozen=True)
class SweepHit:
    azimuth: float
    centroid: int


@dataclass(frozen=True)
class LinkSet:
    """Undirected links plus beam coverage that was never answered"""

    symmetric_edges: frozenset[Edge]
    directed_edges: frozenset[Edge]

    @classmethod
    def from_graph(cls, g: Graph) -> "LinkSet":
        return cls(symmetric_edges=g.edges, directed_edges=frozenset())


@dataclass(frozen=True)
class BeamformingResult:
    links: LinkSet
    beams: list[SectorBeam]
    reports: list[BeamReportRow]
    acknowledged: list[tuple[int, int]]
    claims: dict[int, Arc]

    @property
    def beams_formed(self) -> int:
        return sum(1 for row in self.reports if row.status == BeamStatus.formed)

    @property
    def beams_dropped(self) -> int:
        return sum(1 for row in self.reports if row.status == BeamStatus.dropped)


def detect_peripherals(
    region: Sequence[int],
    hop_counts: Mapping[int, int] | Sequence[int],
    g_topo: Graph,
    rule: PeripheralRule = PeripheralRule.all_,
) -> set[int]:
    """Members no same-region neighbor lies beyond; a member alone in its neighborhood counts.

    With `rule=any` a single same-region neighbor at the same or a lower hopcount suffices.
    """
    members = set(region)
    peripherals = set()
    for node in region:
        same_region = [u for u in g_topo.neighbors(node) if u in members]
        if not same_region:
            peripherals.add(node)
            continue
        no_farther = (hop_counts[u] <= hop_counts[node] for u in same_region)
        if all(no_farther) if rule == PeripheralRule.all_ else any(no_farther):
            peripherals.add(node)
    return peripherals


def sector_geometry(elements: int, radio_range: float, alpha: float) -> tuple[float, float]:
    """Width and reach of a k-element sector; k = 1 is the omnidirectional antenna"""
    if elements < 1:
        raise InputError(f"A sector needs at least one element, got <{elements}>.")
    return TWO_PI / elements, radio_range * elements ** (1 / alpha)


def choose_target(
    known_centroids: Mapping[int, int],
    self_hop: int,
    own_centroid: int,
    unknown_centroids: Collection[int] = (),
) -> TargetChoice | None:
    if unknown_centroids:
        return TargetChoice(mode=TargetMode.discovery, centroid=None, hop_count=math.inf)
    foreign = {c: hops for c, hops in known_centroids.items() if c != own_centroid}
    if foreign:
        farthest = max(foreign, key=lambda c: (foreign[c], -c))
        return TargetChoice(
            mode=TargetMode.foreign, centroid=farthest, hop_count=foreign[farthest]
        )
    if self_hop > 1:
        return TargetChoice(mode=TargetMode.own, centroid=own_centroid, hop_count=self_hop)
    return None


def sweep_for_direction(
    origin: Point,
    width: float,
    reach: float,
    centroids: Mapping[int, Point],
    claimed: Sequence[Arc],
    sweep_step: float,
) -> SweepHit | None:
    """First azimuth, stepping from 0, whose sector reaches an eligible centroid unclaimed.

    When one sector reaches several eligible centroids the lowest id answers.
    """
    for step in range(round(TWO_PI / sweep_step)):
        direction = step * sweep_step
        if any(arcs_overlap(direction, width, arc.center, arc.width) for arc in claimed):
            continue
        for centroid in sorted(centroids):
            if sector_covers(origin, direction, width, reach, centroids[centroid]):
                return SweepHit(azimuth=direction, centroid=centroid)
    return None


def apply_beam(links: LinkSet, beam: SectorBeam, placement: Placement) -> LinkSet:
    """Adds origin -> v for every covered node that is not already a symmetric neighbor"""
    covered = sector_mask(
        placement.positions, beam.origin, beam.azimuth, beam.width, beam.range
    )
    added = set()
    for node in np.flatnonzero(covered).tolist():
        if normalize_edge(beam.origin, node) not in links.symmetric_edges:
            added.add((beam.origin, node))
    if not added:
        return links
    return LinkSet(
        symmetric_edges=links.symmetric_edges,
        directed_edges=links.directed_edges | added,
    )


def acknowledge_beam(links: LinkSet, centroid: int, peripheral: int) -> LinkSet:
    """The centroid's one-time back-beam turns peripheral -> centroid into a symmetric link"""
    pair = normalize_edge(peripheral, centroid)
    if pair in links.symmetric_edges:
        return links
    if (peripheral, centroid) not in links.directed_edges:
        raise ContractViolation(
            f"No beam from <{peripheral}> reaches centroid <{centroid}> to acknowledge."
        )
    return LinkSet(
        symmetric_edges=links.symmetric_edges | {pair},
        directed_edges=links.directed_edges - {(peripheral, centroid), (centroid, peripheral)},
    )


def run_beamforming(
    placement: Placement,
    g_topo: Graph,
    phase: CentroidPhase,
    peripherals: Collection[int],
    radio_range: float,
    alpha: float,
    elements_min: int,
    elements_max: int,
    sweep_step: float,
    rng: np.random.Generator,
) -> BeamformingResult:
    """Lets every peripheral, in ascending id order, pick, sweep and raise its beam"""
    links = LinkSet.from_graph(g_topo)
    centroids = phase.centroids
    beams: list[SectorBeam] = []
    reports: list[BeamReportRow] = []
    acknowledged: list[tuple[int, int]] = []
    claims: dict[int, Arc] = {}
    for node in sorted(peripherals):
        elements = int(rng.integers(elements_min, elements_max, endpoint=True))
        width, reach = sector_geometry(elements, radio_range, alpha)
        origin = placement.point(node)
        own = phase.centroid_of[node]
        known = phase.known_centroids[node]
        unknown = [
            c
            for c in centroids
            if c != own
            and c not in known
            and math.dist(origin, placement.point(c)) <= reach + TOLERANCE
        ]
        choice = choose_target(known, phase.hop_counts[node], own, unknown)
        report = {"peripheral": node, "elements": elements, "width": width, "range": reach}
        if choice is None:
            reports.append(BeamReportRow(**report, status=BeamStatus.omni))
            continue
        eligible = unknown if choice.mode == TargetMode.discovery else [choice.centroid]
        claimed = [claims[q] for q in g_topo.neighbors(node) if q in claims]
        hit = sweep_for_direction(
            origin,
            width,
            reach,
            {c: placement.point(c) for c in eligible},
            claimed,
            sweep_step,
        )
        if hit is None:
            logger.debug(f"Peripheral <{node}> dropped its <{choice.mode.value}> beam")
            reports.append(BeamReportRow(**report, status=BeamStatus.dropped))
            continue
        beam = SectorBeam(
            origin=node, azimuth=hit.azimuth, width=width, range=reach, elements=elements
        )
        claims[node] = Arc(center=hit.azimuth, width=width)
        links = apply_beam(links, beam, placement)
        links = acknowledge_beam(links, hit.centroid, node)
        beams.append(beam)
        acknowledged.append((node, hit.centroid))
        reports.append(
            BeamReportRow(
                **report, azimuth=hit.azimuth, target=hit.centroid, status=BeamStatus.formed
            )
        )
    return BeamformingResult(
        links=links,
        beams=beams,
        reports=reports,
        acknowledged=acknowledged,
        claims=claims,
    )

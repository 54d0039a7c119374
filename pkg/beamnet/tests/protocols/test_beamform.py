import math

import numpy as np
import pytest

from beamnet.exceptions import ContractViolation, InputError
from beamnet.schemas import BeamStatus, PeripheralRule, SectorBeam, WorldConfig
from beamnet.services.beamform import (
    Arc,
    LinkSet,
    TargetMode,
    acknowledge_beam,
    apply_beam,
    choose_target,
    detect_peripherals,
    run_beamforming,
    sector_geometry,
    sweep_for_direction,
)
from beamnet.services.centroid import run_centroid_phase
from beamnet.services.experiment import simulate
from beamnet.services.regions import run_region_formation
from beamnet.services.topology import Placement, unit_disk_graph
from beamnet.tests.utils import path_graph
from beamnet.utils.geometry import TWO_PI, arcs_overlap
from beamnet.utils.graph import Graph, normalize_edge

SWEEP_STEP = TWO_PI / 64


def test_detect_peripherals_local_maxima():
    """Path ends are peripheral around a middle centroid"""
    assert detect_peripherals([0, 1, 2], {0: 1, 1: 0, 2: 1}, path_graph(3)) == {0, 2}


def test_detect_peripherals_isolated_node():
    """A node with no same-region neighbor is peripheral"""
    g = Graph(4, [(0, 1), (1, 2)])
    assert detect_peripherals([3], {3: 0}, g) == {3}
    # Node 2 only neighbors node 1, which sits in another region
    assert detect_peripherals([2], {2: 0}, g) == {2}


def test_detect_peripherals_any_rule():
    """The one-neighbor reading marks every node with a neighbor no farther out"""
    hops = {0: 0, 1: 1, 2: 2, 3: 3}
    region = [0, 1, 2, 3]
    assert detect_peripherals(region, hops, path_graph(4)) == {3}
    assert detect_peripherals(region, hops, path_graph(4), PeripheralRule.any_) == {1, 2, 3}


def test_sector_geometry():
    assert sector_geometry(1, 1.0, 2.0) == (pytest.approx(TWO_PI), pytest.approx(1.0))
    assert sector_geometry(4, 1.0, 2.0) == (pytest.approx(math.pi / 2), pytest.approx(2.0))
    assert sector_geometry(9, 1.0, 2.0) == (pytest.approx(TWO_PI / 9), pytest.approx(3.0))
    with pytest.raises(InputError):
        sector_geometry(0, 1.0, 2.0)


def test_choose_target_farthest_foreign():
    """The farthest known foreign centroid wins"""
    choice = choose_target({7: 4, 9: 5, 1: 2}, self_hop=2, own_centroid=1)
    assert (choice.mode, choice.centroid, choice.hop_count) == (TargetMode.foreign, 9, 5)


def test_choose_target_equal_hops_lowest_id():
    choice = choose_target({9: 4, 7: 4}, self_hop=2, own_centroid=1)
    assert choice.centroid == 7


def test_choose_target_unknown_first():
    """Unknown centroids count as infinitely far and are preferred"""
    choice = choose_target({7: 4}, self_hop=2, own_centroid=1, unknown_centroids=[12])
    assert choice.mode == TargetMode.discovery
    assert choice.hop_count == math.inf


def test_choose_target_own_centroid():
    """Without foreign centroids only a node more than one hop out beams home"""
    assert choose_target({1: 1}, self_hop=1, own_centroid=1) is None
    choice = choose_target({1: 3}, self_hop=3, own_centroid=1)
    assert (choice.mode, choice.centroid) == (TargetMode.own, 1)


def test_sweep_finds_first_covering_azimuth():
    hit = sweep_for_direction((0, 0), math.pi / 2, 1.0, {4: (0.5, 0.0)}, [], SWEEP_STEP)
    assert (hit.azimuth, hit.centroid) == (0.0, 4)


def test_sweep_steps_until_covered():
    hit = sweep_for_direction((0, 0), math.pi / 4, 1.2, {4: (0.5, 0.5)}, [], SWEEP_STEP)
    assert hit.azimuth == pytest.approx(math.pi / 8)


def test_sweep_respects_claimed_arcs():
    """A target only coverable inside a neighbor's claim is dropped"""
    claimed = [Arc(center=math.pi / 4, width=math.pi / 2)]
    hit = sweep_for_direction((0, 0), math.pi / 4, 1.2, {4: (0.5, 0.5)}, claimed, SWEEP_STEP)
    assert hit is None


def test_sweep_lowest_id_answers():
    centroids = {8: (0.5, 0.0), 3: (0.6, 0.1)}
    hit = sweep_for_direction((0, 0), math.pi / 2, 1.0, centroids, [], SWEEP_STEP)
    assert hit.centroid == 3


def test_sweep_out_of_reach():
    assert sweep_for_direction((0, 0), TWO_PI, 1.0, {4: (3.0, 0.0)}, [], SWEEP_STEP) is None


@pytest.fixture
def triangle_world() -> tuple[Placement, Graph]:
    positions = np.array([[0.0, 0.0], [0.5, 0.0], [0.0, 0.5], [3.0, 0.0]])
    placement = Placement(field_size=4.0, positions=positions)
    return placement, unit_disk_graph(placement, 1.0)


def _beam(range_: float) -> SectorBeam:
    return SectorBeam(origin=0, azimuth=0.0, width=math.pi / 2, range=range_, elements=4)


def test_apply_beam_skips_symmetric_neighbors(triangle_world):
    """Omni neighbors inside the sector stay symmetric"""
    placement, g = triangle_world
    links = LinkSet.from_graph(g)
    assert apply_beam(links, _beam(2.0), placement) == links


def test_apply_beam_then_acknowledge(triangle_world):
    """Coverage is directed until the centroid beams back"""
    placement, g = triangle_world
    links = apply_beam(LinkSet.from_graph(g), _beam(4.0), placement)
    assert links.directed_edges == {(0, 3)}
    links = acknowledge_beam(links, centroid=3, peripheral=0)
    assert (0, 3) in links.symmetric_edges
    assert links.directed_edges == set()
    assert g.with_edges(links.symmetric_edges).has_edge(0, 3)


def test_acknowledge_beam_contract(triangle_world):
    placement, g = triangle_world
    links = LinkSet.from_graph(g)
    assert acknowledge_beam(links, centroid=1, peripheral=0) == links
    with pytest.raises(ContractViolation):
        acknowledge_beam(links, centroid=3, peripheral=0)


def test_single_region_without_far_peripherals_stays_omni():
    """A hub with leaves one hop out forms no beams"""
    positions = np.array([[2.0, 2.0], [2.5, 2.0], [2.0, 2.5], [1.5, 2.0]])
    placement = Placement(field_size=4.0, positions=positions)
    g = unit_disk_graph(placement, 0.6)
    formation = run_region_formation(g, 3, np.random.default_rng(0))
    phase = run_centroid_phase(
        g, formation, gradient=3, epsilon=2.0, delta=1e-6, rng=np.random.default_rng(0)
    )
    peripherals = detect_peripherals(list(range(4)), phase.hop_counts, g)
    assert peripherals == {1, 2, 3}
    result = run_beamforming(
        placement,
        g,
        phase,
        peripherals,
        radio_range=0.6,
        alpha=2.0,
        elements_min=1,
        elements_max=16,
        sweep_step=SWEEP_STEP,
        rng=np.random.default_rng(0),
    )
    assert result.beams == []
    assert {row.status for row in result.reports} == {BeamStatus.omni}
    assert result.links.symmetric_edges == g.edges


def test_two_clusters_discover_each_other():
    """A peripheral reaches the centroid of an unconnected cluster and gets acknowledged"""
    positions = np.array([[1.0, 1.0], [1.5, 1.0], [2.2, 1.0], [2.7, 1.0]])
    placement = Placement(field_size=4.0, positions=positions)
    g = unit_disk_graph(placement, 0.6)
    assert g.edges == {(0, 1), (2, 3)}
    formation = run_region_formation(g, 3, np.random.default_rng(0), deterministic=True)
    phase = run_centroid_phase(
        g, formation, gradient=3, epsilon=2.0, delta=1e-6, rng=np.random.default_rng(0)
    )
    peripherals = set()
    for region in phase.regions:
        peripherals |= detect_peripherals(region.members, phase.hop_counts, g)
    result = run_beamforming(
        placement,
        g,
        phase,
        peripherals,
        radio_range=0.6,
        alpha=2.0,
        elements_min=16,
        elements_max=16,
        sweep_step=SWEEP_STEP,
        rng=np.random.default_rng(0),
    )
    assert result.beams_formed >= 1
    assert g.edges <= result.links.symmetric_edges
    final = g.with_edges(result.links.symmetric_edges)
    for peripheral, centroid in result.acknowledged:
        assert centroid in phase.centroids
        assert final.has_edge(peripheral, centroid)


@pytest.mark.parametrize("seed", [1, 2, 3, 4])
def test_beamforming_invariants_on_random_fields(seed):
    run = simulate(WorldConfig(node_count=60, seed=seed))
    beamforming = run.beamforming
    assert run.omni.edges <= beamforming.links.symmetric_edges
    symmetric = beamforming.links.symmetric_edges
    assert not [e for e in beamforming.links.directed_edges if normalize_edge(*e) in symmetric]
    assert len(beamforming.reports) == len(run.peripherals)
    targeted = [row for row in beamforming.reports if row.status != BeamStatus.omni]
    assert beamforming.beams_formed + beamforming.beams_dropped == len(targeted)
    for beam in beamforming.beams:
        assert beam.width * beam.elements == pytest.approx(TWO_PI, rel=1e-12)
        assert beam.range == pytest.approx(beam.elements ** 0.5, rel=1e-12)
    for node, arc in beamforming.claims.items():
        for neighbor in run.omni.neighbors(node):
            other = beamforming.claims.get(neighbor)
            if other is not None:
                assert not arcs_overlap(arc.center, arc.width, other.center, other.width)


def test_lower_gradient_marks_more_peripherals():
    """Smaller regions leave more nodes on a region boundary, averaged over seeds"""
    counts = {3: [], 10: []}
    for seed in range(20):
        for gradient in counts:
            run = simulate(WorldConfig(node_count=120, gradient=gradient, seed=seed))
            counts[gradient].append(len(run.peripherals))
    assert np.mean(counts[3]) > np.mean(counts[10])

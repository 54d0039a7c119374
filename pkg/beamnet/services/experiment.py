import logging
from collections.abc import Collection, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import TextIO

from beamnet.exceptions import ProtocolConvergenceError
from beamnet.schemas import (
    MetricsRecord,
    TrialDiagnostics,
    TrialFailure,
    TrialResult,
    WorldConfig,
)
from beamnet.services.beamform import (
    BeamformingResult,
    LinkSet,
    detect_peripherals,
    run_beamforming,
)
from beamnet.services.centroid import CentroidPhase, run_centroid_phase
from beamnet.services.regions import RegionFormation, run_region_formation
from beamnet.services.topology import Placement, place_nodes, unit_disk_graph
from beamnet.utils.graph import (
    Graph,
    average_path_length,
    clustering_coefficient,
    connected_components,
    largest_component_fraction,
)
from beamnet.utils.seeding import Stream, derive_seed, make_rng

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TrialRun:
    """Everything one trial produced, for dumps and invariant checks"""

    config: WorldConfig
    placement: Placement
    omni: Graph
    formation: RegionFormation
    phase: CentroidPhase
    peripherals: frozenset[int]
    beamforming: BeamformingResult
    directional: Graph
    result: TrialResult


@dataclass(frozen=True)
class SweepResult:
    results: list[TrialResult]
    failures: list[TrialFailure]

    @property
    def records(self) -> list[MetricsRecord]:
        return [result.record for result in self.results]


def compute_metrics(
    omni: Graph,
    final: LinkSet,
    region_count: int,
    peripherals: Collection[int],
    gradient: int,
    seed: int,
) -> MetricsRecord:
    """Measures the omnidirectional graph and the symmetric part of the final link set"""
    # Unidirectional coverage never enters the undirected metrics
    directional = omni.with_edges(final.symmetric_edges)
    n = omni.node_count
    return MetricsRecord(
        n=n,
        gradient=gradient,
        seed=seed,
        apl_omni=average_path_length(omni),
        apl_dir=average_path_length(directional),
        cc_omni=clustering_coefficient(omni),
        cc_dir=clustering_coefficient(directional),
        components_omni=len(connected_components(omni)),
        components_dir=len(connected_components(directional)),
        frac_peripheral=len(peripherals) / n,
        frac_centroid=region_count / n,
        unidirectional_links=len(final.directed_edges),
    )


def simulate(config: WorldConfig, trace: TextIO | None = None) -> TrialRun:
    """Placement, unit-disk graph, regions, centroids, beams and metrics for one seed"""
    placement = place_nodes(config, make_rng(config.seed, Stream.placement))
    omni = unit_disk_graph(placement, config.radio_range)
    formation = run_region_formation(
        omni,
        config.gradient,
        make_rng(config.seed, Stream.regions),
        max_rounds=config.engine_max_rounds,
        deterministic=config.deterministic_ties,
        trace=trace,
    )
    phase = run_centroid_phase(
        omni,
        formation,
        gradient=config.gradient,
        epsilon=config.epsilon,
        delta=config.delta,
        rng=make_rng(config.seed, Stream.coordinates),
        max_rounds=config.averaging_max_rounds,
    )
    peripherals: set[int] = set()
    for region in phase.regions:
        peripherals |= detect_peripherals(
            region.members, phase.hop_counts, omni, config.peripheral_rule
        )
    beamforming = run_beamforming(
        placement,
        omni,
        phase,
        peripherals,
        radio_range=config.radio_range,
        alpha=config.alpha,
        elements_min=config.elements_min,
        elements_max=config.elements_max,
        sweep_step=config.sweep_step,
        rng=make_rng(config.seed, Stream.beams),
    )
    record = compute_metrics(
        omni,
        beamforming.links,
        region_count=len(phase.regions),
        peripherals=peripherals,
        gradient=config.gradient,
        seed=config.seed,
    )
    directional = omni.with_edges(beamforming.links.symmetric_edges)
    diagnostics = TrialDiagnostics(
        n=config.node_count,
        gradient=config.gradient,
        seed=config.seed,
        regions=len(phase.regions),
        peripherals=len(peripherals),
        beams_formed=beamforming.beams_formed,
        beams_dropped=beamforming.beams_dropped,
        gradient_violations=phase.gradient_violations,
        formation_rounds=formation.rounds,
        averaging_rounds=phase.averaging_rounds,
        dropped_messages=formation.dropped_messages,
        reselections=formation.reselections,
        largest_component_omni=largest_component_fraction(omni),
        largest_component_dir=largest_component_fraction(directional),
    )
    return TrialRun(
        config=config,
        placement=placement,
        omni=omni,
        formation=formation,
        phase=phase,
        peripherals=frozenset(peripherals),
        beamforming=beamforming,
        directional=directional,
        result=TrialResult(record=record, diagnostics=diagnostics),
    )


def run_trial(config: WorldConfig) -> TrialResult:
    return simulate(config).result


def _run_cell(config: WorldConfig) -> TrialResult | TrialFailure:
    """Sweep worker; protocol failures become records instead of aborting the sweep"""
    try:
        return run_trial(config)
    except ProtocolConvergenceError as e:
        return TrialFailure(
            n=config.node_count, gradient=config.gradient, seed=config.seed, reason=e.detail
        )


def sweep_configs(
    base: WorldConfig, n_values: Sequence[int], gradients: Sequence[int], seeds: int
) -> list[WorldConfig]:
    """Every (n, gradient, seed index) cell; seed index `i` runs at `derive_seed(base.seed, i)`"""
    trial_seeds = [derive_seed(base.seed, index) for index in range(seeds)]
    return [
        base.for_trial(node_count=n, gradient=gradient, seed=seed)
        for n in n_values
        for gradient in gradients
        for seed in trial_seeds
    ]


def run_sweep(
    base: WorldConfig,
    n_values: Sequence[int],
    gradients: Sequence[int],
    seeds: int,
    jobs: int = 1,
) -> SweepResult:
    """Runs the full cross product; results come back in cell order whatever `jobs` is"""
    configs = sweep_configs(base, n_values, gradients, seeds)
    logger.info(f"Running <{len(configs)}> trials on <{jobs}> workers")
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            outcomes = list(executor.map(_run_cell, configs, chunksize=4))
    else:
        outcomes = [_run_cell(config) for config in configs]
    results = [x for x in outcomes if isinstance(x, TrialResult)]
    failures = [x for x in outcomes if isinstance(x, TrialFailure)]
    for failure in failures:
        logger.warning(
            f"Excluded trial n=<{failure.n}> gradient=<{failure.gradient}> "
            f"seed=<{failure.seed}>: {failure.reason}"
        )
    return SweepResult(results=results, failures=failures)

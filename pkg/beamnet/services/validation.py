"""Self-checks run by `beamnet validate`

Two suites feed one report. The oracle suite compares every graph measurement with its
brute-force counterpart on random small graphs and checks that coordinate averaging converges
inside the convex hull of the initial points. The trial suite runs full trials on fixed seeds
and checks the structural guarantees of each protocol phase.
"""

import logging
import math
from collections.abc import Callable, Iterable

from beamnet.exceptions import BeamnetException
from beamnet.schemas import (
    CheckResult,
    CheckStatus,
    ValidationReport,
    WorldConfig,
)
from beamnet.services.centroid import (
    assign_virtual_coordinates,
    averaging_round,
    consensus_point,
    detect_convergence,
    run_averaging,
)
from beamnet.services.experiment import TrialRun, simulate
from beamnet.services.regions import check_well_formed
from beamnet.utils.geometry import TWO_PI, arcs_overlap
from beamnet.utils.graph import (
    Graph,
    average_path_length,
    closeness_centrality,
    clustering_coefficient,
    connected_components,
    egocentric_betweenness,
    shortest_path_lengths,
)
from beamnet.utils.oracles import (
    apl_oracle,
    cc_oracle,
    closeness_oracle,
    components_oracle,
    convex_hull_contains,
    ego_betweenness_oracle,
    random_connected_graph,
    random_graph,
)
from beamnet.utils.seeding import derive_seed, make_rng

logger = logging.getLogger(__name__)

ORACLE_GRAPHS = 100
ORACLE_MAX_NODES = 12
ORACLE_TOLERANCE = 1e-9
AVERAGING_REGIONS = 100
AVERAGING_MAX_NODES = 30
AVERAGING_MAX_ROUNDS = 10_000
AVERAGING_DELTA = 1e-6
# Regions replayed round by round against the vectorized averaging
STEPWISE_REGIONS = 10
# Trial suite cycles through these so that sparse, medium and dense fields are all covered
TRIAL_NODE_COUNTS = (20, 60, 120)
TRIAL_GRADIENTS = (3, 6, 10)


def _summarize(name: str, failures: list[str], checked: int, unit: str) -> CheckResult:
    if failures:
        return CheckResult(
            name=name,
            status=CheckStatus.error,
            detail=f"{len(failures)}/{checked} {unit} failed; first: {failures[0]}",
        )
    return CheckResult(name=name, detail=f"{checked} {unit}")


def _node_measure_pairs(g: Graph) -> Iterable[tuple[str, float, float]]:
    yield "apl", average_path_length(g), apl_oracle(g)
    yield "cc", clustering_coefficient(g), cc_oracle(g)
    yield "components", len(connected_components(g)), components_oracle(g)
    for node in range(g.node_count):
        yield (
            "egocentric_betweenness",
            egocentric_betweenness(g, node),
            ego_betweenness_oracle(g, node),
        )
        yield "closeness", closeness_centrality(g, node), closeness_oracle(g, node)


def oracle_checks(seed: int = 0) -> list[CheckResult]:
    """Graph measurements against brute-force oracles on random graphs of up to 12 nodes"""
    names = ("apl", "cc", "components", "egocentric_betweenness", "closeness")
    failures: dict[str, list[str]] = {name: [] for name in names}
    for index in range(ORACLE_GRAPHS):
        g = random_graph(make_rng(seed, 0, index), ORACLE_MAX_NODES)
        for name, measured, expected in _node_measure_pairs(g):
            if not math.isclose(measured, expected, rel_tol=0, abs_tol=ORACLE_TOLERANCE):
                failures[name].append(
                    f"graph {index} ({g.node_count} nodes): {measured!r} != {expected!r}"
                )
    return [
        _summarize(f"oracle.{name}", failures[name], ORACLE_GRAPHS, "graphs")
        for name in names
    ]


def _stepwise_mismatch(g: Graph, coords: dict, final: dict, rounds: int) -> str | None:
    """Replays the averaging one round at a time and compares with the vectorized run"""
    current = coords
    stepped = 0
    while not detect_convergence(current, AVERAGING_DELTA):
        if stepped >= rounds:
            return f"still spread after {rounds} rounds"
        current = averaging_round(g, current)
        stepped += 1
    if stepped != rounds:
        return f"converged after {stepped} rounds, not {rounds}"
    if any(current[node].current != final[node].current for node in final):
        return "final coordinates differ"
    return None


def averaging_checks(seed: int = 0) -> list[CheckResult]:
    """Coordinate averaging on random connected regions of up to 30 nodes"""
    not_converged: list[str] = []
    outside_hull: list[str] = []
    disagreements: list[str] = []
    for index in range(AVERAGING_REGIONS):
        rng = make_rng(seed, 1, index)
        g = random_connected_graph(rng, AVERAGING_MAX_NODES)
        members = list(range(g.node_count))
        coords = assign_virtual_coordinates(members, rng)
        try:
            final, rounds = run_averaging(g, coords, AVERAGING_DELTA, AVERAGING_MAX_ROUNDS)
        except BeamnetException as e:
            not_converged.append(f"region {index}: {e.detail}")
            continue
        initials = [coords[node].initial for node in members]
        consensus = consensus_point(final)
        if not convex_hull_contains(initials, consensus):
            outside_hull.append(f"region {index}: consensus {consensus}")
        if index < STEPWISE_REGIONS:
            problem = _stepwise_mismatch(g, coords, final, rounds)
            if problem is not None:
                disagreements.append(f"region {index}: {problem}")
    return [
        _summarize("averaging.convergence", not_converged, AVERAGING_REGIONS, "regions"),
        _summarize(
            "averaging.consensus_in_hull", outside_hull, AVERAGING_REGIONS, "regions"
        ),
        _summarize(
            "averaging.stepwise_agrees", disagreements, STEPWISE_REGIONS, "regions"
        ),
    ]


def _components_monotone(run: TrialRun) -> str | None:
    record = run.result.record
    if record.components_dir > record.components_omni:
        return f"{record.components_dir} directional > {record.components_omni} omni"
    return None


def _gradient_well_formed(run: TrialRun) -> str | None:
    problems = check_well_formed(run.omni, run.formation, run.config.gradient)
    return problems[0] if problems else None


def _one_centroid_per_region(run: TrialRun) -> str | None:
    phase = run.phase
    if len(phase.regions) != len(run.formation.heads):
        return f"{len(phase.regions)} centroids for {len(run.formation.heads)} regions"
    if len(set(phase.centroids)) != len(phase.regions):
        return "a node is centroid of two regions"
    for region in phase.regions:
        if region.centroid not in region.members:
            return f"centroid {region.centroid} outside its region"
        if any(phase.centroid_of[node] != region.centroid for node in region.members):
            return f"region of {region.centroid} has members assigned elsewhere"
    return None


def _connected_regions(run: TrialRun) -> str | None:
    for region in run.phase.regions:
        reached = shortest_path_lengths(run.omni.induced(region.members), region.centroid)
        if any(node not in reached for node in region.members):
            return f"region of centroid {region.centroid} is disconnected"
    return None


def _beam_geometry(run: TrialRun) -> str | None:
    config = run.config
    for beam in run.beamforming.beams:
        if not math.isclose(beam.width * beam.elements, TWO_PI, rel_tol=1e-12):
            return f"beam of {beam.origin}: width {beam.width} for {beam.elements} elements"
        expected = config.radio_range * beam.elements ** (1 / config.alpha)
        if not math.isclose(beam.range, expected, rel_tol=1e-12):
            return f"beam of {beam.origin}: range {beam.range} != {expected}"
    return None


def _links_superset(run: TrialRun) -> str | None:
    missing = run.omni.edges - run.beamforming.links.symmetric_edges
    if missing:
        return f"omnidirectional edge {min(missing)} lost"
    return None


def _acknowledged_links(run: TrialRun) -> str | None:
    centroids = set(run.phase.centroids)
    for peripheral, centroid in run.beamforming.acknowledged:
        if centroid not in centroids:
            return f"{peripheral} acknowledged by non-centroid {centroid}"
        if not run.directional.has_edge(peripheral, centroid):
            return f"acknowledged link {peripheral}-{centroid} is not symmetric"
    return None


def _claims_disjoint(run: TrialRun) -> str | None:
    claims = run.beamforming.claims
    for node, arc in claims.items():
        for neighbor in run.omni.neighbors(node):
            other = claims.get(neighbor)
            if neighbor > node and other is not None:
                if arcs_overlap(arc.center, arc.width, other.center, other.width):
                    return f"arcs of neighbors {node} and {neighbor} overlap"
    return None


TRIAL_INVARIANTS: dict[str, Callable[[TrialRun], str | None]] = {
    "trial.components_monotone": _components_monotone,
    "trial.gradient_well_formed": _gradient_well_formed,
    "trial.one_centroid_per_region": _one_centroid_per_region,
    "trial.connected_regions": _connected_regions,
    "trial.beam_geometry": _beam_geometry,
    "trial.links_superset": _links_superset,
    "trial.acknowledged_links": _acknowledged_links,
    "trial.claims_disjoint": _claims_disjoint,
}


def trial_configs(base: WorldConfig, trials: int) -> list[WorldConfig]:
    return [
        base.for_trial(
            node_count=TRIAL_NODE_COUNTS[index % len(TRIAL_NODE_COUNTS)],
            gradient=TRIAL_GRADIENTS[index // len(TRIAL_NODE_COUNTS) % len(TRIAL_GRADIENTS)],
            seed=derive_seed(base.seed, index),
        )
        for index in range(trials)
    ]


def trial_checks(base: WorldConfig, trials: int) -> list[CheckResult]:
    """Per-trial protocol guarantees on `trials` fixed seeds"""
    incomplete: list[str] = []
    failures: dict[str, list[str]] = {name: [] for name in TRIAL_INVARIANTS}
    for config in trial_configs(base, trials):
        label = f"n={config.node_count} g={config.gradient} seed={config.seed}"
        try:
            run = simulate(config)
        except BeamnetException as e:
            # Includes a hopcount above the gradient, which formation refuses to continue with
            incomplete.append(f"{label}: {e.detail}")
            continue
        for name, check in TRIAL_INVARIANTS.items():
            problem = check(run)
            if problem is not None:
                failures[name].append(f"{label}: {problem}")
    results = [_summarize("trial.completes", incomplete, trials, "trials")]
    results.extend(
        _summarize(name, problems, trials - len(incomplete), "trials")
        for name, problems in failures.items()
    )
    return results


def run_validation(base: WorldConfig | None = None, trials: int = 9) -> ValidationReport:
    base = base or WorldConfig()
    checks = oracle_checks(base.seed) + averaging_checks(base.seed)
    checks += trial_checks(base, trials)
    report = ValidationReport(checks=checks)
    failed = sum(1 for check in report if check.status == CheckStatus.error)
    logger.info(f"Validation ran <{len(checks)}> checks, <{failed}> failed")
    return report

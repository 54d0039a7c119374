"""Region formation by lateral inhibition

Every node starts as the head of its own region and announces `(head id, hopcount, head
degree)`. A node gives up its candidacy (becomes inhibited) when a neighbor relays an offer for
a head of higher degree; equal degrees fall back to the shorter hopcount, then to a coin. Offers
are only adopted while the relayed hopcount is below the gradient bound, so no node ends up more
than `gradient` hops from its head.

Each node also remembers the last offer of every neighbor and which neighbor it adopted from
(its parent). If the parent later withdraws that offer, because its own head was inhibited, the
node re-selects from the offers it still holds. The quiescent state is therefore well-formed:
every inhibited node has a neighbor with the same head one hop closer to it.

Head degree never decreases between re-selections. A re-selection starts the node over from its
own candidacy, so the degree it lands on may be lower than that of the head it lost.
"""

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import partial

import numpy as np

from beamnet.exceptions import ContractViolation, ProtocolConvergenceError
from beamnet.services.engine import Envelope, run_rounds
from beamnet.utils.graph import Graph

logger = logging.getLogger(__name__)


class RegionStatus(str, Enum):
    uninhibited = "uninhibited"
    inhibited = "inhibited"


@dataclass(frozen=True, slots=True)
class HeadMessage:
    head_id: int
    hop_count: int
    head_degree: int

    def __str__(self):
        return f"head={self.head_id},hop={self.hop_count},degree={self.head_degree}"


@dataclass(frozen=True, slots=True)
class RegionState:
    node_id: int
    degree: int
    status: RegionStatus
    head_id: int
    head_degree: int
    hop_count: int
    # head id -> smallest hopcount heard for it
    known_heads: dict[int, int]
    parent: int | None = None
    # neighbor id -> last well-formed offer it relayed
    heard: dict[int, HeadMessage] = field(default_factory=dict)
    dropped: int = 0
    # Times the node fell back to its own candidacy after its parent withdrew
    reselections: int = 0

    @property
    def announcement(self) -> HeadMessage:
        return HeadMessage(self.head_id, self.hop_count, self.head_degree)


@dataclass(frozen=True)
class RegionFormation:
    """Quiescent outcome of region formation"""

    states: list[RegionState]
    rounds: int

    @property
    def heads(self) -> list[int]:
        return [s.node_id for s in self.states if s.status == RegionStatus.uninhibited]

    @property
    def regions(self) -> dict[int, list[int]]:
        """Head id -> sorted member ids, ordered by head id"""
        regions: dict[int, list[int]] = {head: [] for head in self.heads}
        for state in self.states:
            regions[state.head_id].append(state.node_id)
        return regions

    @property
    def dropped_messages(self) -> int:
        return sum(s.dropped for s in self.states)

    @property
    def reselections(self) -> int:
        return sum(s.reselections for s in self.states)


def init_region_state(node: int, degree: int) -> RegionState:
    """Every node starts as its own head; its announcement is the initial broadcast"""
    return RegionState(
        node_id=node,
        degree=degree,
        status=RegionStatus.uninhibited,
        head_id=node,
        head_degree=degree,
        hop_count=0,
        known_heads={node: 0},
    )


def _prefers_offer(
    state: RegionState,
    msg: HeadMessage,
    is_news: bool,
    rng: np.random.Generator,
    deterministic: bool,
) -> bool:
    offered_hop = msg.hop_count + 1
    if msg.head_id == state.head_id:
        # Same head: only a shorter route is worth switching to
        return offered_hop < state.hop_count
    if msg.head_degree != state.head_degree:
        return msg.head_degree > state.head_degree
    if offered_hop != state.hop_count:
        return offered_hop < state.hop_count
    # Full tie. Only offers that taught the node something new may flip it, which bounds the
    # number of flips and keeps formation finite.
    if not is_news:
        return False
    if deterministic:
        return msg.head_id < state.head_id
    return bool(rng.random() < 0.5)


def process_head_message(
    state: RegionState,
    msg: HeadMessage,
    gradient: int,
    rng: np.random.Generator,
    sender: int | None = None,
    deterministic: bool = False,
) -> tuple[RegionState, HeadMessage | None]:
    """Applies one neighbor offer; returns the new state and the offer to relay, if adopted"""
    if not 0 <= msg.hop_count <= gradient:
        logger.debug(f"Node <{state.node_id}> dropped malformed offer <{msg}>")
        return replace(state, dropped=state.dropped + 1), None
    known = state.known_heads.get(msg.head_id)
    is_news = known is None or msg.hop_count < known
    if is_news:
        state = replace(state, known_heads={**state.known_heads, msg.head_id: msg.hop_count})
    if msg.hop_count >= gradient:
        return state, None
    if not _prefers_offer(state, msg, is_news, rng, deterministic):
        return state, None
    relayed = HeadMessage(msg.head_id, msg.hop_count + 1, msg.head_degree)
    state = replace(
        state,
        status=RegionStatus.inhibited,
        head_id=relayed.head_id,
        head_degree=relayed.head_degree,
        hop_count=relayed.hop_count,
        parent=sender,
    )
    return state, relayed


def _supports(msg: HeadMessage, state: RegionState) -> bool:
    return msg.head_id == state.head_id and msg.hop_count + 1 <= state.hop_count


def _reselect(
    state: RegionState, gradient: int, rng: np.random.Generator, deterministic: bool
) -> RegionState:
    """Rebuilds the choice from own candidacy plus every offer still held, in sender order"""
    candidate = replace(
        state,
        status=RegionStatus.uninhibited,
        head_id=state.node_id,
        head_degree=state.degree,
        hop_count=0,
        parent=None,
    )
    for sender in sorted(state.heard):
        candidate, _ = process_head_message(
            candidate,
            state.heard[sender],
            gradient,
            rng,
            sender=sender,
            deterministic=deterministic,
        )
    return candidate


def region_step(
    node: int,
    state: RegionState,
    inbox: list[Envelope],
    *,
    gradient: int,
    rngs: list[np.random.Generator],
    deterministic: bool,
) -> tuple[RegionState, list[HeadMessage]]:
    """One synchronous round of a node: absorb offers, then announce if the choice changed"""
    before = state.announcement
    rng = rngs[node]
    heard = dict(state.heard)
    accepted: list[Envelope] = []
    dropped = state.dropped
    parent_withdrew = False
    for envelope in inbox:
        msg = envelope.payload
        if not 0 <= msg.hop_count <= gradient:
            dropped += 1
            continue
        heard[envelope.sender] = msg
        accepted.append(envelope)
        if envelope.sender == state.parent and not _supports(msg, state):
            parent_withdrew = True
    state = replace(state, heard=heard, dropped=dropped)
    if parent_withdrew:
        state = _reselect(state, gradient, rng, deterministic)
        state = replace(state, reselections=state.reselections + 1)
    else:
        for envelope in accepted:
            state, _ = process_head_message(
                state,
                envelope.payload,
                gradient,
                rng,
                sender=envelope.sender,
                deterministic=deterministic,
            )
        if state.head_degree < before.head_degree:
            raise ContractViolation(
                f"Node <{node}> adopted head degree <{state.head_degree}> below "
                f"<{before.head_degree}> without a re-selection."
            )
    if state.hop_count > gradient:
        raise ContractViolation(
            f"Node <{node}> reached hopcount <{state.hop_count}> above gradient <{gradient}>."
        )
    after = state.announcement
    return state, ([after] if after != before else [])


def run_region_formation(
    g_topo: Graph,
    gradient: int,
    rng: np.random.Generator,
    max_rounds: int | None = None,
    deterministic: bool = False,
    trace=None,
) -> RegionFormation:
    """Runs lateral inhibition to quiescence on the omnidirectional topology"""
    rngs = rng.spawn(g_topo.node_count)
    states = [init_region_state(node, g_topo.degree(node)) for node in range(g_topo.node_count)]
    result = run_rounds(
        g_topo,
        partial(region_step, gradient=gradient, rngs=rngs, deterministic=deterministic),
        states,
        max_rounds=max_rounds or 4 * g_topo.node_count,
        initial_outbox={state.node_id: [state.announcement] for state in states},
        trace=trace,
    )
    if not result.converged:
        raise ProtocolConvergenceError(
            f"Region formation still active after <{result.rounds}> rounds."
        )
    formation = RegionFormation(states=result.states, rounds=result.rounds)
    logger.debug(
        f"Formed <{len(formation.heads)}> regions in <{formation.rounds}> rounds"
    )
    return formation


def check_well_formed(g_topo: Graph, formation: RegionFormation, gradient: int) -> list[str]:
    """Lists every gradient well-formedness problem; empty when the regions are sound"""
    problems = []
    heads = set(formation.heads)
    for state in formation.states:
        if state.hop_count > gradient:
            problems.append(f"node {state.node_id} hopcount {state.hop_count} > {gradient}")
        if state.status == RegionStatus.uninhibited:
            if state.head_id != state.node_id or state.hop_count != 0:
                problems.append(f"head {state.node_id} does not lead itself")
            continue
        if state.head_id not in heads:
            problems.append(f"node {state.node_id} follows inhibited head {state.head_id}")
        if not any(
            formation.states[u].head_id == state.head_id
            and formation.states[u].hop_count == state.hop_count - 1
            for u in g_topo.neighbors(state.node_id)
        ):
            problems.append(f"node {state.node_id} has no neighbor one hop closer to its head")
    return problems

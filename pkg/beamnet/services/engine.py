"""Synchronous broadcast rounds

A payload broadcast by a node in round `t` reaches every one-hop neighbor at the start of round
`t + 1`. Each round every node runs its step function once with its inbox, sorted by sender id,
and may queue payloads for the next round. The run is quiescent when a round queues nothing.
"""

import logging
from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass
from typing import Generic, TextIO, TypeVar

from beamnet.exceptions import ContractViolation
from beamnet.utils.graph import Graph

logger = logging.getLogger(__name__)

State = TypeVar("State")
Payload = TypeVar("Payload")


@dataclass(frozen=True, slots=True)
class Envelope(Generic[Payload]):
    sender: int
    payload: Payload


# (node, state, inbox) -> (new state, payloads to broadcast next round)
NodeStep = Callable[[int, State, list[Envelope]], tuple[State, Sequence[Payload]]]


@dataclass(frozen=True)
class EngineResult(Generic[State]):
    states: list[State]
    rounds: int
    converged: bool


def run_rounds(
    g: Graph,
    node_step: NodeStep,
    states: Sequence[State],
    max_rounds: int,
    initial_outbox: Mapping[int, Sequence[Payload]] | None = None,
    trace: TextIO | None = None,
) -> EngineResult:
    """Runs `node_step` on every node each round until quiescence or `max_rounds`.

    `initial_outbox` holds payloads queued before round 1. Hitting the bound is reported through
    `converged=False`; callers decide whether that is fatal.
    """
    if max_rounds < 1:
        raise ContractViolation(f"max_rounds must be at least 1, got <{max_rounds}>.")
    states = list(states)
    outbox = {
        node: list(payloads)
        for node, payloads in (initial_outbox or {}).items()
        if payloads
    }
    for round_number in range(1, max_rounds + 1):
        inboxes: list[list[Envelope]] = [[] for _ in range(g.node_count)]
        for sender in sorted(outbox):
            for payload in outbox[sender]:
                envelope = Envelope(sender, payload)
                for neighbor in g.neighbors(sender):
                    inboxes[neighbor].append(envelope)
        next_outbox: dict[int, list] = {}
        for node in range(g.node_count):
            if trace is not None:
                for envelope in inboxes[node]:
                    trace.write(
                        f"{round_number} {node} recv {envelope.sender}:{envelope.payload}\n"
                    )
            states[node], outgoing = node_step(node, states[node], inboxes[node])
            if outgoing:
                next_outbox[node] = list(outgoing)
                if trace is not None:
                    for payload in outgoing:
                        trace.write(f"{round_number} {node} send {payload}\n")
        outbox = next_outbox
        if not outbox:
            logger.debug(f"Quiescent after <{round_number}> rounds")
            return EngineResult(states=states, rounds=round_number, converged=True)
    logger.warning(f"Still active after <{max_rounds}> rounds")
    return EngineResult(states=states, rounds=max_rounds, converged=False)

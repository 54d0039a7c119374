import io

import pytest

from beamnet.exceptions import ContractViolation
from beamnet.services.engine import run_rounds
from beamnet.tests.utils import cycle_graph, path_graph, star_graph


def _flood(node, seen, inbox):
    """Relays a token the first time it arrives"""
    if inbox and not seen:
        return True, ["token"]
    return seen, []


def test_quiet_network_stops_after_one_round():
    """A round with nothing to send is quiescent"""
    result = run_rounds(path_graph(3), lambda node, state, inbox: (state, []), [0, 0, 0], 10)
    assert result.converged
    assert result.rounds == 1


def test_flood_reaches_everyone():
    """Payloads travel one hop per round"""
    result = run_rounds(
        path_graph(4),
        _flood,
        [True, False, False, False],
        max_rounds=10,
        initial_outbox={0: ["token"]},
    )
    assert result.converged
    assert result.rounds == 4
    assert result.states == [True, True, True, True]


def test_inbox_sorted_by_sender():
    """Inboxes arrive ordered by sender id whatever order senders were queued in"""
    seen_order = {}

    def _record(node, state, inbox):
        seen_order[node] = [envelope.sender for envelope in inbox]
        return state, []

    run_rounds(
        star_graph(3),
        _record,
        [None] * 4,
        max_rounds=5,
        initial_outbox={3: ["c"], 1: ["a"], 2: ["b"]},
    )
    assert seen_order[0] == [1, 2, 3]


def test_livelock_reported_not_raised():
    """Hitting the round bound is reported through `converged`"""
    result = run_rounds(
        cycle_graph(3), lambda node, state, inbox: (state + 1, ["ping"]), [0, 0, 0], 7
    )
    assert not result.converged
    assert result.rounds == 7
    assert result.states == [7, 7, 7]


def test_max_rounds_must_be_positive():
    with pytest.raises(ContractViolation):
        run_rounds(path_graph(2), _flood, [False, False], 0)


def test_trace_lines():
    """Traces log `round node event payload` for every receive and send"""
    trace = io.StringIO()
    run_rounds(
        path_graph(3),
        _flood,
        [True, False, False],
        max_rounds=10,
        initial_outbox={0: ["token"]},
        trace=trace,
    )
    lines = trace.getvalue().splitlines()
    assert lines[0] == "1 1 recv 0:token"
    assert lines[1] == "1 1 send token"
    assert "2 2 recv 1:token" in lines

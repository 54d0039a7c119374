import logging

from beamnet.exceptions import ProtocolConvergenceError
from beamnet.schemas import WorldConfig
from beamnet.services import experiment
from beamnet.services.experiment import run_sweep, sweep_configs
from beamnet.utils.seeding import derive_seed

BASE = WorldConfig(field_size=4.0, seed=11)


def test_sweep_configs_cross_product():
    """Every (n, gradient, seed index) cell appears once"""
    configs = sweep_configs(BASE, [10, 20], [3, 6], seeds=3)
    assert len(configs) == 12
    assert {(c.node_count, c.gradient) for c in configs} == {(10, 3), (10, 6), (20, 3), (20, 6)}
    assert {c.seed for c in configs} == {derive_seed(11, i) for i in range(3)}
    assert all(c.field_size == 4.0 for c in configs)


def test_sweep_record_count():
    result = run_sweep(BASE, [10, 20], [3], seeds=3)
    assert len(result.records) == 6
    assert result.failures == []
    assert [r.n for r in result.records] == [10, 10, 10, 20, 20, 20]


def test_parallel_sweep_matches_serial():
    """Worker count never changes results or their order"""
    serial = run_sweep(BASE, [10, 20], [3, 6], seeds=2, jobs=1)
    parallel = run_sweep(BASE, [10, 20], [3, 6], seeds=2, jobs=2)
    assert serial.results == parallel.results


def test_failed_trials_are_excluded(monkeypatch, caplog):
    """A trial that does not converge is recorded as a failure and logged"""
    failing_seed = derive_seed(11, 1)
    real_run_trial = experiment.run_trial

    def _flaky_run_trial(config):
        if config.seed == failing_seed:
            raise ProtocolConvergenceError("Averaging still spread.")
        return real_run_trial(config)

    monkeypatch.setattr(experiment, "run_trial", _flaky_run_trial)
    with caplog.at_level(logging.WARNING):
        result = run_sweep(BASE, [10], [3], seeds=3)
    assert len(result.records) == 2
    assert len(result.failures) == 1
    assert result.failures[0].seed == failing_seed
    assert result.failures[0].reason == "Averaging still spread."
    assert "Averaging still spread." in caplog.text

"""Standard pytest fixtures used across all beamnet tests

## USAGE
    from beamnet.schemas import WorldConfig

    def test_something(small_config: WorldConfig):
        assert small_config.node_count == 30
"""

import pytest

from beamnet.schemas import WorldConfig

from . import utils


@pytest.fixture(scope="function", autouse=True)
def testing_environment(monkeypatch, tmp_path):
    # Ensure a BEAMNET_SEED or BEAMNET_OUTPUT_DIR from the shell never leaks into a test
    utils.monkeypatch_settings(
        monkeypatch,
        {"seed": None, "debug": False, "jobs": 1, "output_dir": tmp_path / "output"},
    )


@pytest.fixture(scope="function")
def small_config() -> WorldConfig:
    """A sparse 30-node field small enough to simulate in a blink"""
    return WorldConfig(node_count=30, field_size=4.0, seed=7)

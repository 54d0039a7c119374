import itertools

from beamnet.environment import settings
from beamnet.schemas import MetricsRecord
from beamnet.utils.graph import Graph


def monkeypatch_settings(monkeypatch, new_settings: dict):
    """Patches the given setting for a single test"""
    for key, value in new_settings.items():
        monkeypatch.setattr(settings, key, value)


def path_graph(node_count: int) -> Graph:
    return Graph(node_count, [(i, i + 1) for i in range(node_count - 1)])


def cycle_graph(node_count: int) -> Graph:
    return Graph(node_count, [(i, (i + 1) % node_count) for i in range(node_count)])


def complete_graph(node_count: int) -> Graph:
    return Graph(node_count, itertools.combinations(range(node_count), 2))


def star_graph(leaves: int) -> Graph:
    """Node 0 is the center"""
    return Graph(leaves + 1, [(0, leaf) for leaf in range(1, leaves + 1)])


def broom_graph() -> Graph:
    """Star 0-{1,2,3} with a tail 3-4; degrees 3, 1, 1, 2, 1"""
    return Graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)])


def make_record(**overrides) -> MetricsRecord:
    """Returns a MetricsRecord with plausible defaults for any field not given"""
    values = {
        "n": 20,
        "gradient": 3,
        "seed": 1,
        "apl_omni": 1.5,
        "apl_dir": 1.75,
        "cc_omni": 0.25,
        "cc_dir": 0.3,
        "components_omni": 8,
        "components_dir": 6,
        "frac_peripheral": 0.5,
        "frac_centroid": 0.4,
        "unidirectional_links": 3,
    }
    values.update(overrides)
    return MetricsRecord(**values)

import pytest

from beamnet.exceptions import GraphInputError
from beamnet.tests.utils import complete_graph, cycle_graph, path_graph, star_graph
from beamnet.utils.graph import (
    Graph,
    average_path_length,
    closeness_centrality,
    clustering_coefficient,
    connected_components,
    egocentric_betweenness,
    largest_component_fraction,
    shortest_path_lengths,
)
from beamnet.utils.oracles import random_graph
from beamnet.utils.seeding import make_rng


def test_graph_rejects_self_loops():
    """Graphs must not accept self-loops"""
    with pytest.raises(GraphInputError):
        Graph(3, [(1, 1)])


def test_graph_rejects_unknown_nodes():
    """Edges and lookups must stay inside the node range"""
    with pytest.raises(GraphInputError):
        Graph(3, [(0, 3)])
    with pytest.raises(GraphInputError):
        path_graph(3).neighbors(5)
    with pytest.raises(GraphInputError):
        Graph(0)


def test_graph_normalizes_edges():
    """Edges given in either direction, or twice, are stored once"""
    g = Graph(3, [(1, 0), (0, 1), (2, 1)])
    assert g.edges == {(0, 1), (1, 2)}
    assert g.neighbors(1) == (0, 2)
    assert g.has_edge(2, 1)
    assert g == path_graph(3)


def test_shortest_path_lengths_omits_unreachable():
    """Unreachable nodes must be absent from the distance map"""
    g = Graph(4, [(0, 1), (1, 2)])
    assert shortest_path_lengths(g, 0) == {0: 0, 1: 1, 2: 2}


def test_connected_components_partition():
    """Components are sorted id lists ordered by their smallest member"""
    g = Graph(5, [(3, 4), (0, 2)])
    assert connected_components(g) == [[0, 2], [1], [3, 4]]
    assert largest_component_fraction(g) == pytest.approx(0.4)


def test_average_path_length_path():
    """A three-node path averages 4/3 hops"""
    assert average_path_length(path_graph(3)) == pytest.approx(4 / 3)


def test_average_path_length_skips_disconnected_pairs():
    """Pairs in different components are left out"""
    assert average_path_length(Graph(4, [(0, 1)])) == pytest.approx(1.0)
    assert average_path_length(Graph(1)) == 0.0
    assert average_path_length(Graph(3)) == 0.0


def test_clustering_coefficient():
    """Triangles score 1, trees 0, and low-degree nodes count as 0"""
    assert clustering_coefficient(complete_graph(3)) == pytest.approx(1.0)
    assert clustering_coefficient(star_graph(4)) == 0.0
    # Triangle plus a pendant: nodes 0 and 1 score 1, node 2 scores 1/3, node 3 scores 0
    g = Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    assert clustering_coefficient(g) == pytest.approx((1 + 1 + 1 / 3) / 4)


def test_egocentric_betweenness():
    """Each non-adjacent neighbor pair contributes one over its shared ego paths"""
    assert egocentric_betweenness(star_graph(3), 0) == pytest.approx(3.0)
    assert egocentric_betweenness(path_graph(3), 1) == pytest.approx(1.0)
    assert egocentric_betweenness(complete_graph(4), 0) == 0.0
    assert egocentric_betweenness(cycle_graph(4), 0) == pytest.approx(1.0)
    # Neighbors 1 and 2 are also joined through neighbor 3
    g = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)])
    assert egocentric_betweenness(g, 0) == pytest.approx(0.5)


def test_closeness_centrality():
    """Closeness is reachable count over distance sum, 0 when isolated"""
    g = path_graph(3)
    assert closeness_centrality(g, 0) == pytest.approx(2 / 3)
    assert closeness_centrality(g, 1) == pytest.approx(1.0)
    assert closeness_centrality(Graph(2), 0) == 0.0


def test_induced_keeps_node_ids():
    """Induced subgraphs keep the full node range"""
    g = path_graph(4).induced([1, 2, 3])
    assert g.node_count == 4
    assert g.edges == {(1, 2), (2, 3)}


def test_with_edges_adds_links():
    g = path_graph(3).with_edges([(2, 0)])
    assert g == cycle_graph(3)


def test_edge_list_text():
    """Edge lists carry a `nodes N` header and one sorted pair per line"""
    text = path_graph(3).to_edge_list_text()
    assert text == "nodes 3\n0 1\n1 2\n"
    assert Graph.from_edge_list_text("# comment\nnodes 3\n\n1 2\n0 1\n") == path_graph(3)


def test_edge_list_text_malformed():
    """Malformed edge lists must raise GraphInputError"""
    with pytest.raises(GraphInputError):
        Graph.from_edge_list_text("0 1\n")
    with pytest.raises(GraphInputError):
        Graph.from_edge_list_text("nodes 3\n0 one\n")
    with pytest.raises(GraphInputError):
        Graph.from_edge_list_text("nodes three\n")
    with pytest.raises(GraphInputError):
        Graph.from_edge_list_text("nodes 2\n0 4\n")


def _relabeled(g: Graph, relabel: list[int]) -> Graph:
    return Graph(g.node_count, [(relabel[u], relabel[v]) for u, v in g.edges])


@pytest.mark.parametrize("seed", range(20))
def test_clustering_coefficient_ignores_labels(seed):
    """Relabeling the nodes must leave the clustering coefficient unchanged"""
    rng = make_rng(31, seed)
    g = random_graph(rng)
    relabel = [int(x) for x in rng.permutation(g.node_count)]
    assert clustering_coefficient(_relabeled(g, relabel)) == pytest.approx(
        clustering_coefficient(g)
    )


@pytest.mark.parametrize("seed", range(20))
def test_adding_an_edge_never_lengthens_paths(seed):
    """No pairwise distance grows when an edge is added, and no pair loses its route"""
    rng = make_rng(32, seed)
    g = random_graph(rng)
    missing = [
        (u, v)
        for u in range(g.node_count)
        for v in range(u + 1, g.node_count)
        if not g.has_edge(u, v)
    ]
    for edge in missing[:3]:
        added = g.with_edges([edge])
        for source in range(g.node_count):
            before = shortest_path_lengths(g, source)
            after = shortest_path_lengths(added, source)
            for target, hops in before.items():
                assert after[target] <= hops

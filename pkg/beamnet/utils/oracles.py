"""Brute-force reference measurements

Each oracle recomputes a `beamnet.utils.graph` measurement from scratch with a different
library or method, so `validate` and the tests can compare the two on small graphs:

* hop distances: Floyd-Warshall over a dense adjacency matrix (scipy.sparse.csgraph)
* components: union-find (scipy.cluster.hierarchy.DisjointSet)
* clustering: triangle counts from the diagonal of A^3 (numpy)
* egocentric betweenness: Brandes betweenness on the extracted ego graph (networkx)
* convex-hull membership: feasibility of a convex combination (scipy.optimize.linprog)
"""

import itertools
from collections.abc import Sequence

import networkx as nx
import numpy as np
from scipy.cluster.hierarchy import DisjointSet
from scipy.optimize import linprog
from scipy.sparse.csgraph import floyd_warshall

from beamnet.utils.graph import Graph


def adjacency_matrix(g: Graph) -> np.ndarray:
    matrix = np.zeros((g.node_count, g.node_count))
    for u, v in g.edges:
        matrix[u, v] = matrix[v, u] = 1.0
    return matrix


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs hop distances; unreachable pairs are `inf`"""
    return floyd_warshall(adjacency_matrix(g), directed=False, unweighted=True)


def apl_oracle(g: Graph) -> float:
    distances = distance_matrix(g)
    upper = distances[np.triu_indices(g.node_count, k=1)]
    finite = upper[np.isfinite(upper)]
    return float(finite.mean()) if finite.size else 0.0


def cc_oracle(g: Graph) -> float:
    matrix = adjacency_matrix(g)
    triangles = np.diag(np.linalg.matrix_power(matrix, 3)) / 2
    degrees = matrix.sum(axis=1)
    possible = degrees * (degrees - 1) / 2
    local = np.divide(triangles, possible, out=np.zeros_like(triangles), where=possible > 0)
    return float(local.sum() / g.node_count)


def components_oracle(g: Graph) -> int:
    sets = DisjointSet(range(g.node_count))
    for u, v in g.edges:
        sets.merge(u, v)
    return sets.n_subsets


def ego_betweenness_oracle(g: Graph, node: int) -> float:
    graph = nx.Graph()
    graph.add_nodes_from(range(g.node_count))
    graph.add_edges_from(g.edges)
    ego = nx.ego_graph(graph, node, radius=1)
    return float(nx.betweenness_centrality(ego, normalized=False)[node])


def closeness_oracle(g: Graph, node: int) -> float:
    row = distance_matrix(g)[node]
    reachable = row[np.isfinite(row)]
    total = reachable.sum()
    if total == 0:
        return 0.0
    return float((reachable.size - 1) / total)


def random_graph(rng: np.random.Generator, max_nodes: int = 12) -> Graph:
    """Erdos-Renyi graph with a random size in [1, max_nodes] and a random edge probability"""
    node_count = int(rng.integers(1, max_nodes, endpoint=True))
    probability = rng.random()
    edges = [
        pair
        for pair in itertools.combinations(range(node_count), 2)
        if rng.random() < probability
    ]
    return Graph(node_count, edges)


def random_connected_graph(rng: np.random.Generator, max_nodes: int = 30) -> Graph:
    """Random recursive tree over [1, max_nodes] nodes plus a sprinkle of extra edges"""
    node_count = int(rng.integers(1, max_nodes, endpoint=True))
    edges = {(int(rng.integers(0, node)), node) for node in range(1, node_count)}
    extra = rng.random() * 0.2
    for pair in itertools.combinations(range(node_count), 2):
        if rng.random() < extra:
            edges.add(pair)
    return Graph(node_count, edges)


def convex_hull_contains(points: Sequence[Sequence[float]], target: Sequence[float]) -> bool:
    """Whether `target` is a convex combination of `points`"""
    vertices = np.asarray(points, dtype=float)
    count = len(vertices)
    equalities = np.vstack([vertices.T, np.ones(count)])
    bounds = np.append(np.asarray(target, dtype=float), 1.0)
    result = linprog(
        np.zeros(count), A_eq=equalities, b_eq=bounds, bounds=(0, None), method="highs"
    )
    return bool(result.status == 0)

"""Undirected graphs over integer node ids, and the measurements taken on them

Typical usage:

    from beamnet.utils.graph import Graph, average_path_length

    path = Graph(3, [(0, 1), (1, 2)])
    average_path_length(path)  # 4/3
"""

import itertools
from collections.abc import Iterable

import networkx as nx

from beamnet.exceptions import GraphInputError

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    """Unordered pairs are stored smaller id first"""
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph with nodes `0 .. node_count - 1`.

    The omnidirectional topology, region subgraphs and the final symmetrized topology are all
    instances. Traversals run on a frozen networkx graph built once at construction.
    """

    __slots__ = ("node_count", "edges", "_adjacency", "_nx")

    def __init__(self, node_count: int, edges: Iterable[Edge] = ()):
        if node_count < 1:
            raise GraphInputError(f"A graph needs at least one node, got <{node_count}>.")
        normalized: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise GraphInputError(f"Self-loop on node <{u}> is not allowed.")
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise GraphInputError(
                    f"Edge <{u} {v}> does not fit a graph of <{node_count}> nodes."
                )
            normalized.add(normalize_edge(u, v))
        self.node_count = node_count
        self.edges = frozenset(normalized)
        graph = nx.Graph()
        graph.add_nodes_from(range(node_count))
        graph.add_edges_from(self.edges)
        self._nx = nx.freeze(graph)
        self._adjacency = tuple(
            tuple(sorted(graph.adj[node])) for node in range(node_count)
        )

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.node_count == other.node_count and self.edges == other.edges

    def __hash__(self):
        return hash((self.node_count, self.edges))

    def __repr__(self):
        return f"Graph(node_count={self.node_count}, edges={len(self.edges)})"

    def check_node(self, node: int):
        if not 0 <= node < self.node_count:
            raise GraphInputError(
                f"Node <{node}> is outside a graph of <{self.node_count}> nodes."
            )

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor ids for every node"""
        return self._adjacency

    def neighbors(self, node: int) -> tuple[int, ...]:
        self.check_node(node)
        return self._adjacency[node]

    def degree(self, node: int) -> int:
        return len(self.neighbors(node))

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def induced(self, nodes: Iterable[int]) -> "Graph":
        """Same node ids, keeping only the edges with both endpoints in `nodes`"""
        members = set(nodes)
        return Graph(
            self.node_count,
            (edge for edge in self.edges if edge[0] in members and edge[1] in members),
        )

    def with_edges(self, edges: Iterable[Edge]) -> "Graph":
        return Graph(self.node_count, itertools.chain(self.edges, edges))

    def to_networkx(self) -> nx.Graph:
        """Read-only networkx view; copy it before mutating"""
        return self._nx

    def to_edge_list_text(self) -> str:
        lines = [f"nodes {self.node_count}"]
        lines.extend(f"{u} {v}" for u, v in sorted(self.edges))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edge_list_text(cls, text: str) -> "Graph":
        """Parses the `nodes N` header followed by one `u v` pair per line"""
        lines = [line.strip() for line in text.splitlines()]
        lines = [line for line in lines if line and not line.startswith("#")]
        if not lines or not lines[0].startswith("nodes "):
            raise GraphInputError("Edge list must start with a `nodes N` header.")
        edges = []
        for line in lines[1:]:
            try:
                u, v = line.split()
                edges.append((int(u), int(v)))
            except ValueError:
                raise GraphInputError(f"Malformed edge list line: <{line}>")
        try:
            node_count = int(lines[0].split()[1])
        except ValueError:
            raise GraphInputError(f"Malformed edge list header: <{lines[0]}>")
        return cls(node_count, edges)


def shortest_path_lengths(g: Graph, source: int) -> dict[int, int]:
    """Hop distance from `source` to every node in its component"""
    g.check_node(source)
    return dict(nx.single_source_shortest_path_length(g.to_networkx(), source))


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted id lists, ordered by their smallest member"""
    components = (sorted(c) for c in nx.connected_components(g.to_networkx()))
    return sorted(components, key=lambda component: component[0])


def largest_component_fraction(g: Graph) -> float:
    return max(len(c) for c in connected_components(g)) / g.node_count


def average_path_length(g: Graph) -> float:
    """Mean hop distance over unordered pairs that share a component.

    Pairs in different components are left out rather than counted as infinite, so joining two
    components can raise the average. A graph with no connected pair has APL 0.
    """
    total = 0
    pairs = 0
    for source, lengths in nx.all_pairs_shortest_path_length(g.to_networkx()):
        for target, distance in lengths.items():
            if target > source:
                total += distance
                pairs += 1
    return total / pairs if pairs else 0.0


def clustering_coefficient(g: Graph) -> float:
    """Watts-Strogatz clustering averaged over all nodes; degree < 2 counts as 0"""
    local = nx.clustering(g.to_networkx())
    return sum(local.values()) / g.node_count


def egocentric_betweenness(g: Graph, node: int) -> float:
    """Betweenness of `node` inside its ego network.

    Two non-adjacent neighbors are joined by length-two paths only, one per common neighbor
    within the ego network, so each such pair contributes 1 / (common neighbors).
    """
    neighbors = g.neighbors(node)
    ego = set(neighbors)
    ego.add(node)
    score = 0.0
    for u, w in itertools.combinations(neighbors, 2):
        if g.has_edge(u, w):
            continue
        common = sum(1 for x in g.neighbors(u) if x in ego and g.has_edge(x, w))
        score += 1 / common
    return score


def closeness_centrality(g: Graph, node: int) -> float:
    """Reachable nodes over the sum of hop distances to them; isolated nodes score 0"""
    lengths = shortest_path_lengths(g, node)
    total = sum(lengths.values())
    if not total:
        return 0.0
    return (len(lengths) - 1) / total

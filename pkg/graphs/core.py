"""
Simple undirected graphs on dense vertex indices 0..n-1.

Every other package builds on the Graph defined here: configurations use it
as their internal graph, the oracle colors it, and the discharging simulator
derives one from a rotation system.
"""
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, Optional, Sequence, Tuple

import networkx as nx

import validation

Edge = Tuple[int, int]

# Returned by distance queries when no path exists.
UNREACHABLE = None


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: FrozenSet[Edge]

    @cached_property
    def adjacency(self) -> Tuple[FrozenSet[int], ...]:
        nbrs = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(n) for n in nbrs)

    @cached_property
    def sorted_edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]


def _normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def build_graph(vertex_count: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """
    Build a simple graph, silently merging repeated edges.

    Raises:
        ValidationError: on a loop, an endpoint out of range or a bad count
    """
    validation.validate_nonnegative_integer(vertex_count, 'vertex_count')
    edges = set()
    for pair in edge_list:
        if len(pair) != 2:
            raise validation.ValidationError(f'edge {pair!r} must have two endpoints')
        u, v = pair
        validation.validate_vertex(u, vertex_count, 'edge endpoint')
        validation.validate_vertex(v, vertex_count, 'edge endpoint')
        if u == v:
            raise validation.ValidationError(f'loop at vertex {u} is not allowed')
        edges.add(_normalize_edge(u, v))
    return Graph(vertex_count, frozenset(edges))


def neighbors(g: Graph, v: int) -> Tuple[int, ...]:
    validation.validate_vertex(v, g.vertex_count)
    return tuple(sorted(g.adjacency[v]))


def degree(g: Graph, v: int) -> int:
    validation.validate_vertex(v, g.vertex_count)
    return len(g.adjacency[v])


def degrees(g: Graph) -> Tuple[int, ...]:
    return tuple(len(n) for n in g.adjacency)


def max_degree(g: Graph) -> int:
    """Delta(G); 0 for the empty graph."""
    return max(degrees(g), default=0)


def min_degree(g: Graph) -> int:
    """delta(G); 0 for the empty graph."""
    return min(degrees(g), default=0)


def to_networkx(g: Graph) -> nx.Graph:
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.vertex_count))
    nxg.add_edges_from(g.edges)
    return nxg


def is_connected(g: Graph) -> bool:
    # networkx refuses the null graph; zero or one vertex counts as connected.
    if g.vertex_count <= 1:
        return True
    return nx.is_connected(to_networkx(g))


def shortest_path_distance(g: Graph, u: int, v: int) -> Optional[int]:
    """
    Breadth-first distance between u and v, or UNREACHABLE.

    Raises:
        ValidationError: if either vertex is out of range
    """
    validation.validate_vertex(u, g.vertex_count, 'u')
    validation.validate_vertex(v, g.vertex_count, 'v')
    try:
        return nx.shortest_path_length(to_networkx(g), u, v)
    except nx.NetworkXNoPath:
        return UNREACHABLE


def distances_from(g: Graph, sources: Iterable[int],
                   nxg: Optional[nx.Graph] = None) -> dict:
    """Multi-source BFS: vertex -> distance to the nearest source."""
    nxg = nxg if nxg is not None else to_networkx(g)
    return dict(nx.multi_source_dijkstra_path_length(nxg, set(sources)))


def subgraph_distance(g: Graph, first: Iterable[int],
                      second: Iterable[int]) -> Optional[int]:
    """
    d(H1, H2): least distance between a vertex of H1 and a vertex of H2.

    Intersecting vertex sets are at distance 0.
    """
    first, second = set(first), set(second)
    if not first or not second:
        raise validation.ValidationError('subgraphs must have at least one vertex')
    for v in first | second:
        validation.validate_vertex(v, g.vertex_count)
    if first & second:
        return 0
    dist = distances_from(g, first)
    reached = [dist[v] for v in second if v in dist]
    return min(reached) if reached else UNREACHABLE

"""
Hypothesis strategies and small fixed graphs shared by the test suites.
"""
from itertools import combinations

from hypothesis import strategies as st

import graphs.core as gc


@st.composite
def simple_graphs(draw, max_vertices: int = 8, max_edges: int = None):
    n = draw(st.integers(min_value=0, max_value=max_vertices))
    pairs = list(combinations(range(n), 2))
    if not pairs:
        return gc.build_graph(n, [])
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True,
                           max_size=max_edges if max_edges is not None else len(pairs)))
    return gc.build_graph(n, chosen)


def triangle() -> gc.Graph:
    return gc.build_graph(3, [(0, 1), (1, 2), (2, 0)])


def cycle(n: int) -> gc.Graph:
    return gc.build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> gc.Graph:
    return gc.build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> gc.Graph:
    return gc.build_graph(n, combinations(range(n), 2))


def s1_internal() -> gc.Graph:
    return gc.build_graph(5, [(0, 1), (0, 4), (1, 2), (1, 4), (2, 3), (3, 4)])


def two_squares_joined(path_edges: int) -> gc.Graph:
    """Squares 0-1-2-3 and 4-5-6-7 with a path of path_edges edges from 3 to 4."""
    edges = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)]
    inner = list(range(8, 8 + path_edges - 1))
    walk = [3] + inner + [4]
    edges += list(zip(walk, walk[1:]))
    return gc.build_graph(8 + len(inner), edges)


def two_squares_sharing_vertex() -> gc.Graph:
    return gc.build_graph(7, [(0, 1), (1, 2), (2, 3), (3, 0),
                              (3, 4), (4, 5), (5, 6), (6, 3)])

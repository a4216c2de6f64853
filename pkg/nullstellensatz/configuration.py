"""
Configurations: a small internal graph whose vertices carry their degree in
the host graph, and the residual list-size caps derived from them.

A vertex of host degree d with i internal neighbours has d - i neighbours
outside the configuration. After those are colored from lists of size k, at
least k - (d - i) colors remain, so the exponent cap is (k - 1) - (d - i).
"""
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import graphs.core as gc
import validation

DEFAULT_K = 4
DEFAULT_NAME = 'unnamed'

CapVector = Tuple[int, ...]
OrientedEdgeList = Tuple[Tuple[int, int], ...]


class CapError(validation.ValidationError):
    """A derived cap is negative: some vertex may be left with no color."""
    pass


@dataclass(frozen=True)
class Configuration:
    name: str
    internal: gc.Graph
    full_degree: Tuple[int, ...]
    k: int = DEFAULT_K
    explicit_caps: Optional[CapVector] = None
    # edges in the orientation and order they were declared
    listed_edges: OrientedEdgeList = ()


def build_configuration(name: str, vertex_count: int,
                        edge_list: Sequence[Sequence[int]],
                        full_degree: Optional[Sequence[int]] = None,
                        k: int = DEFAULT_K,
                        explicit_caps: Optional[Sequence[int]] = None) -> Configuration:
    """
    Validate and assemble a configuration.

    Missing full degrees default to the internal degree (at least 1), which
    only makes sense together with explicit caps.

    Raises:
        ValidationError: on any broken invariant
    """
    internal = gc.build_graph(vertex_count, edge_list)
    validation.validate_positive_integer(k, 'k')
    internal_deg = gc.degrees(internal)
    if full_degree is None:
        if explicit_caps is None:
            raise validation.ValidationError(
                'full degrees are required unless caps are given explicitly')
        full_degree = [max(d, 1) for d in internal_deg]
    full = validation.validate_vector(full_degree, 'full_degree', vertex_count, min_value=1)
    for v, (d_full, d_int) in enumerate(zip(full, internal_deg)):
        if d_full < d_int:
            raise validation.ValidationError(
                f'vertex {v}: full degree {d_full} is below its internal degree {d_int}')
    caps = None
    if explicit_caps is not None:
        caps = tuple(validation.validate_vector(explicit_caps, 'caps', vertex_count, min_value=0))
    listed = []
    seen = set()
    for u, v in edge_list:
        key = (min(u, v), max(u, v))
        if key not in seen:
            seen.add(key)
            listed.append((u, v))
    return Configuration(name=name, internal=internal, full_degree=tuple(full),
                         k=k, explicit_caps=caps, listed_edges=tuple(listed))


def derive_caps(c: Configuration) -> CapVector:
    """
    Per-vertex exponent caps t_i = (k-1) - (full_degree - internal_degree).

    Explicit caps are returned verbatim.

    Raises:
        CapError: if any derived cap is negative
    """
    if c.explicit_caps is not None:
        return c.explicit_caps
    caps = []
    for v, d_int in enumerate(gc.degrees(c.internal)):
        cap = (c.k - 1) - (c.full_degree[v] - d_int)
        if cap < 0:
            raise CapError(
                f'vertex {v}: cap {cap} < 0; vertex may have empty residual list; '
                'configuration not checkable by this method')
        caps.append(cap)
    return tuple(caps)


def default_orientation(c: Configuration) -> OrientedEdgeList:
    """Every edge oriented low->high, edges in lexicographic order."""
    return c.internal.sorted_edges


def listed_orientation(c: Configuration) -> OrientedEdgeList:
    """Edges as declared in the configuration file."""
    return c.listed_edges or default_orientation(c)


def validate_orientation(c: Configuration, edges: OrientedEdgeList) -> None:
    """
    Raises:
        ValidationError: unless the oriented edges cover the internal edges once each
    """
    unordered = [(min(a, b), max(a, b)) for a, b in edges]
    if len(set(unordered)) != len(unordered) or set(unordered) != c.internal.edges:
        raise validation.ValidationError(
            'oriented edge list must contain every internal edge exactly once')

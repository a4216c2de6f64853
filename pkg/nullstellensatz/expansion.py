"""
Capped expansion of the graph polynomial prod (x_a - x_b) and the
reducibility test built on it.

If the monomial prod x_i^t_i has a nonzero coefficient, with sum t_i equal to
the number of edges and t_i at most the cap of vertex i, then any lists with
more than t_i colors admit a choice that makes the polynomial nonzero, i.e. a
proper coloring. An empty table proves nothing.
"""
import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Sequence, Tuple

import nullstellensatz.configuration as cfg
import validation

logger = logging.getLogger(__name__)

REDUCIBLE = 'reducible'
INCONCLUSIVE = 'inconclusive'

NAIVE_EDGE_LIMIT = 16

Exponents = Tuple[int, ...]
ExpansionTable = Dict[Exponents, int]


def _check_edges(edges: Sequence[Tuple[int, int]], caps: Sequence[int]) -> None:
    for i, cap in enumerate(caps):
        validation.validate_nonnegative_integer(cap, f'caps[{i}]')
    for a, b in edges:
        validation.validate_vertex(a, len(caps), 'edge endpoint')
        validation.validate_vertex(b, len(caps), 'edge endpoint')
        if a == b:
            raise validation.ValidationError(f'loop at vertex {a} is not allowed')


def _bump(exps: Exponents, i: int) -> Exponents:
    return exps[:i] + (exps[i] + 1,) + exps[i + 1:]


def _accumulate(table: ExpansionTable, key: Exponents, coef: int) -> None:
    total = table.get(key, 0) + coef
    if total:
        table[key] = total
    else:
        table.pop(key, None)


def expand(edges: cfg.OrientedEdgeList, caps: cfg.CapVector) -> ExpansionTable:
    """
    Coefficients of prod (x_a - x_b), keeping only monomials within caps.

    Factors are multiplied in one at a time. Exponents never decrease, so
    dropping an over-cap monomial early gives the same table as truncating
    the full expansion.
    """
    _check_edges(edges, caps)
    table: ExpansionTable = {(0,) * len(caps): 1}
    for step, (a, b) in enumerate(edges, start=1):
        nxt: ExpansionTable = {}
        for exps, coef in table.items():
            if exps[a] < caps[a]:
                _accumulate(nxt, _bump(exps, a), coef)
            if exps[b] < caps[b]:
                _accumulate(nxt, _bump(exps, b), -coef)
        table = nxt
        logger.debug('edge %d/%d (%d,%d): %d entries', step, len(edges), a, b, len(table))
    return table


def naive_expand(edges: cfg.OrientedEdgeList, caps: cfg.CapVector) -> ExpansionTable:
    """
    Full 2^m term-by-term expansion, truncated afterwards.

    Independent check of expand(); limited to NAIVE_EDGE_LIMIT edges.
    """
    _check_edges(edges, caps)
    if len(edges) > NAIVE_EDGE_LIMIT:
        raise validation.ValidationError(
            f'naive expansion supports at most {NAIVE_EDGE_LIMIT} edges, got {len(edges)}')
    table: ExpansionTable = {}
    for picks in product((0, 1), repeat=len(edges)):
        exps = [0] * len(caps)
        sign = 1
        for (a, b), pick in zip(edges, picks):
            if pick:
                exps[b] += 1
                sign = -sign
            else:
                exps[a] += 1
        if all(e <= cap for e, cap in zip(exps, caps)):
            key = tuple(exps)
            table[key] = table.get(key, 0) + sign
    return {k: v for k, v in table.items() if v}


def coefficient(table: ExpansionTable, exps: Sequence[int]) -> int:
    return table.get(tuple(exps), 0)


@dataclass(frozen=True)
class ReducibilityVerdict:
    status: str
    witnesses: Tuple[Exponents, ...]
    caps: cfg.CapVector
    orientation: cfg.OrientedEdgeList
    table: ExpansionTable = field(compare=False, repr=False)

    @property
    def count(self) -> int:
        return len(self.witnesses)

    @property
    def reducible(self) -> bool:
        return self.status == REDUCIBLE


def is_reducible(c: cfg.Configuration,
                 orientation: cfg.OrientedEdgeList = None) -> ReducibilityVerdict:
    """
    Expand c's graph polynomial under its caps.

    Reducible iff the table is nonempty; witnesses are all surviving
    exponent vectors, sorted.

    Raises:
        CapError: propagated from derive_caps
    """
    caps = cfg.derive_caps(c)
    edges = orientation if orientation is not None else cfg.default_orientation(c)
    cfg.validate_orientation(c, edges)
    table = expand(edges, caps)
    witnesses = tuple(sorted(table))
    status = REDUCIBLE if witnesses else INCONCLUSIVE
    logger.info('%s: %s with %d witness(es)', c.name, status, len(witnesses))
    return ReducibilityVerdict(status, witnesses, caps, tuple(edges), table)

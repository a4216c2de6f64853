"""
4-cycle enumeration and the distance hypothesis on 4-cycles.

A graph satisfies the hypothesis at distance d when any two of its 4-cycles
(facial or not) are at distance at least d.
"""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Optional, Sequence, Tuple

import graphs.core as gc
import validation

logger = logging.getLogger(__name__)

Cycle = Tuple[int, int, int, int]
CycleList = Tuple[Cycle, ...]

DEFAULT_DISTANCE = 5


def canonical_cycle(walk: Sequence[int]) -> Cycle:
    """
    Lexicographically least of the 8 rotations/reflections of a 4-cycle.

    Examples:
        >>> canonical_cycle((2, 1, 0, 3))
        (0, 1, 2, 3)
    """
    if len(walk) != 4 or len(set(walk)) != 4:
        raise validation.ValidationError(f'{tuple(walk)} is not a 4-cycle walk')
    forward = tuple(walk)
    backward = tuple(reversed(walk))
    variants = [seq[i:] + seq[:i] for seq in (forward, backward) for i in range(4)]
    return min(variants)


def enumerate_4cycles(g: gc.Graph) -> CycleList:
    """
    Every 4-cycle of g, canonicalized and sorted.

    Each cycle a-b-c-d is an opposite pair (a, c) with two common
    neighbours b, d; it is met once per diagonal and deduplicated.
    """
    found = set()
    adj = g.adjacency
    for a, c in combinations(range(g.vertex_count), 2):
        common = sorted(adj[a] & adj[c])
        for b, d in combinations(common, 2):
            found.add(canonical_cycle((a, b, c, d)))
    cycles = tuple(sorted(found))
    logger.debug('found %d 4-cycles on %d vertices', len(cycles), g.vertex_count)
    return cycles


def vertices_on_4cycles(g: gc.Graph) -> FrozenSet[int]:
    return frozenset(v for cycle in enumerate_4cycles(g) for v in cycle)


@dataclass(frozen=True)
class ClosestPair:
    distance: Optional[int]
    pair: Optional[Tuple[Cycle, Cycle]]


def closest_4cycle_pair(g: gc.Graph) -> ClosestPair:
    """
    The pair of distinct 4-cycles at least distance, first in sorted order.

    Pairs in different components are skipped; when no pair is connected the
    distance is UNREACHABLE while the pair is still reported.
    """
    cycles = enumerate_4cycles(g)
    if len(cycles) < 2:
        return ClosestPair(None, None)
    nxg = gc.to_networkx(g)
    best_dist, best_pair = None, None
    for i, first in enumerate(cycles):
        if best_dist == 0:
            break
        dist = gc.distances_from(g, first, nxg)
        for second in cycles[i + 1:]:
            reached = [dist[v] for v in second if v in dist]
            if not reached:
                continue
            d = min(reached)
            if best_dist is None or d < best_dist:
                best_dist, best_pair = d, (first, second)
    if best_pair is None:
        return ClosestPair(gc.UNREACHABLE, (cycles[0], cycles[1]))
    return ClosestPair(best_dist, best_pair)


def min_pairwise_4cycle_distance(g: gc.Graph) -> Optional[int]:
    """
    Least distance over pairs of distinct 4-cycles.

    None means fewer than two 4-cycles, or no two of them connected.
    """
    return closest_4cycle_pair(g).distance


@dataclass(frozen=True)
class HypothesisVerdict:
    satisfied: bool
    required: int
    distance: Optional[int] = None
    pair: Optional[Tuple[Cycle, Cycle]] = None

    def describe(self) -> str:
        if self.satisfied:
            if self.distance is None:
                return f'satisfied (fewer than two connected 4-cycles, d={self.required})'
            return f'satisfied (closest 4-cycles at distance {self.distance} >= {self.required})'
        first, second = self.pair
        return (f'violated: 4-cycles {list(first)} and {list(second)} '
                f'at distance {self.distance} < {self.required}')


def validate_hypothesis(g: gc.Graph, d: int = DEFAULT_DISTANCE) -> HypothesisVerdict:
    """Check that any two 4-cycles of g are at distance at least d."""
    validation.validate_nonnegative_integer(d, 'distance')
    closest = closest_4cycle_pair(g)
    if closest.distance is None or closest.distance >= d:
        return HypothesisVerdict(True, d, closest.distance, closest.pair)
    logger.info('hypothesis violated at distance %d (< %d)', closest.distance, d)
    return HypothesisVerdict(False, d, closest.distance, closest.pair)

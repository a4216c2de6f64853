"""
Brute-force ground truth for list coloring.

l_colorable decides one list assignment by exhaustive backtracking, so a
negative answer is a proof. f_choosable_exhaustive ranges over every list
assignment with given sizes; f_choosable_sampled draws them from a seeded
generator when exhaustion is out of reach. cross_check runs either against
a configuration's reducibility verdict.

Sampling is reproducible: trial 0 gives vertex i the colors 1..sizes[i]
(identical lists, the ordinary coloring case). Trials 1.. are drawn in
blocks of SAMPLE_BLOCK from numpy.random.default_rng(seed): each block
draws rng.random((SAMPLE_BLOCK, n, U)) with U = sum(sizes), and vertex i of
a trial takes the sizes[i] colors whose keys sort first (an argsort of
uniform keys is a uniform permutation of 1..U).
"""
import logging
import os
from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

import graphs.core as gc
import nullstellensatz.configuration as cfg
import nullstellensatz.expansion as ex
import validation

logger = logging.getLogger(__name__)

CHOOSABLE = 'choosable'
NOT_CHOOSABLE = 'not_choosable'
NO_COUNTEREXAMPLE = 'no_counterexample_found'

EXHAUSTIVE = 'exhaustive'
SAMPLED = 'sampled'
MODES = [EXHAUSTIVE, SAMPLED]

SAMPLE_BLOCK = 4096

ListAssignment = Tuple[FrozenSet[int], ...]
SizeVector = Tuple[int, ...]


class BudgetError(validation.ValidationError):
    """Exhaustive search requested beyond the configured budget."""
    pass


def exhaustive_budget() -> int:
    return int(os.environ.get('CHOOSE_EXHAUSTIVE_BUDGET', '8'))


def default_trials() -> int:
    return int(os.environ.get('CHOOSE_SAMPLE_TRIALS', '100000'))


def default_seed() -> int:
    return int(os.environ.get('CHOOSE_SAMPLE_SEED', '42'))


@dataclass(frozen=True)
class ColoringVerdict:
    colorable: bool
    coloring: Optional[Tuple[int, ...]] = None


@dataclass(frozen=True)
class ChoosabilityVerdict:
    status: str
    mode: str
    checked: int
    counterexample: Optional[ListAssignment] = None
    trial: Optional[int] = None

    @property
    def found_counterexample(self) -> bool:
        return self.counterexample is not None


def _search_order(g: gc.Graph) -> List[int]:
    # descending degree, ties by index
    return sorted(range(g.vertex_count), key=lambda v: (-len(g.adjacency[v]), v))


def _backtrack(order: Sequence[int], adjacency, lists) -> Optional[List[int]]:
    coloring: List[Optional[int]] = [None] * len(lists)
    options = [sorted(lists[v]) for v in order]

    def place(pos: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        for color in options[pos]:
            if all(coloring[u] != color for u in adjacency[v]):
                coloring[v] = color
                if place(pos + 1):
                    return True
        coloring[v] = None
        return False

    return coloring if place(0) else None


def _check_lists(g: gc.Graph, lists: Sequence[Iterable[int]]) -> ListAssignment:
    if len(lists) != g.vertex_count:
        raise validation.ValidationError(
            f'list assignment covers {len(lists)} vertices, graph has {g.vertex_count}')
    checked = tuple(frozenset(lst) for lst in lists)
    for v, lst in enumerate(checked):
        if not lst:
            raise validation.ValidationError(f'empty list on vertex {v}')
    return checked


def verify_coloring(g: gc.Graph, lists: Sequence[Iterable[int]],
                    coloring: Sequence[int]) -> bool:
    """Direct re-check: proper, and every color drawn from its vertex's list."""
    if len(coloring) != g.vertex_count:
        return False
    if any(coloring[v] not in set(lists[v]) for v in range(g.vertex_count)):
        return False
    return all(coloring[u] != coloring[v] for u, v in g.edges)


def l_colorable(g: gc.Graph, lists: Sequence[Iterable[int]]) -> ColoringVerdict:
    """
    Decide L-colorability by exhaustive backtracking.

    Raises:
        ValidationError: if a list is empty or the assignment has the wrong length
    """
    checked = _check_lists(g, lists)
    found = _backtrack(_search_order(g), g.adjacency, checked)
    if found is None:
        return ColoringVerdict(False)
    return ColoringVerdict(True, tuple(found))


def _check_sizes(g: gc.Graph, sizes: Sequence[int]) -> SizeVector:
    return tuple(validation.validate_vector(sizes, 'sizes', g.vertex_count, min_value=1))


def f_choosable_exhaustive(g: gc.Graph, sizes: Sequence[int],
                           budget: Optional[int] = None,
                           allow_large: bool = False) -> ChoosabilityVerdict:
    """
    Try every list assignment with the given sizes over colors 1..sum(sizes).

    Vertex 0 keeps the colors 1..sizes[0]; any assignment can be relabelled
    injectively into this universe with vertex 0's list mapped there.

    Raises:
        BudgetError: if sum(sizes) exceeds the budget and allow_large is off
    """
    sizes = _check_sizes(g, sizes)
    budget = exhaustive_budget() if budget is None else budget
    total = sum(sizes)
    if total > budget and not allow_large:
        raise BudgetError(
            f'exhaustive search over sizes summing to {total} exceeds budget {budget}; '
            'use sampling or allow a larger search')
    if g.vertex_count == 0:
        return ChoosabilityVerdict(CHOOSABLE, EXHAUSTIVE, 1)
    universe = range(1, total + 1)
    order = _search_order(g)
    pinned = frozenset(range(1, sizes[0] + 1))
    choices = [[frozenset(c) for c in combinations(universe, s)] for s in sizes[1:]]
    checked = 0
    for rest in product(*choices):
        lists = (pinned,) + rest
        checked += 1
        if _backtrack(order, g.adjacency, lists) is None:
            logger.info('counterexample after %d assignments', checked)
            return ChoosabilityVerdict(NOT_CHOOSABLE, EXHAUSTIVE, checked, lists)
    logger.info('all %d assignments colorable', checked)
    return ChoosabilityVerdict(CHOOSABLE, EXHAUSTIVE, checked)


def identical_assignment(sizes: Sequence[int]) -> ListAssignment:
    return tuple(frozenset(range(1, s + 1)) for s in sizes)


def sampled_assignments(sizes: Sequence[int], trials: int, seed: int):
    """Yield the (trial, assignment) sequence documented in the module docstring."""
    yield 0, identical_assignment(sizes)
    n, universe = len(sizes), sum(sizes)
    if n == 0:
        return
    rng = np.random.default_rng(seed)
    widest = max(sizes)
    trial = 1
    while trial < trials:
        block = min(SAMPLE_BLOCK, trials - trial)
        keys = rng.random((SAMPLE_BLOCK, n, universe))
        picks = (np.argsort(keys, axis=2)[:, :, :widest] + 1).tolist()
        for row in picks[:block]:
            yield trial, tuple(frozenset(row[v][:sizes[v]]) for v in range(n))
            trial += 1


def f_choosable_sampled(g: gc.Graph, sizes: Sequence[int], trials: int,
                        seed: int) -> ChoosabilityVerdict:
    """
    Check `trials` list assignments (the identical one first) and report the
    lowest-indexed failure, if any.

    Raises:
        ValidationError: if trials < 1
    """
    sizes = _check_sizes(g, sizes)
    validation.validate_positive_integer(trials, 'trials')
    validation.validate_integer(seed, 'seed', min_value=0)
    order = _search_order(g)
    checked = 0
    for trial, lists in sampled_assignments(sizes, trials, seed):
        checked += 1
        if _backtrack(order, g.adjacency, lists) is None:
            logger.info('sampled counterexample at trial %d', trial)
            return ChoosabilityVerdict(NOT_CHOOSABLE, SAMPLED, checked, lists, trial)
    logger.info('%d sampled assignments colorable (seed %d)', checked, seed)
    return ChoosabilityVerdict(NO_COUNTEREXAMPLE, SAMPLED, checked)


def extend_coloring(g: gc.Graph, lists: Sequence[Iterable[int]],
                    coloring: Dict[int, int], v: int) -> int:
    """
    Color v with the least list color unused by its colored neighbours.

    Always succeeds when v has fewer colored neighbours than list entries,
    which is how vertices of degree at most k-1 are recolored after removal.

    Raises:
        ValidationError: if every color of v's list is blocked
    """
    validation.validate_vertex(v, g.vertex_count)
    blocked = {coloring[u] for u in g.adjacency[v] if u in coloring}
    free = sorted(set(lists[v]) - blocked)
    if not free:
        raise validation.ValidationError(f'vertex {v}: every list color is used by a neighbour')
    coloring[v] = free[0]
    return free[0]


def greedy_peeling_order(g: gc.Graph, sizes: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """
    Removal order in which each vertex has fewer remaining neighbours than
    its list size, or None if the peeling gets stuck.

    Coloring in reverse removal order with extend_coloring never fails, so a
    complete order certifies choosability for these sizes.
    """
    sizes = _check_sizes(g, sizes)
    remaining = set(range(g.vertex_count))
    order = []
    while remaining:
        ready = [v for v in sorted(remaining)
                 if len(g.adjacency[v] & remaining) < sizes[v]]
        if not ready:
            return None
        order.append(ready[0])
        remaining.discard(ready[0])
    return tuple(order)


def color_by_peeling(g: gc.Graph, lists: Sequence[Iterable[int]]) -> Optional[Tuple[int, ...]]:
    """L-coloring built from greedy_peeling_order, or None when peeling is stuck."""
    checked = _check_lists(g, lists)
    order = greedy_peeling_order(g, [len(lst) for lst in checked])
    if order is None:
        return None
    coloring: Dict[int, int] = {}
    for v in reversed(order):
        extend_coloring(g, checked, coloring, v)
    return tuple(coloring[v] for v in range(g.vertex_count))


@dataclass(frozen=True)
class CrossCheckReport:
    name: str
    cn_status: str
    sizes: SizeVector
    oracle: ChoosabilityVerdict
    asserted: bool

    @property
    def passed(self) -> bool:
        """False only when a reducible verdict meets a counterexample."""
        return not (self.asserted and self.oracle.found_counterexample)


def cross_check(c: cfg.Configuration, mode: str = EXHAUSTIVE,
                trials: Optional[int] = None, seed: Optional[int] = None,
                verdict: Optional[ex.ReducibilityVerdict] = None,
                allow_large: bool = False) -> CrossCheckReport:
    """
    Run the oracle on c's internal graph with list sizes cap_i + 1.

    A reducible verdict is asserted against the oracle; an inconclusive one
    is reported alongside the oracle's answer without assertion.
    """
    validation.validate_enum(mode, 'mode', MODES)
    verdict = verdict if verdict is not None else ex.is_reducible(c)
    sizes = tuple(t + 1 for t in verdict.caps)
    if mode == EXHAUSTIVE:
        oracle = f_choosable_exhaustive(c.internal, sizes, allow_large=allow_large)
    else:
        oracle = f_choosable_sampled(
            c.internal, sizes,
            default_trials() if trials is None else trials,
            default_seed() if seed is None else seed)
    report = CrossCheckReport(c.name, verdict.status, sizes, oracle, verdict.reducible)
    if not report.passed:
        logger.error('%s: reducible verdict contradicted by oracle at sizes %s',
                     c.name, sizes)
    return report

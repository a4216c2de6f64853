"""
Charges and the two discharging rounds.

Every vertex starts with d(v) - 2 and every face with -2, which sums to -4
on a connected plane graph. Round one applies R1-R5 per vertex-face
incidence; round two (R6) lets each rich vertex hand its whole surplus to a
poor 5- or 6-vertex over a nice path. Every move is a Transfer in the
ledger, so either stage can be rebuilt from stage 0 with replay().

All amounts are Fractions.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

import graphs.core as gc
import graphs.cycles as cy
import validation
from discharge import plane
from discharge import statistics as st

logger = logging.getLogger(__name__)

VERTEX = 'v'
FACE = 'f'

R1 = 'R1'
R2_1 = 'R2.1'
R2_2 = 'R2.2'
R3 = 'R3'
R4 = 'R4'
R5 = 'R5'
R6 = 'R6'
ROUND_ONE_RULES = (R1, R2_1, R2_2, R3, R4, R5)
ROUND_TWO_RULES = (R6,)
ALL_RULES = ROUND_ONE_RULES + ROUND_TWO_RULES

STAGES = (0, 1, 2)
EXPECTED_TOTAL = Fraction(-4)
NICE_PATH_MAX_INNER_DEGREE = 5
POOR_TARGET_DEGREES = (5, 6)

Element = Tuple[str, int]


class DisconnectedError(validation.ValidationError):
    """Initial charges are only defined for connected plane graphs."""
    pass


def label(element: Element) -> str:
    """('v', 3) -> 'v3'"""
    kind, index = element
    return f'{kind}{index}'


@dataclass(frozen=True)
class Transfer:
    source: Element
    target: Element
    amount: Fraction
    rule: str


@dataclass(frozen=True)
class ChargeState:
    stage: int
    vertex_charge: Tuple[Fraction, ...]
    face_charge: Tuple[Fraction, ...]

    @property
    def total(self) -> Fraction:
        return sum(self.vertex_charge, Fraction(0)) + sum(self.face_charge, Fraction(0))

    def charge(self, element: Element) -> Fraction:
        kind, index = element
        return (self.vertex_charge if kind == VERTEX else self.face_charge)[index]

    def negative_elements(self) -> List[Element]:
        return ([(VERTEX, v) for v, c in enumerate(self.vertex_charge) if c < 0]
                + [(FACE, f) for f, c in enumerate(self.face_charge) if c < 0])


def apply_transfers(state: ChargeState, transfers: Iterable[Transfer],
                    stage: int) -> ChargeState:
    charges = {VERTEX: list(state.vertex_charge), FACE: list(state.face_charge)}
    for t in transfers:
        charges[t.source[0]][t.source[1]] -= t.amount
        charges[t.target[0]][t.target[1]] += t.amount
    return ChargeState(stage, tuple(charges[VERTEX]), tuple(charges[FACE]))


def replay(initial: ChargeState, ledger: Sequence[Transfer],
           rules: Sequence[str] = ALL_RULES, stage: Optional[int] = None) -> ChargeState:
    """Apply the ledger records tagged with one of `rules` to `initial`."""
    for rule in rules:
        validation.validate_enum(rule, 'rule', list(ALL_RULES))
    if stage is None:
        stage = 2 if R6 in rules else 1
    return apply_transfers(initial, (t for t in ledger if t.rule in rules), stage)


def initial_charges(pg: plane.PlaneGraph,
                    faces: Optional[Sequence[plane.Face]] = None) -> ChargeState:
    """
    Stage-0 charges: d(v) - 2 on vertices, -2 on faces.

    Raises:
        DisconnectedError: if the underlying graph is disconnected
        RotationError: if the rotation system is not a plane embedding
    """
    if not gc.is_connected(pg.underlying):
        components = nx.number_connected_components(gc.to_networkx(pg.underlying))
        raise DisconnectedError(
            f'plane graph has {components} components; charges are defined '
            f'for connected graphs only (total would be {-2 - 2 * components})')
    faces = faces if faces is not None else plane.trace_faces(pg)
    euler = plane.euler_characteristic(pg, faces)
    if euler != 2:
        raise plane.RotationError(
            f'rotation system is not planar: V - E + F = {euler}, expected 2')
    state = ChargeState(0,
                        tuple(Fraction(d - 2) for d in pg.degrees),
                        tuple(Fraction(-2) for _ in faces))
    logger.info('stage 0: %d vertices, %d faces, total %s',
                pg.vertex_count, len(faces), state.total)
    return state


def incidence_transfer(vs: st.VertexStats,
                       fs: st.FaceStats) -> Optional[Tuple[Fraction, str]]:
    """
    Amount and rule tag a vertex sends to one incident face, or None.

    R1 covers 3-faces and 6+-faces for every degree. On 4- and 5-faces,
    4-vertices follow R2, 5-vertices R3 and 6+-vertices R4; vertices of
    degree at most 3 send nothing there.
    """
    length, k = fs.degree, vs.degree
    if length == 3:
        return Fraction(2, 3), R1
    if length >= 6:
        return Fraction(1, 3), R1
    if length not in (4, 5) or k <= 3:
        return None
    if k == 4:
        if fs.bad and vs.f3 <= 1:
            return (Fraction(2, 3) if len(fs.t_set) == 1 else Fraction(1, 2)), R2_1
        return Fraction(1, 3), R2_2
    if k == 5:
        if fs.n6_plus == 1:
            return (Fraction(5, 9) if length == 4 else Fraction(4, 9)), R3
        return st.face_gamma(fs), R3
    if fs.n5 == 1:
        return (Fraction(7, 9) if length == 4 else Fraction(5, 9)), R4
    return st.face_gamma(fs), R4


def round1(pg: plane.PlaneGraph,
           faces: Optional[Sequence[plane.Face]] = None,
           stats: Optional[st.Statistics] = None
           ) -> Tuple[ChargeState, List[Transfer], List[str]]:
    """
    Apply R1-R5 and return (stage-1 charges, ledger, diagnostics).

    Each vertex-face incidence triggers exactly one of R1-R4; R5 then runs
    over the bad 5-faces whose vertices all have two incident 3-faces.
    """
    faces = faces if faces is not None else plane.trace_faces(pg)
    stats = stats if stats is not None else st.face_statistics(pg, faces)
    state0 = initial_charges(pg, faces)
    owner = plane.dart_faces(faces)
    ledger: List[Transfer] = []
    diagnostics: List[str] = []

    for v in range(pg.vertex_count):
        vs = stats.vertices[v]
        for u in pg.rotation[v]:
            f = owner[(v, u)]
            move = incidence_transfer(vs, stats.faces[f])
            if move is not None:
                amount, rule = move
                ledger.append(Transfer((VERTEX, v), (FACE, f), amount, rule))

    on_4cycle = cy.vertices_on_4cycles(pg.underlying)
    for f, face in enumerate(faces):
        if not stats.faces[f].bad:
            continue
        if any(stats.vertices[w].f3 != 2 for w in face.vertices):
            continue
        for a, b in face.darts:
            across = faces[owner[(b, a)]]
            if across.degree != 3:
                note = f'R5: edge {a}-{b} of f{f} has no 3-face across it; no transfer'
                logger.warning(note)
                diagnostics.append(note)
                continue
            u = next(w for w in across.vertices if w not in (a, b))
            if u not in on_4cycle:
                ledger.append(Transfer((VERTEX, u), (FACE, f), Fraction(1, 9), R5))

    state1 = apply_transfers(state0, ledger, 1)
    logger.info('stage 1: %d transfers, total %s', len(ledger), state1.total)
    return state1, ledger, diagnostics


@dataclass(frozen=True)
class VertexClassification:
    rich: FrozenSet[int]
    poor: FrozenSet[int]
    good4: FrozenSet[int]
    bad4: FrozenSet[int]
    on_4cycle: FrozenSet[int]

    def labels(self, v: int) -> List[str]:
        names = [('rich', self.rich), ('poor', self.poor),
                 ('good-4', self.good4), ('bad-4', self.bad4)]
        return [name for name, members in names if v in members]


def classify(pg: plane.PlaneGraph, state1: ChargeState,
             stats: Optional[st.Statistics] = None) -> VertexClassification:
    stats = stats if stats is not None else st.face_statistics(pg)
    on_4cycle = cy.vertices_on_4cycles(pg.underlying)
    charges = state1.vertex_charge
    rich = frozenset(v for v, c in enumerate(charges) if c > 0)
    poor = frozenset(v for v, c in enumerate(charges) if c < 0 and v in on_4cycle)
    fours = [v for v in range(pg.vertex_count) if stats.vertices[v].degree == 4]
    good4 = frozenset(v for v in fours
                      if stats.vertices[v].f3 + stats.vertices[v].f5_bad <= 1)
    bad4 = frozenset(v for v in fours
                     if stats.vertices[v].f3 == 1 and stats.vertices[v].f5_bad == 1)
    return VertexClassification(rich, poor, good4, bad4, on_4cycle)


def nice_paths(pg: plane.PlaneGraph, u: int, v: int) -> List[Tuple[int, ...]]:
    """
    u-v paths of length one, and of length two through a vertex of degree
    at most 5, sorted.
    """
    validation.validate_vertex(u, pg.vertex_count, 'u')
    validation.validate_vertex(v, pg.vertex_count, 'v')
    if u == v:
        return []
    adj = pg.underlying.adjacency
    paths: List[Tuple[int, ...]] = []
    if v in adj[u]:
        paths.append((u, v))
    for w in sorted(adj[u] & adj[v]):
        if pg.degrees[w] <= NICE_PATH_MAX_INNER_DEGREE:
            paths.append((u, w, v))
    return paths


def round2(pg: plane.PlaneGraph, state1: ChargeState,
           classification: VertexClassification
           ) -> Tuple[ChargeState, List[Transfer], List[str]]:
    """
    R6: each rich vertex sends its whole stage-1 charge to a poor 5- or
    6-vertex joined to it by a nice path. A rich vertex with several such
    targets is reported and sends to the lowest-indexed one.
    """
    targets = [u for u in sorted(classification.poor)
               if pg.degrees[u] in POOR_TARGET_DEGREES]
    transfers: List[Transfer] = []
    diagnostics: List[str] = []
    for v in sorted(classification.rich):
        reachable = [u for u in targets if nice_paths(pg, u, v)]
        if not reachable:
            continue
        if len(reachable) > 1:
            note = (f'contested rich vertex v{v}: nice paths to poor vertices '
                    f'{reachable}; sending to v{reachable[0]}')
            logger.warning(note)
            diagnostics.append(note)
        transfers.append(Transfer((VERTEX, v), (VERTEX, reachable[0]),
                                  state1.vertex_charge[v], R6))
    state2 = apply_transfers(state1, transfers, 2)
    logger.info('stage 2: %d transfers, total %s', len(transfers), state2.total)
    return state2, transfers, diagnostics

"""
Full discharging run on one plane graph, rendered as text or JSON.
"""
import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import graphs.core as gc
import graphs.cycles as cy
import utils
import validation
from discharge import plane
from discharge import rules
from discharge import statistics as st

logger = logging.getLogger(__name__)

MIN_DEGREE_EXPECTED = 4
NONE = 'none'


@dataclass(frozen=True)
class DischargeReport:
    pg: plane.PlaneGraph
    faces: Tuple[plane.Face, ...]
    stats: st.Statistics
    states: Tuple[rules.ChargeState, ...]
    ledger: Tuple[rules.Transfer, ...]
    classification: rules.VertexClassification
    triangle_bound: Tuple[int, ...]
    hypothesis: cy.HypothesisVerdict
    diagnostics: Tuple[str, ...]

    @property
    def negative(self) -> List[rules.Element]:
        """Elements whose final charge is negative."""
        return self.states[-1].negative_elements()

    @property
    def all_nonnegative(self) -> bool:
        return not self.negative


def report(pg: plane.PlaneGraph, distance: int = cy.DEFAULT_DISTANCE) -> DischargeReport:
    """
    Trace faces, run both rounds and gather every check.

    Raises:
        DisconnectedError, RotationError: propagated from initial_charges
    """
    faces = plane.trace_faces(pg)
    stats = st.face_statistics(pg, faces)
    state0 = rules.initial_charges(pg, faces)
    diagnostics: List[str] = []
    delta = gc.min_degree(pg.underlying)
    if delta < MIN_DEGREE_EXPECTED:
        note = f'minimum degree {delta} is below {MIN_DEGREE_EXPECTED}'
        logger.warning(note)
        diagnostics.append(note)
    state1, ledger1, notes1 = rules.round1(pg, faces, stats)
    classification = rules.classify(pg, state1, stats)
    state2, ledger2, notes2 = rules.round2(pg, state1, classification)
    diagnostics += notes1 + notes2
    triangle_bound = st.triangle_bound_violations(stats)
    if triangle_bound:
        logger.warning('f3(v) exceeds ceil(d(v)/2) at %s', triangle_bound)
    hypothesis = cy.validate_hypothesis(pg.underlying, distance)
    return DischargeReport(pg, tuple(faces), stats, (state0, state1, state2),
                           tuple(ledger1 + ledger2), classification,
                           tuple(triangle_bound), hypothesis, tuple(diagnostics))


def _elements(r: DischargeReport) -> List[rules.Element]:
    return ([(rules.VERTEX, v) for v in range(r.pg.vertex_count)]
            + [(rules.FACE, f) for f in range(len(r.faces))])


def _stage_transfers(r: DischargeReport, stage: int) -> List[rules.Transfer]:
    applied = () if stage == 0 else rules.ROUND_ONE_RULES if stage == 1 else rules.ALL_RULES
    return [t for t in r.ledger if t.rule in applied]


def _vertex_list(vertices: Sequence[int]) -> str:
    return ' '.join(f'v{v}' for v in sorted(vertices)) or NONE


def render_text(r: DischargeReport, stage: int = 2) -> str:
    """Human-readable report; charge tables for stages 0..stage."""
    validation.validate_enum(stage, 'stage', list(rules.STAGES))
    shown = r.states[:stage + 1]
    lines = [f'plane graph: {r.pg.vertex_count} vertices, {r.pg.edge_count} edges, '
             f'{len(r.faces)} faces']
    for f, face in enumerate(r.faces):
        boundary = ' '.join(str(v) for v in face.vertices)
        lines.append(f'face f{f}: degree {face.degree}, boundary {boundary}'.rstrip())
    lines.append('charges:')
    for element in _elements(r):
        values = ' '.join(f'ch{s.stage}={utils.format_rational(s.charge(element))}'
                          for s in shown)
        lines.append(f'{rules.label(element)} {values}')
    lines.append('totals: ' + ' '.join(f'ch{s.stage}={utils.format_rational(s.total)}'
                                       for s in shown))
    transfers = _stage_transfers(r, stage)
    lines.append(f'transfers: {len(transfers)}')
    for t in transfers:
        lines.append(f'{t.rule} {rules.label(t.source)} -> {rules.label(t.target)} '
                     f'{utils.format_rational(t.amount)}')
    c = r.classification
    lines.append(f'rich: {_vertex_list(c.rich)}')
    lines.append(f'poor: {_vertex_list(c.poor)}')
    lines.append(f'good-4: {_vertex_list(c.good4)}')
    lines.append(f'bad-4: {_vertex_list(c.bad4)}')
    if r.triangle_bound:
        lines.append(f'triangle bound: violated at {_vertex_list(r.triangle_bound)}')
    else:
        lines.append('triangle bound: ok')
    lines.append(f'hypothesis: {r.hypothesis.describe()}')
    lines += [f'diagnostic: {note}' for note in r.diagnostics]
    negative = ' '.join(rules.label(e) for e in r.negative) or NONE
    lines.append(f'negative ch2: {negative}')
    return '\n'.join(lines)


def to_json(r: DischargeReport, stage: int = 2) -> dict:
    """JSON-ready dict; rationals as "p/q" strings."""
    validation.validate_enum(stage, 'stage', list(rules.STAGES))
    shown = r.states[:stage + 1]
    c = r.classification
    h = r.hypothesis
    return {
        'vertices': r.pg.vertex_count,
        'edges': r.pg.edge_count,
        'faces': [{'face': f'f{f}', 'degree': face.degree, 'boundary': list(face.vertices)}
                  for f, face in enumerate(r.faces)],
        'charges': {f'ch{s.stage}': {rules.label(e): utils.format_rational(s.charge(e))
                                     for e in _elements(r)}
                    for s in shown},
        'totals': {f'ch{s.stage}': utils.format_rational(s.total) for s in shown},
        'ledger': [{'source': rules.label(t.source), 'target': rules.label(t.target),
                    'amount': utils.format_rational(t.amount), 'rule': t.rule}
                   for t in _stage_transfers(r, stage)],
        'classification': {'rich': sorted(c.rich), 'poor': sorted(c.poor),
                           'good4': sorted(c.good4), 'bad4': sorted(c.bad4)},
        'triangle_bound_violations': list(r.triangle_bound),
        'hypothesis': {'satisfied': h.satisfied, 'required': h.required,
                       'distance': h.distance,
                       'pair': [list(cyc) for cyc in h.pair] if h.pair else None},
        'diagnostics': list(r.diagnostics),
        'negative': [rules.label(e) for e in r.negative],
    }

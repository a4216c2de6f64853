"""
Tests for discharge.rules
"""
from fractions import Fraction

import pytest

from discharge import plane
from discharge import rules
from discharge import statistics as st
from discharge.tests import samples

THIRD = Fraction(1, 3)


def vertex_stats(degree, f3=0):
    return st.VertexStats(degree, f3, 0, 0, 0, 0, {})


def face_stats(degree, n4=0, n5=0, n6_plus=0, bad=False, t_set=()):
    return st.FaceStats(degree, n4, n5, n6_plus, bad, t_set)


def run_rounds(pg):
    faces = plane.trace_faces(pg)
    stats = st.face_statistics(pg, faces)
    state0 = rules.initial_charges(pg, faces)
    state1, ledger1, _ = rules.round1(pg, faces, stats)
    classification = rules.classify(pg, state1, stats)
    state2, ledger2, _ = rules.round2(pg, state1, classification)
    return faces, (state0, state1, state2), ledger1, ledger2, classification


def icosahedron_state(vertex_charges):
    charges = [Fraction(c) for c in vertex_charges] + [Fraction(0)] * (12 - len(vertex_charges))
    return rules.ChargeState(1, tuple(charges), (Fraction(0),) * 20)


def test_initial_charges_q3():
    state = rules.initial_charges(samples.sample('q3'))
    assert state.vertex_charge == (Fraction(1),) * 8
    assert state.face_charge == (Fraction(-2),) * 6
    assert state.total == -4


def test_initial_charges_icosahedron():
    state = rules.initial_charges(samples.sample('icosahedron'))
    assert set(state.vertex_charge) == {Fraction(3)}
    assert sum(state.face_charge) == -40
    assert state.total == rules.EXPECTED_TOTAL


def test_initial_charges_k4():
    state = rules.initial_charges(samples.sample('k4'))
    assert state.vertex_charge == (Fraction(1),) * 4
    assert state.total == -4


def test_initial_charges_single_vertex():
    state = rules.initial_charges(plane.build_plane_graph(1, [[]]))
    assert state.vertex_charge == (Fraction(-2),)
    assert state.total == -4


def test_disconnected_rejected():
    pg = plane.build_plane_graph(3, [[1], [0], []])
    with pytest.raises(rules.DisconnectedError, match='2 components'):
        rules.initial_charges(pg)


def test_non_planar_rotation_rejected():
    pg = plane.build_plane_graph(4, [[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]])
    with pytest.raises(plane.RotationError, match='not planar'):
        rules.initial_charges(pg)


@pytest.mark.parametrize('vs, fs, expected', [
    (vertex_stats(3), face_stats(3), (Fraction(2, 3), rules.R1)),
    (vertex_stats(7), face_stats(3), (Fraction(2, 3), rules.R1)),
    (vertex_stats(2), face_stats(8), (THIRD, rules.R1)),
    (vertex_stats(3), face_stats(4), None),
    (vertex_stats(3), face_stats(5), None),
    (vertex_stats(4, f3=1), face_stats(5, n4=5, bad=True, t_set=(0,)),
     (Fraction(2, 3), rules.R2_1)),
    (vertex_stats(4, f3=0), face_stats(5, n4=5, bad=True, t_set=(0, 1)),
     (Fraction(1, 2), rules.R2_1)),
    (vertex_stats(4, f3=2), face_stats(5, n4=5, bad=True), (THIRD, rules.R2_2)),
    (vertex_stats(4), face_stats(4, n4=4), (THIRD, rules.R2_2)),
    (vertex_stats(5), face_stats(4, n5=3, n6_plus=1), (Fraction(5, 9), rules.R3)),
    (vertex_stats(5), face_stats(5, n4=3, n5=1, n6_plus=1), (Fraction(4, 9), rules.R3)),
    (vertex_stats(5), face_stats(4, n5=4), (Fraction(1, 2), rules.R3)),
    (vertex_stats(6), face_stats(4, n5=1, n6_plus=3), (Fraction(7, 9), rules.R4)),
    (vertex_stats(6), face_stats(5, n4=4, n5=0, n6_plus=1), (Fraction(2, 3), rules.R4)),
    (vertex_stats(6), face_stats(5, n4=3, n5=1, n6_plus=1), (Fraction(5, 9), rules.R4)),
    (vertex_stats(7), face_stats(4, n4=2, n6_plus=2), (Fraction(2, 3), rules.R4)),
])
def test_incidence_transfer(vs, fs, expected):
    assert rules.incidence_transfer(vs, fs) == expected


def test_round1_icosahedron():
    pg = samples.sample('icosahedron')
    state1, ledger, diagnostics = rules.round1(pg)
    assert state1.vertex_charge == (Fraction(-1, 3),) * 12
    assert state1.face_charge == (Fraction(0),) * 20
    assert state1.total == -4
    assert len(ledger) == 60
    assert all(t.rule == rules.R1 and t.amount == Fraction(2, 3) for t in ledger)
    assert diagnostics == []


def test_round1_q3_sends_nothing():
    pg = samples.sample('q3')
    state1, ledger, _ = rules.round1(pg)
    assert ledger == []
    assert state1.vertex_charge == rules.initial_charges(pg).vertex_charge


def test_round1_wheel():
    state1, ledger, _ = rules.round1(samples.wheel6())
    assert state1.vertex_charge == (Fraction(0),) + (Fraction(-2, 3),) * 6
    assert state1.face_charge == (Fraction(0),) * 7
    assert len(ledger) == 24


def test_round1_antiprism():
    state1, ledger, _ = rules.round1(samples.sample('pentagonal_antiprism'))
    assert state1.vertex_charge == (Fraction(-1, 3),) * 10
    pentagons = [c for c in state1.face_charge if c != 0]
    assert pentagons == [Fraction(-1, 3)] * 2
    assert sum(1 for t in ledger if t.rule == rules.R2_2) == 10
    assert state1.total == -4


def test_round1_pentagon_sun_r5():
    state1, ledger, diagnostics = rules.round1(samples.sample('pentagon_sun'))
    r5 = [t for t in ledger if t.rule == rules.R5]
    assert r5 == [rules.Transfer((rules.VERTEX, u), (rules.FACE, 2), Fraction(1, 9), rules.R5)
                  for u in (9, 8, 7, 6, 5)]
    assert state1.vertex_charge == (Fraction(0),) * 5 + (Fraction(-10, 9),) * 5
    assert state1.face_charge[0] == Fraction(4, 3)
    assert state1.face_charge[2] == Fraction(2, 9)
    assert state1.total == -4
    assert diagnostics == []


@pytest.mark.parametrize('seed', range(10))
def test_conservation_and_replay(seed):
    pg = samples.random_plane_graph(seed)
    _, (state0, state1, state2), ledger1, ledger2, _ = run_rounds(pg)
    assert [s.total for s in (state0, state1, state2)] == [rules.EXPECTED_TOTAL] * 3
    assert rules.replay(state0, ledger1, rules.ROUND_ONE_RULES) == state1
    assert rules.replay(state0, ledger1 + ledger2) == state2
    assert rules.replay(state1, ledger2, rules.ROUND_TWO_RULES) == state2


@pytest.mark.parametrize('seed', range(10))
def test_r1_totals(seed):
    pg = samples.random_plane_graph(seed)
    faces, _, ledger1, _, _ = run_rounds(pg)
    for f, face in enumerate(faces):
        received = sum((t.amount for t in ledger1
                        if t.target == (rules.FACE, f) and t.rule == rules.R1), Fraction(0))
        if face.degree == 3:
            assert received == Fraction(2)
        elif face.degree >= 6:
            assert received == Fraction(face.degree, 3)


@pytest.mark.parametrize('seed', range(10))
def test_r6_senders_end_at_zero(seed):
    pg = samples.random_plane_graph(seed)
    _, (_, state1, state2), _, ledger2, classification = run_rounds(pg)
    senders = {t.source[1] for t in ledger2}
    for v in classification.rich:
        assert state2.vertex_charge[v] == (0 if v in senders else state1.vertex_charge[v])


def test_replay_rejects_unknown_rule():
    state0 = rules.initial_charges(samples.sample('k4'))
    with pytest.raises(ValueError, match='rule must be one of'):
        rules.replay(state0, [], ['R9'])


def test_classify_icosahedron_all_poor():
    pg = samples.sample('icosahedron')
    state1, _, _ = rules.round1(pg)
    c = rules.classify(pg, state1)
    assert c.poor == frozenset(range(12))
    assert c.rich == frozenset()
    assert c.labels(0) == ['poor']


def test_classify_zero_charge_neither():
    pg = samples.wheel6()
    state1, _, _ = rules.round1(pg)
    c = rules.classify(pg, state1)
    assert 0 not in c.rich and 0 not in c.poor
    assert c.poor == frozenset(range(1, 7))


def test_classify_q3_all_rich():
    pg = samples.sample('q3')
    state1, _, _ = rules.round1(pg)
    assert rules.classify(pg, state1).rich == frozenset(range(8))


def test_classify_four_vertices():
    pg = samples.sample('pentagonal_antiprism')
    state1, _, _ = rules.round1(pg)
    c = rules.classify(pg, state1)
    assert c.good4 == frozenset()
    assert c.bad4 == frozenset()


def test_classify_bad_four_vertex():
    # a 4-vertex with one 3-face and one bad 5-face
    pg = samples.sample('icosahedron')
    stats = st.Statistics(
        faces=(),
        vertices=tuple(st.VertexStats(4, 1, 0, 1, 1, 2, {}) if v == 0 else
                       st.VertexStats(5, 5, 0, 0, 0, 0, {}) for v in range(12)))
    c = rules.classify(pg, rules.initial_charges(pg), stats)
    assert c.bad4 == frozenset({0})
    assert c.good4 == frozenset()


def test_nice_paths_adjacent_and_through_5_vertices():
    pg = samples.sample('icosahedron')
    assert rules.nice_paths(pg, 1, 0) == [(1, 0), (1, 2, 0), (1, 5, 0)]


def test_nice_paths_exclude_6_vertex_middle():
    assert rules.nice_paths(samples.wheel6(), 1, 3) == [(1, 2, 3)]


def test_nice_paths_same_vertex():
    assert rules.nice_paths(samples.wheel6(), 2, 2) == []


def test_round2_no_poor_vertices():
    pg = samples.sample('q3')
    state1, _, _ = rules.round1(pg)
    state2, transfers, diagnostics = rules.round2(pg, state1, rules.classify(pg, state1))
    assert transfers == []
    assert state2.vertex_charge == state1.vertex_charge
    assert state2.stage == 2


def test_round2_sends_whole_surplus():
    pg = samples.sample('icosahedron')
    state1 = icosahedron_state([THIRD, -THIRD])
    c = rules.classify(pg, state1)
    state2, transfers, diagnostics = rules.round2(pg, state1, c)
    assert transfers == [rules.Transfer((rules.VERTEX, 0), (rules.VERTEX, 1), THIRD, rules.R6)]
    assert state2.vertex_charge[0] == 0
    assert state2.vertex_charge[1] == 0
    assert diagnostics == []


def test_round2_contested_goes_to_lowest_index():
    pg = samples.sample('icosahedron')
    state1 = icosahedron_state([THIRD, -THIRD, -THIRD])
    state2, transfers, diagnostics = rules.round2(pg, state1, rules.classify(pg, state1))
    assert [t.target for t in transfers] == [(rules.VERTEX, 1)]
    assert len(diagnostics) == 1
    assert 'contested rich vertex v0' in diagnostics[0]


def test_round2_skips_poor_4_vertices():
    pg = samples.sample('pentagonal_antiprism')
    state1 = rules.ChargeState(1, (THIRD, -THIRD) + (Fraction(0),) * 8, (Fraction(0),) * 12)
    _, transfers, _ = rules.round2(pg, state1, rules.classify(pg, state1))
    assert transfers == []

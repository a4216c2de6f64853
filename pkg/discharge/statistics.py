"""
Per-face and per-vertex counts the discharging rules read.

All counts are per incidence: a face whose boundary walk visits v twice
contributes twice to the f_k(v) of v, and v contributes twice to the n_k of
that face.
"""
from collections import Counter
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import List, Mapping, Optional, Sequence, Tuple

import validation
from discharge import plane

BAD_FACE_LENGTH = 5
BAD_VERTEX_DEGREE = 4


@dataclass(frozen=True)
class FaceStats:
    degree: int
    n4: int
    n5: int
    n6_plus: int
    bad: bool
    # distinct boundary vertices of degree 4 with f3 <= 1
    t_set: Tuple[int, ...] = ()

    @property
    def n5_plus(self) -> int:
        return self.n5 + self.n6_plus


@dataclass(frozen=True)
class VertexStats:
    degree: int
    f3: int
    f4: int
    f5: int
    f5_bad: int
    f6_plus: int
    neighbour_degrees: Mapping[int, int]

    def n(self, k: int) -> int:
        """Number of neighbours of degree k."""
        return self.neighbour_degrees.get(k, 0)


@dataclass(frozen=True)
class Statistics:
    faces: Tuple[FaceStats, ...]
    vertices: Tuple[VertexStats, ...]


def face_counts(face: plane.Face, degrees: Sequence[int]) -> FaceStats:
    boundary = [degrees[v] for v in face.vertices]
    bad = (face.degree == BAD_FACE_LENGTH
           and all(d == BAD_VERTEX_DEGREE for d in boundary))
    return FaceStats(face.degree,
                     n4=sum(1 for d in boundary if d == 4),
                     n5=sum(1 for d in boundary if d == 5),
                     n6_plus=sum(1 for d in boundary if d >= 6),
                     bad=bad)


def face_statistics(pg: plane.PlaneGraph,
                    faces: Optional[Sequence[plane.Face]] = None) -> Statistics:
    faces = faces if faces is not None else plane.trace_faces(pg)
    degrees = pg.degrees
    face_stats = [face_counts(face, degrees) for face in faces]
    owner = plane.dart_faces(faces)

    vertex_stats: List[VertexStats] = []
    for v in range(pg.vertex_count):
        around = [face_stats[owner[(v, u)]] for u in pg.rotation[v]]
        lengths = Counter(fs.degree for fs in around)
        vertex_stats.append(VertexStats(
            degree=degrees[v],
            f3=lengths[3],
            f4=lengths[4],
            f5=lengths[5],
            f5_bad=sum(1 for fs in around if fs.bad),
            f6_plus=sum(n for length, n in lengths.items() if length >= 6),
            neighbour_degrees=dict(Counter(degrees[u] for u in pg.rotation[v])),
        ))

    for i, face in enumerate(faces):
        t_set = sorted({v for v in face.vertices
                        if degrees[v] == 4 and vertex_stats[v].f3 <= 1})
        face_stats[i] = replace(face_stats[i], t_set=tuple(t_set))
    return Statistics(tuple(face_stats), tuple(vertex_stats))


def gamma(n4: int, n5_plus: int) -> Fraction:
    """
    (2 - n4/3) / n5_plus, the share a 5+-vertex sends to a 4- or 5-face.

    Raises:
        ValidationError: if n5_plus is 0
    """
    if n5_plus == 0:
        raise validation.ValidationError('gamma is undefined for a face without 5+-vertices')
    return (2 - Fraction(n4, 3)) / n5_plus


def face_gamma(fs: FaceStats) -> Fraction:
    return gamma(fs.n4, fs.n5_plus)


def zeta(pg: plane.PlaneGraph, faces: Sequence[plane.Face], v: int) -> int:
    """
    Number of 3-faces (x, y, v) at v with d(x) = d(y) = 4 whose edge xy lies
    on a bad 5-face. Counted over the faces passed in.
    """
    validation.validate_vertex(v, pg.vertex_count)
    degrees = pg.degrees
    bad_edges = set()
    for face in faces:
        if face_counts(face, degrees).bad:
            bad_edges |= face.edges
    count = 0
    for face in faces:
        # a 3-face of a simple graph is a triangle
        if face.degree != 3 or v not in face.vertices:
            continue
        x, y = (u for u in face.vertices if u != v)
        if degrees[x] == 4 and degrees[y] == 4 and (min(x, y), max(x, y)) in bad_edges:
            count += 1
    return count


def triangle_bound_violations(stats: Statistics) -> List[int]:
    """Vertices with more than ceil(d(v)/2) incident 3-faces."""
    return [v for v, vs in enumerate(stats.vertices)
            if vs.f3 > -(-vs.degree // 2)]

"""
Plane graphs given by a rotation system, and face tracing.

The rotation of v lists its neighbours in clockwise order. A dart (u, v) is
the edge uv traversed from u to v. Tracing follows a dart (u, v) with the
dart (v, w), w the clockwise successor of u in the rotation of v; every
dart lies on exactly one face.

Text format:

    vertices <n>
    rotation <v>: <u1> <u2> ... <uk>

A vertex without a rotation line is isolated.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import graphs.core as gc
import graphs.formats as gf
import utils
import validation

logger = logging.getLogger(__name__)

VERTICES = 'vertices'
ROTATION = 'rotation'

Dart = Tuple[int, int]


class RotationError(validation.ValidationError):
    """The rotation system does not describe a simple plane graph."""
    pass


@dataclass(frozen=True)
class PlaneGraph:
    vertex_count: int
    rotation: Tuple[Tuple[int, ...], ...]

    @cached_property
    def underlying(self) -> gc.Graph:
        return gc.build_graph(self.vertex_count,
                              [(v, u) for v in range(self.vertex_count)
                               for u in self.rotation[v] if v < u])

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(r) for r in self.rotation)

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def darts(self) -> List[Dart]:
        return [(v, u) for v in range(self.vertex_count) for u in self.rotation[v]]

    def successor(self, v: int, u: int) -> int:
        """Clockwise successor of u in the rotation of v."""
        ring = self.rotation[v]
        return ring[(ring.index(u) + 1) % len(ring)]


def build_plane_graph(vertex_count: int,
                      rotation: Union[Sequence[Sequence[int]], Dict[int, Sequence[int]]]
                      ) -> PlaneGraph:
    """
    Build a plane graph from per-vertex clockwise neighbour orders.

    rotation may be a sequence indexed by vertex or a mapping (missing
    vertices are isolated), which accepts the output of
    networkx's PlanarEmbedding.get_data() directly.

    Raises:
        RotationError: on loops, repeated or one-sided neighbours
    """
    validation.validate_positive_integer(vertex_count, 'vertex_count')
    if isinstance(rotation, dict):
        for v in rotation:
            validation.validate_vertex(v, vertex_count)
        rings = [tuple(rotation.get(v, ())) for v in range(vertex_count)]
    else:
        if len(rotation) != vertex_count:
            raise RotationError(
                f'rotation covers {len(rotation)} vertices, expected {vertex_count}')
        rings = [tuple(r) for r in rotation]
    for v, ring in enumerate(rings):
        for u in ring:
            validation.validate_vertex(u, vertex_count, 'neighbour')
            if u == v:
                raise RotationError(f'loop at vertex {v} is not allowed')
        if len(set(ring)) != len(ring):
            raise RotationError(f'vertex {v} lists a neighbour twice')
    for v, ring in enumerate(rings):
        for u in ring:
            if v not in rings[u]:
                raise RotationError(
                    f'asymmetric rotation: {u} in rotation of {v} but not {v} in rotation of {u}')
    return PlaneGraph(vertex_count, tuple(rings))


@dataclass(frozen=True)
class Face:
    darts: Tuple[Dart, ...]

    @property
    def degree(self) -> int:
        return len(self.darts)

    @property
    def vertices(self) -> Tuple[int, ...]:
        """Boundary walk as vertices, with repeats where the walk revisits."""
        return tuple(u for u, _ in self.darts)

    @cached_property
    def edges(self) -> frozenset:
        return frozenset((min(u, v), max(u, v)) for u, v in self.darts)


def trace_faces(pg: PlaneGraph) -> List[Face]:
    """
    Every face of pg, found by next-dart tracing.

    Faces are listed in the order their first dart appears when vertices
    are scanned by index and darts by rotation. An edgeless graph has one
    face with an empty boundary.
    """
    if pg.edge_count == 0:
        return [Face(())]
    seen = set()
    faces = []
    for start in pg.darts():
        if start in seen:
            continue
        walk = []
        dart = start
        while dart not in seen:
            seen.add(dart)
            walk.append(dart)
            u, v = dart
            dart = (v, pg.successor(v, u))
        faces.append(Face(tuple(walk)))
    logger.debug('traced %d faces over %d darts', len(faces), len(seen))
    return faces


def dart_faces(faces: Sequence[Face]) -> Dict[Dart, int]:
    """dart -> index of the face it bounds"""
    return {dart: i for i, face in enumerate(faces) for dart in face.darts}


def euler_characteristic(pg: PlaneGraph, faces: Optional[Sequence[Face]] = None) -> int:
    faces = faces if faces is not None else trace_faces(pg)
    return pg.vertex_count - pg.edge_count + len(faces)


def parse_plane_graph(text: str) -> PlaneGraph:
    """
    Parse the rotation text format.

    Raises:
        ValidationError: with the offending line number
        RotationError: when the rotations are inconsistent
    """
    vertex_count = None
    rings: Dict[int, Tuple[int, ...]] = {}
    for line_no, tokens in utils.tokenized_lines(text):
        keyword = tokens[0]
        if keyword == VERTICES:
            gf.expect_arity(tokens, 2, line_no)
            if vertex_count is not None:
                raise validation.ValidationError(f'line {line_no}: vertices declared twice')
            vertex_count = gf.parse_int(tokens[1], 'vertex count', line_no)
            if vertex_count < 1:
                raise validation.ValidationError(
                    f'line {line_no}: vertex count must be at least 1')
        elif keyword == ROTATION:
            if vertex_count is None:
                raise validation.ValidationError(
                    f'line {line_no}: rotation before vertices declaration')
            if len(tokens) < 2 or not tokens[1].endswith(':'):
                raise validation.ValidationError(
                    f'line {line_no}: expected "rotation <v>: <u1> ... <uk>"')
            v = gf.parse_int(tokens[1][:-1], 'vertex', line_no)
            ring = tuple(gf.parse_int(t, 'neighbour', line_no) for t in tokens[2:])
            try:
                validation.validate_vertex(v, vertex_count)
                for u in ring:
                    validation.validate_vertex(u, vertex_count, 'neighbour')
            except validation.ValidationError as err:
                raise validation.ValidationError(f'line {line_no}: {err}') from err
            if v in rings:
                raise validation.ValidationError(
                    f'line {line_no}: rotation of vertex {v} given twice')
            rings[v] = ring
        else:
            raise validation.ValidationError(
                f'line {line_no}: unknown keyword {keyword!r}')
    if vertex_count is None:
        raise validation.ValidationError('missing "vertices <n>" declaration')
    return build_plane_graph(vertex_count, rings)


def serialize_plane_graph(pg: PlaneGraph) -> str:
    lines = [f'{VERTICES} {pg.vertex_count}']
    for v, ring in enumerate(pg.rotation):
        lines.append(' '.join([ROTATION, f'{v}:'] + [str(u) for u in ring]))
    return '\n'.join(lines) + '\n'


def read_plane_graph(path: Union[str, Path]) -> PlaneGraph:
    return parse_plane_graph(Path(path).read_text())

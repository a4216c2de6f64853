"""
Text format for plain graphs.

    vertices <n>
    edge <u> <v>
    ...

Comments start with '#'. Tokens are whitespace separated.
"""
from pathlib import Path
from typing import Optional, Union

import graphs.core as gc
import utils
import validation

VERTICES = 'vertices'
EDGE = 'edge'


def parse_int(token: str, field_name: str, line_no: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise validation.ValidationError(
            f'line {line_no}: {field_name} must be an integer, got {token!r}')


def expect_arity(tokens: list, arity: int, line_no: int) -> None:
    if len(tokens) != arity:
        raise validation.ValidationError(
            f'line {line_no}: {tokens[0]!r} takes {arity - 1} argument(s), '
            f'got {len(tokens) - 1}')


def parse_edge(tokens: list, vertex_count: Optional[int], line_no: int) -> gc.Edge:
    """Parse an ``edge <u> <v>`` line against an already declared vertex count."""
    expect_arity(tokens, 3, line_no)
    if vertex_count is None:
        raise validation.ValidationError(
            f'line {line_no}: edge before vertices declaration')
    u = parse_int(tokens[1], 'edge endpoint', line_no)
    v = parse_int(tokens[2], 'edge endpoint', line_no)
    try:
        validation.validate_vertex(u, vertex_count, 'edge endpoint')
        validation.validate_vertex(v, vertex_count, 'edge endpoint')
        if u == v:
            raise validation.ValidationError(f'loop at vertex {u} is not allowed')
    except validation.ValidationError as err:
        raise validation.ValidationError(f'line {line_no}: {err}') from err
    return u, v


def parse_graph(text: str) -> gc.Graph:
    """
    Parse the graph text format.

    Raises:
        ValidationError: with the offending line number
    """
    vertex_count = None
    edges = []
    for line_no, tokens in utils.tokenized_lines(text):
        keyword = tokens[0]
        if keyword == VERTICES:
            expect_arity(tokens, 2, line_no)
            if vertex_count is not None:
                raise validation.ValidationError(
                    f'line {line_no}: vertices declared twice')
            vertex_count = parse_int(tokens[1], 'vertex count', line_no)
            if vertex_count < 0:
                raise validation.ValidationError(
                    f'line {line_no}: vertex count must be nonnegative')
        elif keyword == EDGE:
            edges.append(parse_edge(tokens, vertex_count, line_no))
        else:
            raise validation.ValidationError(
                f'line {line_no}: unknown keyword {keyword!r}')
    if vertex_count is None:
        raise validation.ValidationError('missing "vertices <n>" declaration')
    return gc.build_graph(vertex_count, edges)


def serialize_graph(g: gc.Graph) -> str:
    lines = [f'{VERTICES} {g.vertex_count}']
    lines += [f'{EDGE} {u} {v}' for u, v in g.sorted_edges]
    return '\n'.join(lines) + '\n'


def read_graph(path: Union[str, Path]) -> gc.Graph:
    return parse_graph(Path(path).read_text())

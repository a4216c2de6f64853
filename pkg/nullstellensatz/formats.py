"""
Configuration text format.

    name <label>
    k <int>                      (optional, default 4)
    vertices <n>
    vertex <i> degree <d>        (one per vertex)
    edge <u> <v>                 (order and direction are kept)
    caps <t0> ... <tn-1>         (optional, overrides derivation)
"""
from pathlib import Path
from typing import Union

import nullstellensatz.configuration as cfg
import utils
import validation
from graphs.formats import EDGE, VERTICES, expect_arity, parse_edge, parse_int

NAME = 'name'
K = 'k'
VERTEX = 'vertex'
DEGREE = 'degree'
CAPS = 'caps'


def parse_configuration(text: str, default_name: str = cfg.DEFAULT_NAME) -> cfg.Configuration:
    """
    Raises:
        ValidationError: with the offending line number where one applies
    """
    name = default_name
    k = cfg.DEFAULT_K
    vertex_count = None
    degrees = {}
    edges = []
    caps = None
    for line_no, tokens in utils.tokenized_lines(text):
        keyword = tokens[0]
        if keyword == NAME:
            if len(tokens) < 2:
                raise validation.ValidationError(f'line {line_no}: name needs a label')
            name = ' '.join(tokens[1:])
        elif keyword == K:
            expect_arity(tokens, 2, line_no)
            k = parse_int(tokens[1], 'k', line_no)
        elif keyword == VERTICES:
            expect_arity(tokens, 2, line_no)
            if vertex_count is not None:
                raise validation.ValidationError(
                    f'line {line_no}: vertices declared twice')
            vertex_count = parse_int(tokens[1], 'vertex count', line_no)
        elif keyword == VERTEX:
            if len(tokens) != 4 or tokens[2] != DEGREE:
                raise validation.ValidationError(
                    f'line {line_no}: expected "vertex <i> degree <d>"')
            if vertex_count is None:
                raise validation.ValidationError(
                    f'line {line_no}: vertex before vertices declaration')
            v = parse_int(tokens[1], 'vertex', line_no)
            try:
                validation.validate_vertex(v, vertex_count)
            except validation.ValidationError as err:
                raise validation.ValidationError(f'line {line_no}: {err}') from err
            if v in degrees:
                raise validation.ValidationError(f'line {line_no}: vertex {v} declared twice')
            degrees[v] = parse_int(tokens[3], 'degree', line_no)
        elif keyword == EDGE:
            edges.append(parse_edge(tokens, vertex_count, line_no))
        elif keyword == CAPS:
            caps = [parse_int(t, 'cap', line_no) for t in tokens[1:]]
        else:
            raise validation.ValidationError(f'line {line_no}: unknown keyword {keyword!r}')
    if vertex_count is None:
        raise validation.ValidationError('missing "vertices <n>" declaration')
    full_degree = None
    if degrees:
        missing = sorted(set(range(vertex_count)) - set(degrees))
        if missing:
            raise validation.ValidationError(f'missing degree for vertices {missing}')
        full_degree = [degrees[v] for v in range(vertex_count)]
    return cfg.build_configuration(name, vertex_count, edges, full_degree=full_degree,
                                   k=k, explicit_caps=caps)


def serialize_configuration(c: cfg.Configuration) -> str:
    lines = [f'{NAME} {c.name}', f'{K} {c.k}', f'{VERTICES} {c.internal.vertex_count}']
    lines += [f'{VERTEX} {v} {DEGREE} {d}' for v, d in enumerate(c.full_degree)]
    lines += [f'{EDGE} {u} {v}' for u, v in cfg.listed_orientation(c)]
    if c.explicit_caps is not None:
        lines.append(' '.join([CAPS] + [str(t) for t in c.explicit_caps]))
    return '\n'.join(lines) + '\n'


def read_configuration(path: Union[str, Path]) -> cfg.Configuration:
    path = Path(path)
    return parse_configuration(path.read_text(), default_name=path.stem)

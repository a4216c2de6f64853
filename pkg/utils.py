# Small utility helpers used across the project.

from fractions import Fraction
from typing import Iterable, Iterator, List, Tuple

COMMENT = '#'


def strip_comment(line: str) -> str:
    """Return ``line`` without its ``#`` comment and surrounding whitespace.

    Examples:
        >>> strip_comment('edge 0 1  # spoke')
        'edge 0 1'
        >>> strip_comment('# only a comment')
        ''
    """
    return line.split(COMMENT, 1)[0].strip()


def tokenized_lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    """Yield ``(line_number, tokens)`` for every non-blank, non-comment line.

    Line numbers are 1-based so parser diagnostics can point at the file.
    """
    for line_no, raw in enumerate(text.splitlines(), start=1):
        body = strip_comment(raw)
        if body:
            yield line_no, body.split()


def format_rational(value: Fraction) -> str:
    """Serialize an exact rational as a ``p/q`` string.

    Integers keep an explicit denominator so every value has the same shape.

    Examples:
        >>> format_rational(Fraction(-1, 3))
        '-1/3'
        >>> format_rational(Fraction(2))
        '2/1'
    """
    value = Fraction(value)
    return f'{value.numerator}/{value.denominator}'


def format_vector(values: Iterable[int]) -> str:
    """Render an exponent or size vector without spaces: ``[1,2,1]``."""
    return '[' + ','.join(str(v) for v in values) + ']'

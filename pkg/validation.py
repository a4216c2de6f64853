"""
Simple validation utilities for checking engine inputs.
"""
from typing import Any, Iterable, List, Optional


class ValidationError(ValueError):
    """Custom exception for validation errors."""
    pass


def validate_integer(value: Any, field_name: str,
                     min_value: Optional[int] = None,
                     max_value: Optional[int] = None) -> None:
    """
    Validate integer value and range.

    Args:
        value: Value to validate
        field_name: Name of the field
        min_value: Minimum allowed value (optional)
        max_value: Maximum allowed value (optional)

    Raises:
        ValidationError: If value is not valid integer or out of range
    """
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValidationError(f"{field_name} must be an integer")

    if min_value is not None and value < min_value:
        raise ValidationError(
            f"{field_name} must be at least {min_value}"
        )
    if max_value is not None and value > max_value:
        raise ValidationError(
            f"{field_name} must be at most {max_value}"
        )


def validate_positive_integer(value: Any, field_name: str) -> None:
    """
    Validate positive integer.

    Raises:
        ValidationError: If value is not a positive integer
    """
    validate_integer(value, field_name, min_value=1)


def validate_nonnegative_integer(value: Any, field_name: str) -> None:
    """
    Validate nonnegative integer (list caps, counts, distances).

    Raises:
        ValidationError: If value is not an integer >= 0
    """
    validate_integer(value, field_name, min_value=0)


def validate_vertex(value: Any, vertex_count: int,
                    field_name: str = 'vertex') -> None:
    """
    Validate a dense vertex index 0..vertex_count-1.

    Args:
        value: Candidate index
        vertex_count: Number of vertices of the graph
        field_name: Name used in the error message

    Raises:
        ValidationError: If value is not an index of the graph
    """
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValidationError(f"{field_name} must be an integer")
    if value < 0 or value >= vertex_count:
        raise ValidationError(
            f"{field_name} {value} out of range 0..{vertex_count - 1}"
        )


def validate_vector(values: Any, field_name: str, length: int,
                    min_value: Optional[int] = None) -> List[int]:
    """
    Validate a per-vertex integer vector and return it as a list.

    Args:
        values: Sequence of integers, one per vertex
        field_name: Name of the vector
        length: Required number of entries
        min_value: Lower bound applied to every entry (optional)

    Raises:
        ValidationError: If the length or any entry is invalid
    """
    if isinstance(values, (str, bytes)) or not isinstance(values, Iterable):
        raise ValidationError(f"{field_name} must be a sequence of integers")
    vec = list(values)
    if len(vec) != length:
        raise ValidationError(
            f"{field_name} must have exactly {length} entries, got {len(vec)}"
        )
    for i, value in enumerate(vec):
        validate_integer(value, f"{field_name}[{i}]", min_value=min_value)
    return vec


def validate_enum(value: Any, field_name: str,
                  allowed_values: List[Any]) -> None:
    """
    Validate that value is in allowed set.

    Raises:
        ValidationError: If value not in allowed set
    """
    if value not in allowed_values:
        raise ValidationError(
            f"{field_name} must be one of: {', '.join(map(str, allowed_values))}"
        )


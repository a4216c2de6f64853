"""
Tests for the shared input validators.
"""
import pytest
from validation import (
    ValidationError,
    validate_enum,
    validate_integer,
    validate_nonnegative_integer,
    validate_positive_integer,
    validate_vector,
    validate_vertex,
)


class TestEnum:
    def test_valid_mode(self):
        validate_enum('sampled', 'mode', ['exhaustive', 'sampled'])
        # Should not raise

    def test_invalid_mode(self):
        with pytest.raises(ValidationError) as exc:
            validate_enum('random', 'mode', ['exhaustive', 'sampled'])
        assert 'mode must be one of: exhaustive, sampled' in str(exc.value)

    def test_integer_choices(self):
        with pytest.raises(ValidationError, match='stage must be one of: 0, 1, 2'):
            validate_enum(3, 'stage', [0, 1, 2])


class TestInteger:
    def test_valid_integer(self):
        validate_integer(4, 'k')

    def test_bounds(self):
        validate_integer(2, 'stage', min_value=0, max_value=2)

    def test_below_min_value(self):
        with pytest.raises(ValidationError) as exc:
            validate_integer(-1, 'cap', min_value=0)
        assert 'cap must be at least 0' in str(exc.value)

    def test_above_max_value(self):
        with pytest.raises(ValidationError) as exc:
            validate_integer(3, 'stage', max_value=2)
        assert 'must be at most 2' in str(exc.value)

    @pytest.mark.parametrize('value', ['4', 4.0, True, None])
    def test_not_integer(self, value):
        with pytest.raises(ValidationError, match='k must be an integer'):
            validate_integer(value, 'k')


class TestPositiveInteger:
    def test_valid_positive(self):
        validate_positive_integer(100000, 'trials')

    def test_zero(self):
        with pytest.raises(ValidationError) as exc:
            validate_positive_integer(0, 'trials')
        assert 'trials must be at least 1' in str(exc.value)


class TestNonnegativeInteger:
    def test_zero_allowed(self):
        validate_nonnegative_integer(0, 'distance')

    def test_negative(self):
        with pytest.raises(ValidationError, match='distance must be at least 0'):
            validate_nonnegative_integer(-5, 'distance')


class TestVertex:
    def test_in_range(self):
        validate_vertex(3, 4)

    def test_out_of_range(self):
        with pytest.raises(ValidationError, match='vertex 4 out of range 0..3'):
            validate_vertex(4, 4)

    def test_negative_index(self):
        with pytest.raises(ValidationError, match='u -1 out of range'):
            validate_vertex(-1, 4, 'u')

    def test_not_integer(self):
        with pytest.raises(ValidationError, match='must be an integer'):
            validate_vertex('0', 4)


class TestVector:
    def test_returns_list(self):
        assert validate_vector((2, 3, 2), 'sizes', 3, min_value=1) == [2, 3, 2]

    def test_wrong_length(self):
        with pytest.raises(ValidationError) as exc:
            validate_vector([1, 1], 'caps', 3)
        assert 'caps must have exactly 3 entries, got 2' in str(exc.value)

    def test_entry_named_by_index(self):
        with pytest.raises(ValidationError, match=r'sizes\[1\] must be at least 1'):
            validate_vector([1, 0], 'sizes', 2, min_value=1)

    def test_string_rejected(self):
        with pytest.raises(ValidationError, match='must be a sequence of integers'):
            validate_vector('12', 'caps', 2)


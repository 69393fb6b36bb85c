"""
Unit Tests for Tamari Interval Diagrams

Tests:
- Tamari and dual Tamari diagram validation with witnesses
- Compatibility
- Synchronized and new diagrams
- Enumeration against the closed counting formula
- Text parsing
"""

import pytest

from app.core.errors import InvalidObjectError, ParseError, PreconditionError, SizeMismatchError
from app.domain.diagrams import (
    TamariIntervalDiagram,
    chapoton_count,
    compatible,
    enumerate_tid,
    is_new,
    is_synchronized,
    parse_tid_text,
    parse_word,
    validate_dual_tamari_diagram,
    validate_tamari_diagram,
)
from tests.factories import IntervalFactory, LargeExampleFactory

pytestmark = pytest.mark.unit


class TestTamariDiagram:
    """Tests for Tamari diagram validation"""

    def test_valid_words(self):
        """Test words of the right comb and of the eight node tree"""
        assert validate_tamari_diagram([2, 1, 0]).size == 3
        assert validate_tamari_diagram([1, 0, 0, 4, 0, 2, 1, 0]).size == 8

    def test_letter_out_of_range(self):
        """Test u_1 > n - 1"""
        with pytest.raises(InvalidObjectError) as exc_info:
            validate_tamari_diagram([3, 0, 0])
        assert exc_info.value.condition == "tamari-(i)"
        assert exc_info.value.witness == (1,)

    def test_nesting_violation(self):
        """Test u_2 > u_1 - 1"""
        with pytest.raises(InvalidObjectError) as exc_info:
            validate_tamari_diagram([1, 1, 0])
        assert exc_info.value.condition == "tamari-(ii)"
        assert exc_info.value.witness == (1, 1)

    def test_earliest_witness_across_conditions(self):
        """Test that a nesting failure at (1, 1) wins over a range failure at 3"""
        with pytest.raises(InvalidObjectError) as exc_info:
            validate_tamari_diagram([1, 1, 1])
        assert exc_info.value.condition == "tamari-(ii)"
        assert exc_info.value.witness == (1, 1)

    def test_non_integer_letter(self):
        """Test that letters must be integers"""
        with pytest.raises(ParseError):
            validate_tamari_diagram([1.5, 0])


class TestDualTamariDiagram:
    """Tests for dual Tamari diagram validation"""

    def test_valid_word(self):
        """Test the word of the left comb"""
        assert validate_dual_tamari_diagram([0, 1, 2]).size == 3

    def test_first_letter_must_be_zero(self):
        """Test v_1 > 0"""
        with pytest.raises(InvalidObjectError) as exc_info:
            validate_dual_tamari_diagram([1, 0, 0])
        assert exc_info.value.condition == "dual-(i)"

    def test_nesting_violation(self):
        """Test v_2 > v_3 - 1"""
        with pytest.raises(InvalidObjectError) as exc_info:
            validate_dual_tamari_diagram([0, 1, 1])
        assert exc_info.value.condition == "dual-(ii)"
        assert exc_info.value.witness == (3, 1)

    def test_earliest_witness_across_conditions(self):
        """Test that a nesting failure at (3, 1) wins over a range failure at 4"""
        with pytest.raises(InvalidObjectError) as exc_info:
            validate_dual_tamari_diagram([0, 1, 1, 4])
        assert exc_info.value.condition == "dual-(ii)"
        assert exc_info.value.witness == (3, 1)


class TestCompatibility:
    """Tests for the compatibility condition"""

    def test_compatible_pair(self):
        """Test the size five pair"""
        assert compatible(IntervalFactory.U, IntervalFactory.V)

    def test_incompatible_pair(self):
        """Test u_1 >= 1 together with v_2 >= 1"""
        assert not compatible((1, 0), (0, 1))
        with pytest.raises(InvalidObjectError) as exc_info:
            TamariIntervalDiagram.from_words((1, 0), (0, 1))
        assert exc_info.value.condition == "compatibility"
        assert exc_info.value.witness == (1, 2)

    def test_size_mismatch(self):
        """Test words of different lengths"""
        with pytest.raises(SizeMismatchError):
            compatible((0,), (0, 0))
        with pytest.raises(SizeMismatchError):
            TamariIntervalDiagram.from_words((0,), (0, 0))

    def test_large_pair(self):
        """Test the size ten pair"""
        d = TamariIntervalDiagram.from_words(LargeExampleFactory.U, LargeExampleFactory.V)
        assert d.size == 10


class TestPredicates:
    """Tests for synchronized and new diagrams"""

    def test_not_synchronized(self):
        """Test u_2 = v_3 = 0 in the size five pair"""
        assert not is_synchronized(IntervalFactory.diagram())

    def test_synchronized(self):
        """Test a pair where every gap is covered"""
        assert is_synchronized(TamariIntervalDiagram.from_words((2, 1, 0), (0, 0, 0)))

    def test_new(self):
        """Test the all-zero diagram of size 3"""
        assert is_new(TamariIntervalDiagram.from_words((0, 0, 0), (0, 0, 0)))

    def test_not_new(self):
        """Test that u_1 = n - 1 breaks newness"""
        assert not is_new(TamariIntervalDiagram.from_words((2, 1, 0), (0, 0, 0)))

    def test_newness_needs_size_three(self):
        """Test that newness is undefined below size 3"""
        with pytest.raises(PreconditionError):
            is_new(TamariIntervalDiagram.from_words((0, 0), (0, 0)))


class TestEnumeration:
    """Tests for diagram enumeration"""

    @pytest.mark.parametrize("n,expected", [(0, 1), (1, 1), (2, 3), (3, 13), (4, 68), (5, 399), (6, 2530)])
    def test_counting_formula(self, n, expected):
        """Test the closed formula"""
        assert chapoton_count(n) == expected

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_enumeration_matches_formula(self, n):
        """Test that every compatible pair is produced once"""
        diagrams = enumerate_tid(n)
        assert len(diagrams) == chapoton_count(n)
        assert len(set(diagrams)) == len(diagrams)
        assert list(diagrams) == sorted(diagrams)


class TestParsing:
    """Tests for the text form"""

    def test_parse_word(self):
        """Test a comma-joined word"""
        assert parse_word("9,0,2") == (9, 0, 2)
        assert parse_word("") == ()

    def test_parse_word_rejects_letters(self):
        """Test that non-integers are rejected"""
        with pytest.raises(ParseError):
            parse_word("1,a")

    def test_parse_pair(self):
        """Test '<u> <v>' and its rendering"""
        d = parse_tid_text("2,0,0,1,0 0,0,0,2,0")
        assert d == IntervalFactory.diagram()
        assert d.to_text() == "2,0,0,1,0 0,0,0,2,0"

    def test_parse_pair_needs_two_words(self):
        """Test input with a single word"""
        with pytest.raises(ParseError):
            parse_tid_text("2,0,0,1,0")

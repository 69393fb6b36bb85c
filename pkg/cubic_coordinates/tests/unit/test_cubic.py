"""
Unit Tests for Cubic Coordinates

Tests:
- Validation and parsing
- phi and psi on worked examples
- Enumeration of CC(n)
- Minimal increases, covers and the cover graph
- Canonical chains
- Meet and join against the brute-force bounds
"""

import pytest

from app.core.errors import (
    InvalidObjectError,
    NotComparableError,
    ParseError,
    PreconditionError,
    SizeMismatchError,
)
from app.domain.cubic import (
    CubicCoordinate,
    cc_leq,
    chain_between,
    cover_graph,
    covers,
    delta_sets,
    enumerate_cc,
    is_cubic_coordinate,
    is_synchronized_cc,
    join,
    join_by_bounds,
    meet,
    meet_by_bounds,
    min_increase,
    parse_cubic_coordinate,
    phi,
    phi_inv,
    psi,
    psi_inv,
    zero_component,
)
from app.domain.diagrams import TamariIntervalDiagram
from tests.factories import CC3, WORKED_CHAIN, IntervalFactory, LargeExampleFactory, cc

pytestmark = pytest.mark.unit


class TestCubicCoordinate:
    """Tests for construction and validation"""

    def test_valid(self):
        """Test a valid coordinate and its accessors"""
        c = IntervalFactory.coordinate()
        assert c.size == 5
        assert len(c) == 4
        assert c[1] == 2
        assert c[3] == -2
        assert str(c) == "(2,0,-2,1)"

    def test_size_one(self):
        """Test the empty coordinate"""
        c = CubicCoordinate(())
        assert c.size == 1
        assert str(c) == "()"

    def test_invalid(self):
        """Test (1,1), whose Tamari word is 1,1,0"""
        assert not is_cubic_coordinate((1, 1))
        with pytest.raises(InvalidObjectError) as exc_info:
            cc(1, 1)
        assert exc_info.value.condition == "tamari-(ii)"

    def test_non_integer_component(self):
        """Test that booleans are not components"""
        with pytest.raises(ParseError):
            CubicCoordinate((True,))


class TestParsing:
    """Tests for the text form"""

    @pytest.mark.parametrize(
        "text,expected",
        [
            ("(2,0,-2,1)", (2, 0, -2, 1)),
            ("2,0,-2,1", (2, 0, -2, 1)),
            (" ( -1 , 1 ) ", (-1, 1)),
            ("()", ()),
        ],
    )
    def test_parse(self, text, expected):
        """Test accepted spellings"""
        assert parse_cubic_coordinate(text).components == expected

    def test_parse_garbage(self):
        """Test that non-integers are rejected"""
        with pytest.raises(ParseError):
            parse_cubic_coordinate("(a,1)")


class TestBijections:
    """Tests for phi and psi"""

    def test_phi_size_five(self):
        """Test c_i = u_i - v_{i+1} on the size five example"""
        assert phi_inv(IntervalFactory.diagram()) == IntervalFactory.coordinate()
        assert phi(IntervalFactory.coordinate()) == IntervalFactory.diagram()

    def test_phi_size_ten(self):
        """Test the size ten example"""
        d = TamariIntervalDiagram.from_words(LargeExampleFactory.U, LargeExampleFactory.V)
        assert phi_inv(d).components == LargeExampleFactory.COORDINATE
        assert phi(CubicCoordinate(LargeExampleFactory.COORDINATE)) == d

    def test_psi(self):
        """Test psi against the bounding trees"""
        assert psi(IntervalFactory.interval()) == IntervalFactory.coordinate()
        assert psi_inv(IntervalFactory.coordinate()) == IntervalFactory.interval()


class TestEnumeration:
    """Tests for CC(n)"""

    def test_size_three(self, cc3):
        """Test the 13 coordinates of size 3"""
        assert [c.components for c in cc3] == CC3

    @pytest.mark.parametrize("n,expected", [(1, 1), (2, 3), (3, 13), (4, 68), (5, 399), (6, 2530)])
    def test_counts(self, n, expected):
        """Test the number of coordinates"""
        assert len(enumerate_cc(n)) == expected

    def test_size_must_be_positive(self):
        """Test n = 0"""
        with pytest.raises(PreconditionError):
            enumerate_cc(0)

    def test_synchronized(self, cc3):
        """Test the six synchronized coordinates of size 3"""
        assert sum(1 for c in cc3 if is_synchronized_cc(c)) == 6


class TestCovers:
    """Tests for minimal increases and covers"""

    @pytest.mark.parametrize(
        "c,i,expected",
        [
            ((-1, -2), 1, (0, -2)),
            ((-1, -2), 2, (-1, 0)),
            ((0, 0), 1, (1, 0)),
            ((0, 0), 2, (0, 1)),
            ((0, 1), 1, (2, 1)),
            ((1, 0), 2, None),
            ((2, 1), 1, None),
        ],
    )
    def test_min_increase(self, c, i, expected):
        """Test the smallest valid increase of one component"""
        result = min_increase(cc(*c), i)
        if expected is None:
            assert result is None
        else:
            assert result.components == expected

    def test_negative_component_stops_at_zero(self, cc4):
        """Test that a negative component never jumps above 0"""
        for c in cc4:
            for i in range(1, 4):
                raised = min_increase(c, i)
                if raised is not None and c[i] < 0:
                    assert raised[i] <= 0

    def test_index_out_of_range(self):
        """Test index 0"""
        with pytest.raises(PreconditionError):
            min_increase(cc(0, 0), 0)

    def test_covers(self):
        """Test covers in index order"""
        assert covers(cc(0, 0)) == [cc(1, 0), cc(0, 1)]
        assert covers(cc(2, 1)) == []

    def test_cover_graph(self):
        """Test the size 3 cover graph"""
        graph = cover_graph(3)
        assert graph.number_of_nodes() == 13
        assert graph.number_of_edges() == 18
        assert graph.edges[cc(0, 0), cc(0, 1)]["index"] == 2

    def test_cover_graph_matches_interval_covers(self):
        """Test that the cover graph has one edge per interval cover"""
        from app.domain.interval_posets import interval_covers

        for n in (2, 3, 4):
            expected = sum(len(interval_covers(psi_inv(c))) for c in enumerate_cc(n))
            assert cover_graph(n).number_of_edges() == expected

    def test_zero_component(self):
        """Test zeroing a component"""
        assert zero_component(cc(2, 1), 1) == cc(0, 1)
        with pytest.raises(PreconditionError):
            zero_component(cc(0, 1), 1)


class TestOrder:
    """Tests for the componentwise order and chains"""

    def test_leq(self):
        """Test comparable and incomparable pairs"""
        assert cc_leq(cc(-1, -2), cc(2, 1))
        assert not cc_leq(cc(2, -1), cc(0, 0))

    def test_size_mismatch(self):
        """Test coordinates of different sizes"""
        with pytest.raises(SizeMismatchError):
            cc_leq(cc(0), cc(0, 0))

    def test_delta_sets(self):
        """Test the indices moving through negative and non-negative values"""
        sets = delta_sets(cc(0, -1), cc(2, 0))
        assert sets.d_minus == frozenset({2})
        assert sets.d_plus == frozenset({1})

    def test_chain_bottom_to_top(self):
        """Test the canonical chain across all of CC(3)"""
        chain = chain_between(cc(-1, -2), cc(2, 1))
        assert [c.components for c in chain] == WORKED_CHAIN

    def test_chain_is_saturated(self, cc4):
        """Test that consecutive chain elements are covers"""
        bottom, top = cc4[0], cc4[-1]
        chain = chain_between(bottom, top)
        for a, b in zip(chain, chain[1:]):
            assert b in covers(a)

    def test_chain_of_equal_elements(self):
        """Test the chain from an element to itself"""
        assert chain_between(cc(0, 0), cc(0, 0)) == [cc(0, 0)]

    def test_chain_needs_comparable_elements(self):
        """Test incomparable endpoints"""
        with pytest.raises(NotComparableError):
            chain_between(cc(2, -1), cc(0, 0))


class TestLatticeOperations:
    """Tests for meet and join"""

    def test_bounds_of_incomparable_pair(self):
        """Test meet and join of (-1,1) and (1,-2)"""
        assert join(cc(-1, 1), cc(1, -2)) == cc(2, 1)
        assert meet(cc(-1, 1), cc(1, -2)) == cc(-1, -2)

    def test_against_brute_force(self, cc3):
        """Test the tree-based operations against the bounds scan"""
        for a in cc3:
            for b in cc3:
                assert join(a, b) == join_by_bounds(a, b)
                assert meet(a, b) == meet_by_bounds(a, b)

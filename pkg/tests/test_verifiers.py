"""
Tests for the definitional bitrade checks.
"""

import itertools

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from latin_bitrades.catalogue.worked_examples import build_example
from latin_bitrades.core.partial_latin_square import Bitrade, PartialLatinSquare
from latin_bitrades.core.search import SearchOutcome, find_mate
from latin_bitrades.core.verifiers import (
    apply_trade,
    diagnose_bitrade,
    difference_bitrade,
    embedded_in,
    hamming_distance,
    homogeneity,
    is_latin_square,
    is_orthogonal_direct,
    verify_bitrade,
    yields_latin_square,
)
from latin_bitrades.utils.errors import PreconditionError

# Order 5 square with an intercalate, so not isotopic to the cyclic table
ORDER_5_NON_CYCLIC = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]


def cyclic_square(n):
    return PartialLatinSquare.from_table([[(r + c) % n for c in range(n)] for r in range(n)])


def small_squares():
    """One square per isotopy class up to order 5."""
    yield cyclic_square(2)
    yield cyclic_square(3)
    yield cyclic_square(4)
    yield PartialLatinSquare.from_table([[r ^ c for c in range(4)] for r in range(4)])
    yield cyclic_square(5)
    yield PartialLatinSquare.from_table(ORDER_5_NON_CYCLIC)


def is_intercalate_shape(entries):
    return len(entries) == 4 and all(len({e[k] for e in entries}) == 2 for k in range(3))


@st.composite
def candidate_mates(draw):
    """A cyclic square L, a non-empty T inside it and a disjoint T' on the same cells."""
    n = draw(st.integers(min_value=2, max_value=5))
    square = cyclic_square(n)
    cells = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), min_size=1, max_size=8))
    t = [(r, c, (r + c) % n) for r, c in cells]
    mate = [(r, c, (s + draw(st.integers(1, n - 1))) % n) for r, c, s in t]
    try:
        b = Bitrade.from_entries(n, t, mate)
    except PreconditionError:
        assume(False)
    return square, b


class TestLatinSquare:
    """Test cases for is_latin_square."""

    def test_order_one_square_is_latin(self):
        assert is_latin_square(PartialLatinSquare([[0]]))

    def test_square_with_empty_cell_is_not_latin(self):
        assert not is_latin_square(PartialLatinSquare.from_entries(2, [(0, 0, 0), (0, 1, 1), (1, 0, 1)]))

    def test_xor_table_is_latin(self, klein_square):
        assert is_latin_square(klein_square)


class TestVerifyBitrade:
    """Test cases for verify_bitrade and diagnose_bitrade."""

    def test_intercalate_is_a_bitrade(self, intercalate):
        assert verify_bitrade(intercalate)

    def test_shared_entry_is_reported(self):
        """Test that condition (2) names a common entry."""
        # Arrange
        b = Bitrade.from_entries(2, [(0, 0, 0), (1, 1, 1)], [(0, 0, 0), (1, 1, 1)])

        # Act
        diagnostics = diagnose_bitrade(b)

        # Assert
        assert not diagnostics.valid
        assert diagnostics.shared_entry == (0, 0, 0)
        assert any(message.startswith("(2) failed") for message in diagnostics.failures())

    def test_corrupted_mate_fails_at_row(self, intercalate):
        """Test that changing one symbol of T' breaks condition (3*) in that row."""
        # Arrange
        mate = [(0, 0, 2), (0, 1, 0), (1, 0, 0), (1, 1, 1)]
        corrupted = Bitrade(intercalate.t, PartialLatinSquare.from_entries(3, mate))

        # Act
        diagnostics = diagnose_bitrade(corrupted)

        # Assert
        assert not diagnostics.valid
        assert diagnostics.row_failure == 0
        assert "(3*) failed at row 0" in diagnostics.failures()

    def test_empty_pair_is_not_a_bitrade(self):
        empty = PartialLatinSquare.empty(2)

        assert not verify_bitrade(Bitrade(empty, empty))

    def test_different_shapes_are_rejected(self):
        b = Bitrade.from_entries(2, [(0, 0, 0)], [(0, 1, 1)])

        assert diagnose_bitrade(b).same_shape is False


class TestSubstitution:
    """Test cases for apply_trade, embedding and differences."""

    def test_apply_trade_gives_latin_square(self, z2_square):
        # Arrange
        b = Bitrade.from_entries(
            2,
            [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)],
            [(0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1)],
        )

        # Act
        result = apply_trade(z2_square, b)

        # Assert
        assert is_latin_square(result)
        assert result == PartialLatinSquare.from_table([[1, 0], [0, 1]])
        assert yields_latin_square(z2_square, b)

    def test_apply_trade_requires_embedding(self, z2_square):
        b = Bitrade.from_entries(2, [(0, 0, 1)], [(0, 0, 0)])

        with pytest.raises(PreconditionError):
            apply_trade(z2_square, b)

    def test_embedded_in(self, klein_square):
        inside = PartialLatinSquare.from_entries(4, [(0, 0, 0), (1, 2, 3)])
        outside = PartialLatinSquare.from_entries(4, [(0, 0, 1)])

        assert embedded_in(inside, klein_square)
        assert not embedded_in(outside, klein_square)

    def test_difference_bitrade_of_distinct_squares(self, z2_square):
        # Arrange
        other = PartialLatinSquare.from_table([[1, 0], [0, 1]])

        # Act
        b = difference_bitrade(z2_square, other)

        # Assert
        assert hamming_distance(z2_square, other) == 4
        assert verify_bitrade(b)
        assert b.t == z2_square

    def test_difference_of_equal_squares_is_none(self, z2_square):
        assert difference_bitrade(z2_square, z2_square) is None


class TestHomogeneityAndOrthogonality:
    """Test cases for homogeneity and is_orthogonal_direct."""

    def test_intercalate_is_two_homogeneous(self, intercalate):
        assert homogeneity(intercalate.t) == 2

    def test_mixed_counts_have_no_k(self):
        p = PartialLatinSquare.from_entries(3, [(0, 0, 0), (0, 1, 1), (1, 0, 1)])

        assert homogeneity(p) is None

    def test_intercalate_is_not_orthogonal(self, intercalate):
        """Both cells holding 0 in T hold 1 in T'."""
        assert not is_orthogonal_direct(intercalate)

    def test_orthogonality_requires_bitrade(self):
        b = Bitrade.from_entries(2, [(0, 0, 0)], [(0, 0, 0)])

        with pytest.raises(PreconditionError):
            is_orthogonal_direct(b)


class TestTradeInvariants:
    """Test cases tying bitrades to substitutions in Latin squares."""

    def test_difference_recovers_an_applied_trade(self):
        """Test that swapping a constructed bitrade in and diffing gives it back."""
        # Arrange
        construction = build_example(3).construction
        square, bitrade = construction.square, construction.bitrade

        # Act
        swapped = apply_trade(square, bitrade)
        recovered = difference_bitrade(square, swapped)

        # Assert
        assert bitrade.size == 12
        assert is_latin_square(swapped)
        assert recovered.t == bitrade.t
        assert recovered.t_mate == bitrade.t_mate
        assert hamming_distance(square, swapped) == 12

    @settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
    @given(candidate_mates())
    def test_bitrade_exactly_when_substitution_is_latin(self, case):
        # Arrange
        square, b = case

        # Act & Assert
        assert verify_bitrade(b) == yields_latin_square(square, b)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=2, max_value=5), st.data())
    def test_difference_of_isotopes_is_a_bitrade(self, n, data):
        # Arrange
        square = cyclic_square(n)
        rows = data.draw(st.permutations(range(n)))
        other = PartialLatinSquare.from_table([[(rows[r] + c) % n for c in range(n)] for r in range(n)])

        # Act
        b = difference_bitrade(square, other)

        # Assert
        if b is None:
            assert other == square
        else:
            assert verify_bitrade(b)
            assert yields_latin_square(square, b)
            assert apply_trade(square, b) == other

    def test_small_trades_are_intercalates(self):
        """Test every sub-trade of at most four entries up to order 5."""
        for square in small_squares():
            entries = square.sorted_entries()
            for size in range(1, 5):
                for subset in itertools.combinations(entries, size):
                    # Act
                    t = PartialLatinSquare.from_entries(square.order, subset)
                    outcome, mate = find_mate(t)

                    # Assert
                    assert outcome is not SearchOutcome.INCONCLUSIVE
                    if is_intercalate_shape(subset):
                        assert outcome is SearchOutcome.YES
                        assert verify_bitrade(Bitrade(t, mate))
                    else:
                        assert outcome is SearchOutcome.NO, f"order {square.order}: mate for {subset}"

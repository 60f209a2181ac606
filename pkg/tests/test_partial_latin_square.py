"""
Tests for partial Latin squares and bitrades.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latin_bitrades.core.partial_latin_square import EMPTY, Bitrade, Entry, PartialLatinSquare
from latin_bitrades.utils.errors import PreconditionError


@st.composite
def partial_latin_squares(draw, max_order=6):
    """Random subsets of isotopes of the cyclic table."""
    n = draw(st.integers(min_value=1, max_value=max_order))
    rows = draw(st.permutations(range(n)))
    cols = draw(st.permutations(range(n)))
    syms = draw(st.permutations(range(n)))
    cells = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))))
    entries = [(rows[r], cols[c], syms[(r + c) % n]) for r, c in cells]
    return PartialLatinSquare.from_entries(n, entries)


class TestPartialLatinSquare:
    """Test cases for PartialLatinSquare."""

    def test_entries_and_size_follow_the_grid(self):
        """Test that the entry set lists exactly the filled cells."""
        # Arrange
        grid = [[0, EMPTY], [EMPTY, 0]]

        # Act
        p = PartialLatinSquare(grid)

        # Assert
        assert p.order == 2
        assert p.size == 2
        assert p.entries == {Entry(0, 0, 0), Entry(1, 1, 0)}
        assert p.get(0, 1) is None
        assert p.contains((1, 1, 0))

    def test_repeated_symbol_in_row_is_rejected(self):
        """Test that a row repeat raises a precondition error naming the row."""
        # Act & Assert
        with pytest.raises(PreconditionError) as excinfo:
            PartialLatinSquare([[0, 0], [1, EMPTY]])

        assert "row 0" in str(excinfo.value)

    def test_repeated_symbol_in_column_is_rejected(self):
        with pytest.raises(PreconditionError) as excinfo:
            PartialLatinSquare([[1, EMPTY], [1, 0]])

        assert "column 0" in str(excinfo.value)

    def test_out_of_range_symbol_is_rejected(self):
        with pytest.raises(PreconditionError):
            PartialLatinSquare([[0, 2], [1, 0]])

    def test_from_entries_rejects_conflicting_cell(self):
        """Test that one cell cannot hold two symbols."""
        with pytest.raises(PreconditionError) as excinfo:
            PartialLatinSquare.from_entries(3, [(0, 0, 1), (0, 0, 2)])

        assert "cell (0,0)" in str(excinfo.value)

    def test_grid_is_read_only(self):
        p = PartialLatinSquare.from_table([[0, 1], [1, 0]])

        with pytest.raises(ValueError):
            p.grid[0, 0] = 1

    def test_counts(self):
        """Test row, column and symbol counts on a partial square."""
        # Arrange
        p = PartialLatinSquare.from_entries(3, [(0, 0, 0), (0, 1, 1), (2, 1, 0)])

        # Act & Assert
        assert list(p.row_counts()) == [2, 0, 1]
        assert list(p.col_counts()) == [1, 2, 0]
        assert list(p.symbol_counts()) == [2, 1, 0]
        assert p.row_symbols(0) == {0, 1}
        assert p.col_symbols(1) == {1, 0}

    def test_transpose_swaps_rows_and_columns(self):
        p = PartialLatinSquare.from_entries(3, [(0, 2, 1)])

        assert p.transpose().entries == {Entry(2, 0, 1)}

    def test_equality_depends_on_entries(self):
        left = PartialLatinSquare.from_entries(2, [(0, 0, 1)])
        right = PartialLatinSquare(np.array([[1, EMPTY], [EMPTY, EMPTY]]))

        assert left == right
        assert hash(left) == hash(right)


class TestBitrade:
    """Test cases for Bitrade."""

    def test_orders_must_match(self):
        with pytest.raises(PreconditionError):
            Bitrade(PartialLatinSquare.empty(2), PartialLatinSquare.empty(3))

    def test_swapped_exchanges_components(self, intercalate):
        # Act
        swapped = intercalate.swapped()

        # Assert
        assert swapped.t == intercalate.t_mate
        assert swapped.t_mate == intercalate.t
        assert swapped.size == 4


class TestEntryViews:
    """Test cases for the agreement of the grid and entry-set views."""

    @settings(max_examples=100, deadline=None)
    @given(partial_latin_squares())
    def test_entries_rebuild_the_square(self, p):
        # Act
        rebuilt = PartialLatinSquare.from_entries(p.order, p.entries)

        # Assert
        assert rebuilt == p
        assert rebuilt.entries == p.entries
        assert np.array_equal(rebuilt.grid, p.grid)

    @settings(max_examples=100, deadline=None)
    @given(partial_latin_squares())
    def test_grid_and_entries_agree(self, p):
        filled = {(e.row, e.col) for e in p.entries}

        assert PartialLatinSquare(p.grid) == p
        assert p.size == int(np.count_nonzero(p.grid != EMPTY)) == len(filled)
        for e in p.entries:
            assert p.grid[e.row, e.col] == e.sym

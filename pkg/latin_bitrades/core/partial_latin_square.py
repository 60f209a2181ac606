"""
Partial Latin Square Module

This module provides the immutable value types the rest of the toolkit
works on: entries, partial Latin squares (grid and entry-set views) and
bitrades.
"""

from typing import Dict, FrozenSet, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from latin_bitrades.utils.errors import PreconditionError

EMPTY = -1


class Entry(NamedTuple):
    """A filled cell: (row, column, symbol)."""

    row: int
    col: int
    sym: int


def _repeated(line: np.ndarray) -> Optional[int]:
    """Return a symbol occurring twice among the filled cells of a line, if any."""
    filled = line[line != EMPTY]
    values, counts = np.unique(filled, return_counts=True)
    repeats = values[counts > 1]
    return int(repeats[0]) if len(repeats) else None


class PartialLatinSquare:
    """
    An n x n array over the symbols 0..n-1 with optional empty cells.

    Each symbol occurs at most once per row and once per column. Instances
    are immutable: the backing numpy grid is read-only and the entry set is
    computed once.
    """

    __slots__ = ("_grid", "_entries")

    def __init__(self, grid: Sequence[Sequence[int]]):
        """
        Initialize the square from a grid, using EMPTY (-1) for empty cells.

        Args:
            grid: n x n nested sequence or array of ints

        Raises:
            PreconditionError: If the grid is not square, holds out-of-range
                symbols or repeats a symbol in a row or column
        """
        array = np.array(grid, dtype=np.int64)
        if array.size == 0:
            array = array.reshape(0, 0)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise PreconditionError(f"grid must be square, got shape {array.shape}")

        n = array.shape[0]
        if np.any((array < EMPTY) | (array >= n)):
            raise PreconditionError(f"symbols must lie in 0..{n - 1}")

        for i in range(n):
            symbol = _repeated(array[i, :])
            if symbol is not None:
                raise PreconditionError(f"symbol {symbol} repeated in row {i}")
            symbol = _repeated(array[:, i])
            if symbol is not None:
                raise PreconditionError(f"symbol {symbol} repeated in column {i}")

        array.setflags(write=False)
        self._grid = array
        rows, cols = np.nonzero(array != EMPTY)
        self._entries = frozenset(
            Entry(int(r), int(c), int(array[r, c])) for r, c in zip(rows, cols)
        )

    @classmethod
    def from_entries(cls, n: int, entries: Iterable[Tuple[int, int, int]]) -> "PartialLatinSquare":
        """
        Build a square of order n from an entry set.

        Args:
            n: Order of the square
            entries: Iterable of (row, col, sym) triples

        Returns:
            The partial Latin square with exactly these entries

        Raises:
            PreconditionError: If two entries share a cell or break the
                Latin property
        """
        grid = np.full((n, n), EMPTY, dtype=np.int64)
        for r, c, s in entries:
            if not (0 <= r < n and 0 <= c < n and 0 <= s < n):
                raise PreconditionError(f"entry ({r},{c},{s}) out of range for order {n}")
            if grid[r, c] != EMPTY and grid[r, c] != s:
                raise PreconditionError(f"cell ({r},{c}) assigned both {grid[r, c]} and {s}")
            grid[r, c] = s
        return cls(grid)

    @classmethod
    def empty(cls, n: int) -> "PartialLatinSquare":
        """Return the empty square of order n."""
        return cls(np.full((n, n), EMPTY, dtype=np.int64))

    @classmethod
    def from_table(cls, table: Sequence[Sequence[int]]) -> "PartialLatinSquare":
        """Build a square from a fully filled table, e.g. a Cayley table."""
        return cls(table)

    @property
    def order(self) -> int:
        return int(self._grid.shape[0])

    @property
    def grid(self) -> np.ndarray:
        """Read-only grid view; empty cells hold EMPTY."""
        return self._grid

    @property
    def entries(self) -> FrozenSet[Entry]:
        return self._entries

    @property
    def size(self) -> int:
        """Number of filled cells."""
        return len(self._entries)

    def sorted_entries(self) -> List[Entry]:
        return sorted(self._entries)

    def cells(self) -> FrozenSet[Tuple[int, int]]:
        return frozenset((e.row, e.col) for e in self._entries)

    def get(self, row: int, col: int) -> Optional[int]:
        """Return the symbol at (row, col), or None for an empty cell."""
        value = int(self._grid[row, col])
        return None if value == EMPTY else value

    def contains(self, entry: Tuple[int, int, int]) -> bool:
        r, c, s = entry
        n = self.order
        return 0 <= r < n and 0 <= c < n and int(self._grid[r, c]) == s

    def symbol_lookup(self) -> Dict[Tuple[int, int], int]:
        return {(e.row, e.col): e.sym for e in self._entries}

    def row_counts(self) -> np.ndarray:
        return np.count_nonzero(self._grid != EMPTY, axis=1)

    def col_counts(self) -> np.ndarray:
        return np.count_nonzero(self._grid != EMPTY, axis=0)

    def symbol_counts(self) -> np.ndarray:
        filled = self._grid[self._grid != EMPTY]
        return np.bincount(filled, minlength=self.order)

    def row_symbols(self, row: int) -> FrozenSet[int]:
        line = self._grid[row, :]
        return frozenset(int(s) for s in line[line != EMPTY])

    def col_symbols(self, col: int) -> FrozenSet[int]:
        line = self._grid[:, col]
        return frozenset(int(s) for s in line[line != EMPTY])

    def is_filled(self) -> bool:
        return bool(np.all(self._grid != EMPTY))

    def transpose(self) -> "PartialLatinSquare":
        return PartialLatinSquare(self._grid.T.copy())

    def __iter__(self) -> Iterator[Entry]:
        return iter(self.sorted_entries())

    def __len__(self) -> int:
        return self.size

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialLatinSquare):
            return NotImplemented
        return self._grid.shape == other._grid.shape and bool(np.array_equal(self._grid, other._grid))

    def __hash__(self) -> int:
        return hash((self.order, self._grid.tobytes()))

    def __repr__(self) -> str:
        return f"PartialLatinSquare(order={self.order}, size={self.size})"


class Bitrade:
    """
    A pair (T, T') of partial Latin squares of equal order.

    Construction only checks the orders; the trade conditions are checked
    by ``verify_bitrade``.
    """

    __slots__ = ("t", "t_mate")

    def __init__(self, t: PartialLatinSquare, t_mate: PartialLatinSquare):
        if t.order != t_mate.order:
            raise PreconditionError(f"bitrade components have orders {t.order} and {t_mate.order}")
        self.t = t
        self.t_mate = t_mate

    @classmethod
    def from_entries(
        cls,
        n: int,
        t_entries: Iterable[Tuple[int, int, int]],
        t_mate_entries: Iterable[Tuple[int, int, int]],
    ) -> "Bitrade":
        return cls(
            PartialLatinSquare.from_entries(n, t_entries),
            PartialLatinSquare.from_entries(n, t_mate_entries),
        )

    @property
    def order(self) -> int:
        return self.t.order

    @property
    def size(self) -> int:
        return self.t.size

    def swapped(self) -> "Bitrade":
        """Return (T', T), which is a bitrade whenever (T, T') is."""
        return Bitrade(self.t_mate, self.t)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Bitrade):
            return NotImplemented
        return self.t == other.t and self.t_mate == other.t_mate

    def __hash__(self) -> int:
        return hash((self.t, self.t_mate))

    def __repr__(self) -> str:
        return f"Bitrade(order={self.order}, size={self.size})"

"""
Verifiers Module

This module provides the definitional checks on partial Latin squares and
bitrades: Latin property, the trade conditions, embedding, substitution of
a trade, Hamming differences, homogeneity and orthogonality.
"""

from collections import defaultdict
from typing import Optional

import numpy as np

from latin_bitrades.core.partial_latin_square import EMPTY, Bitrade, PartialLatinSquare
from latin_bitrades.models import BitradeDiagnostics
from latin_bitrades.utils.errors import PreconditionError
from latin_bitrades.utils.logger import get_logger

logger = get_logger(__name__)


def _require_same_order(p: PartialLatinSquare, l: PartialLatinSquare) -> None:
    if p.order != l.order:
        raise PreconditionError(f"order mismatch: {p.order} vs {l.order}")


def is_latin_square(p: PartialLatinSquare) -> bool:
    """
    Check whether a partial Latin square is a Latin square.

    Every cell must be filled and every row and column must hold each
    symbol exactly once. Both conditions are checked here on the grid.

    Args:
        p: Square to check

    Returns:
        True if the grid is complete and each row and column is a
        permutation of the symbols
    """
    if not p.is_filled():
        return False
    n = p.order
    full = np.arange(n)
    grid = p.grid
    return all(
        np.array_equal(np.sort(grid[i, :]), full) and np.array_equal(np.sort(grid[:, i]), full)
        for i in range(n)
    )


def diagnose_bitrade(b: Bitrade) -> BitradeDiagnostics:
    """
    Evaluate each trade condition separately.

    Args:
        b: Candidate bitrade

    Returns:
        Diagnostics naming the first failing row, column, shared entry or
        unmatched cell
    """
    t, mate = b.t, b.t_mate
    shared = sorted(t.entries & mate.entries)
    shape_diff = sorted(t.cells() ^ mate.cells())

    row_failure = None
    col_failure = None
    for i in range(t.order):
        if row_failure is None and t.row_symbols(i) != mate.row_symbols(i):
            row_failure = i
        if col_failure is None and t.col_symbols(i) != mate.col_symbols(i):
            col_failure = i

    diagnostics = BitradeDiagnostics(
        nonempty=t.size > 0,
        same_size=t.size == mate.size,
        disjoint=not shared,
        same_shape=not shape_diff,
        row_failure=row_failure,
        col_failure=col_failure,
        shared_entry=tuple(shared[0]) if shared else None,
        shape_cell=shape_diff[0] if shape_diff else None,
    )
    if not diagnostics.valid:
        logger.debug(f"Bitrade check failed: {diagnostics.failures()}")
    return diagnostics


def verify_bitrade(b: Bitrade) -> bool:
    """
    Check conditions (1), (2) and (3*) on a pair of partial Latin squares.

    Args:
        b: Candidate bitrade; construction guarantees equal orders

    Returns:
        True if (T, T') is a non-empty Latin bitrade
    """
    return diagnose_bitrade(b).valid


def embedded_in(p: PartialLatinSquare, l: PartialLatinSquare) -> bool:
    """Return True if every entry of p is an entry of l."""
    _require_same_order(p, l)
    return p.entries <= l.entries


def apply_trade(l: PartialLatinSquare, b: Bitrade) -> PartialLatinSquare:
    """
    Replace the cells of T in l by the symbols of T'.

    Args:
        l: Latin square containing T
        b: Bitrade to swap in

    Returns:
        The resulting square; it is Latin exactly when b is a bitrade

    Raises:
        PreconditionError: If l is not Latin, b is empty or T is not
            embedded in l
    """
    _require_same_order(b.t, l)
    if not is_latin_square(l):
        raise PreconditionError("apply_trade requires a Latin square")
    if b.t.size == 0:
        raise PreconditionError("apply_trade requires a non-empty bitrade")
    if not embedded_in(b.t, l):
        raise PreconditionError("T is not embedded in the square")

    grid = l.grid.copy()
    for entry in b.t.entries:
        grid[entry.row, entry.col] = EMPTY
    for entry in b.t_mate.entries:
        grid[entry.row, entry.col] = entry.sym
    # Raises PreconditionError when T' repeats a symbol of the untouched cells
    return PartialLatinSquare(grid)


def yields_latin_square(l: PartialLatinSquare, b: Bitrade) -> bool:
    """
    Check condition (3): swapping T for T' in l gives a Latin square.

    Args:
        l: Latin square containing T
        b: Candidate bitrade

    Returns:
        True if the substituted square is Latin
    """
    try:
        return is_latin_square(apply_trade(l, b))
    except PreconditionError as e:
        logger.debug(f"Substitution rejected: {e}")
        return False


def hamming_distance(l1: PartialLatinSquare, l2: PartialLatinSquare) -> int:
    """Number of cells in which two squares of equal order differ."""
    _require_same_order(l1, l2)
    return int(np.count_nonzero(l1.grid != l2.grid))


def difference_bitrade(l1: PartialLatinSquare, l2: PartialLatinSquare) -> Optional[Bitrade]:
    """
    Return (Ent(l1) minus Ent(l2), Ent(l2) minus Ent(l1)) as a bitrade.

    Args:
        l1: First Latin square
        l2: Second Latin square of the same order

    Returns:
        The difference bitrade, or None when the squares are equal

    Raises:
        PreconditionError: If either square is not Latin or the orders differ
    """
    _require_same_order(l1, l2)
    if not (is_latin_square(l1) and is_latin_square(l2)):
        raise PreconditionError("difference_bitrade requires two Latin squares")

    if l1 == l2:
        return None
    n = l1.order
    return Bitrade.from_entries(n, l1.entries - l2.entries, l2.entries - l1.entries)


def homogeneity(t: PartialLatinSquare) -> Optional[int]:
    """
    Return k if every row, column and symbol meets t zero or k times.

    Args:
        t: Partial Latin square

    Returns:
        The common count k, or None if the counts disagree or t is empty
    """
    counts = np.concatenate([t.row_counts(), t.col_counts(), t.symbol_counts()])
    used = np.unique(counts[counts > 0])
    if len(used) != 1:
        return None
    return int(used[0])


def is_orthogonal_direct(b: Bitrade) -> bool:
    """
    Check orthogonality of a bitrade straight from the definition.

    Two cells of T holding the same symbol always lie in distinct rows and
    columns, so the quantified condition reduces to: among the cells of T
    with a given symbol, the T' symbols are pairwise distinct.

    Args:
        b: A verified bitrade

    Returns:
        True if the bitrade is orthogonal

    Raises:
        PreconditionError: If b is not a bitrade
    """
    if not verify_bitrade(b):
        raise PreconditionError("orthogonality is only defined for a bitrade")

    mate = b.t_mate.symbol_lookup()
    images = defaultdict(set)
    for entry in b.t.entries:
        image = mate[(entry.row, entry.col)]
        if image in images[entry.sym]:
            return False
        images[entry.sym].add(image)
    return True

"""
Trade Search Module

This module provides the budgeted backtracking searches over the entries of
a Latin trade: finding a disjoint mate, deciding minimality and deciding
whether a bitrade is primary.
"""

from collections import defaultdict, deque
from enum import Enum
from typing import Callable, Dict, List, Optional, Set, Tuple

from latin_bitrades.core.partial_latin_square import Bitrade, PartialLatinSquare
from latin_bitrades.core.verifiers import verify_bitrade
from latin_bitrades.utils.errors import PreconditionError
from latin_bitrades.utils.logger import get_logger

logger = get_logger(__name__)

DEFAULT_SEARCH_NODES = 10_000_000


class SearchOutcome(str, Enum):
    """Three-valued result of a budgeted search."""

    YES = "yes"
    NO = "no"
    INCONCLUSIVE = "inconclusive"

    @classmethod
    def from_bool(cls, flag: bool) -> "SearchOutcome":
        return cls.YES if flag else cls.NO


class _BudgetHit(Exception):
    pass


class _SubtradeSearch:
    """
    Backtracking over sub-trades of a partial Latin square T.

    A cell switched on must receive a mate symbol w different from its own,
    unused in its row and column, and w must be the T-symbol of cells in the
    same row and in the same column, which are switched on in turn. A state
    with every switched-on cell assigned is a bitrade (U, U') with U inside T.
    """

    def __init__(self, t: PartialLatinSquare, cap: int):
        self.cells: List[Tuple[int, int, int]] = [tuple(e) for e in t.sorted_entries()]
        self.row_cell: Dict[Tuple[int, int], int] = {}
        self.col_cell: Dict[Tuple[int, int], int] = {}
        self.row_syms: Dict[int, List[int]] = defaultdict(list)
        for index, (r, c, s) in enumerate(self.cells):
            self.row_cell[(r, s)] = index
            self.col_cell[(c, s)] = index
            self.row_syms[r].append(s)
        for r in self.row_syms:
            self.row_syms[r].sort()
        self.cap = cap
        self.nodes = 0

    def _candidates(self, x: int, off: Set[int], row_used, col_used) -> List[int]:
        r, c, s = self.cells[x]
        found = []
        for w in self.row_syms[r]:
            if w == s or w in row_used[r] or w in col_used[c]:
                continue
            partner = self.col_cell.get((c, w))
            if partner is None or partner in off or self.row_cell[(r, w)] in off:
                continue
            found.append(w)
        return found

    def run(
        self,
        start_on: Set[int],
        off: Set[int],
        accept: Callable[[Set[int]], bool],
    ) -> Optional[Dict[int, int]]:
        """
        Search for a closed assignment extending the switched-on cells.

        Args:
            start_on: Cell indices that must belong to U
            off: Cell indices excluded from U
            accept: Predicate on the final switched-on set

        Returns:
            Mapping cell index -> mate symbol, or None if no sub-trade exists

        Raises:
            _BudgetHit: If the node budget is exhausted
        """
        on = set(start_on)
        value: Dict[int, int] = {}
        row_used = defaultdict(set)
        col_used = defaultdict(set)

        def assign(x: int, w: int) -> List[int]:
            self.nodes += 1
            if self.nodes > self.cap:
                raise _BudgetHit()
            r, c, _ = self.cells[x]
            value[x] = w
            row_used[r].add(w)
            col_used[c].add(w)
            newly = [y for y in {self.row_cell[(r, w)], self.col_cell[(c, w)]} if y not in on]
            on.update(newly)
            return newly

        def unassign(x: int, w: int, newly: List[int]) -> None:
            r, c, _ = self.cells[x]
            del value[x]
            row_used[r].discard(w)
            col_used[c].discard(w)
            on.difference_update(newly)

        def select() -> Optional[Tuple[int, List[int]]]:
            best = None
            for x in sorted(on):
                if x in value:
                    continue
                candidates = self._candidates(x, off, row_used, col_used)
                if best is None or len(candidates) < len(best[1]):
                    best = (x, candidates)
                    if not candidates:
                        break
            return best

        stack: List[list] = []
        while True:
            pick = select()
            if pick is None:
                if accept(on):
                    return dict(value)
            else:
                x, candidates = pick
                if candidates:
                    stack.append([x, candidates, 0, assign(x, candidates[0])])
                    continue

            while stack:
                frame = stack[-1]
                x, candidates, position, newly = frame
                unassign(x, candidates[position], newly)
                position += 1
                if position < len(candidates):
                    frame[2] = position
                    frame[3] = assign(x, candidates[position])
                    break
                stack.pop()
            else:
                return None


def find_mate(t: PartialLatinSquare, cap: int = DEFAULT_SEARCH_NODES) -> Tuple[SearchOutcome, Optional[PartialLatinSquare]]:
    """
    Search for a disjoint mate of t, filling cells most-constrained-first.

    Args:
        t: Partial Latin square
        cap: Node budget

    Returns:
        (YES, mate), (NO, None) or (INCONCLUSIVE, None)
    """
    if t.size == 0:
        return SearchOutcome.NO, None

    search = _SubtradeSearch(t, cap)
    everything = set(range(len(search.cells)))
    try:
        assignment = search.run(everything, set(), lambda on: True)
    except _BudgetHit:
        logger.warning(f"Mate search exhausted its budget of {cap} nodes")
        return SearchOutcome.INCONCLUSIVE, None

    logger.debug(f"Mate search finished after {search.nodes} nodes")
    if assignment is None:
        return SearchOutcome.NO, None
    mate_entries = [(r, c, assignment[i]) for i, (r, c, _) in enumerate(search.cells)]
    return SearchOutcome.YES, PartialLatinSquare.from_entries(t.order, mate_entries)


def is_minimal(t: PartialLatinSquare, cap: int = DEFAULT_SEARCH_NODES) -> SearchOutcome:
    """
    Decide whether a Latin trade contains no proper sub-trade.

    Sub-trades are enumerated by their first cell in entry order: cells
    before the seed are excluded, the seed is included and the rest is
    forced by the mate constraints.

    Args:
        t: A Latin trade
        cap: Node budget shared by all seeds

    Returns:
        YES if minimal, NO if a proper sub-trade exists, INCONCLUSIVE if the
        budget ran out first

    Raises:
        PreconditionError: If t is empty
    """
    if t.size == 0:
        raise PreconditionError("minimality is only defined for a non-empty trade")

    search = _SubtradeSearch(t, cap)
    total = len(search.cells)
    try:
        for seed in range(total):
            found = search.run({seed}, set(range(seed)), lambda on: len(on) < total)
            if found is not None:
                logger.debug(f"Proper sub-trade of size {len(found)} found from seed {seed}")
                return SearchOutcome.NO
    except _BudgetHit:
        logger.warning(f"Minimality search exhausted its budget of {cap} nodes")
        return SearchOutcome.INCONCLUSIVE

    logger.debug(f"Minimality search finished after {search.nodes} nodes")
    return SearchOutcome.YES


def _forced_reach(
    edges: List[Tuple[int, int]],
    reverse: bool,
    budget: List[int],
) -> Set[int]:
    adjacency: Dict[int, List[int]] = defaultdict(list)
    for x, (a, b) in enumerate(edges):
        for y in (a, b):
            if reverse:
                adjacency[y].append(x)
            else:
                adjacency[x].append(y)

    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        budget[0] -= 1
        if budget[0] < 0:
            raise _BudgetHit()
        for y in adjacency[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def is_primary(b: Bitrade, cap: int = DEFAULT_SEARCH_NODES) -> SearchOutcome:
    """
    Decide whether a bitrade contains no proper sub-bitrade.

    With U' inside T' every mate symbol is fixed, so a sub-bitrade holding a
    cell must hold the cells of T carrying that cell's T' symbol in its row
    and in its column. The bitrade is primary exactly when this forcing
    relation is strongly connected.

    Args:
        b: A verified bitrade
        cap: Node budget

    Returns:
        YES, NO or INCONCLUSIVE

    Raises:
        PreconditionError: If b is not a bitrade
    """
    if not verify_bitrade(b):
        raise PreconditionError("primality is only defined for a bitrade")

    cells = [tuple(e) for e in b.t.sorted_entries()]
    row_cell = {(r, s): i for i, (r, _, s) in enumerate(cells)}
    col_cell = {(c, s): i for i, (_, c, s) in enumerate(cells)}
    mate = b.t_mate.symbol_lookup()
    edges = [(row_cell[(r, mate[(r, c)])], col_cell[(c, mate[(r, c)])]) for r, c, _ in cells]

    budget = [cap]
    try:
        forward = _forced_reach(edges, False, budget)
        backward = _forced_reach(edges, True, budget)
    except _BudgetHit:
        logger.warning(f"Primality search exhausted its budget of {cap} nodes")
        return SearchOutcome.INCONCLUSIVE

    connected = len(forward) == len(cells) and len(backward) == len(cells)
    logger.debug(f"Primality check: forward {len(forward)}, backward {len(backward)} of {len(cells)}")
    return SearchOutcome.from_bool(connected)

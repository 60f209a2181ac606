"""
Paratopism Group Module

This module provides explicit groups of paratopisms: breadth-first closure
from generators, orbits, the four entry stabilizers and the related
counting helpers.
"""

from collections import Counter, deque
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from latin_bitrades.core.partial_latin_square import Entry, PartialLatinSquare
from latin_bitrades.groups.paratopism import Paratopism, is_autoparatopism
from latin_bitrades.utils.errors import BudgetExhaustedError, ConsistencyError, PreconditionError
from latin_bitrades.utils.logger import get_logger

logger = get_logger(__name__)

DEFAULT_CLOSURE_CAP = 1_000_000

# Coordinates fixed by each stabilizer kind
STABILIZER_KINDS: Dict[str, Tuple[int, ...]] = {
    "row": (0,),
    "col": (1,),
    "sym": (2,),
    "full": (0, 1, 2),
}


class ParatopismGroup:
    """
    A finite group of paratopisms held as an explicit element list.

    Elements keep their generation order, identity first; membership goes
    through a hash index on the flattened image vectors.
    """

    def __init__(self, elements: Sequence[Paratopism], generators: Optional[Sequence[Paratopism]] = None):
        if not elements:
            raise PreconditionError("a group has at least the identity")
        self.elements: List[Paratopism] = list(elements)
        self.index: Dict[Tuple[int, ...], int] = {x.key(): i for i, x in enumerate(self.elements)}
        self.generators: List[Paratopism] = list(generators or [])

    @classmethod
    def trivial(cls, n: int) -> "ParatopismGroup":
        return cls([Paratopism.identity(n)])

    @property
    def degree(self) -> int:
        """Order of the squares the group acts on."""
        return self.elements[0].order

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Paratopism]:
        return iter(self.elements)

    def __contains__(self, th: Paratopism) -> bool:
        return th.key() in self.index

    def position(self, th: Paratopism) -> int:
        """
        Return the generation index of an element.

        Raises:
            PreconditionError: If th is not in the group
        """
        try:
            return self.index[th.key()]
        except KeyError:
            raise PreconditionError(f"{th} is not an element of the group")

    def issubset(self, other: "ParatopismGroup") -> bool:
        return all(x in other for x in self.elements)

    def is_closed(self) -> bool:
        """Check closure under products exhaustively."""
        return all((x * y) in self for x in self.elements for y in self.elements)

    def __repr__(self) -> str:
        return f"ParatopismGroup(order={len(self)}, degree={self.degree})"


def closure(
    gens: Sequence[Paratopism],
    l: Optional[PartialLatinSquare] = None,
    cap: int = DEFAULT_CLOSURE_CAP,
) -> ParatopismGroup:
    """
    Generate the group spanned by gens by breadth-first products.

    Args:
        gens: Generators, all of one order
        l: Square the generators must preserve; skipped when None
        cap: Maximum number of elements

    Returns:
        The group with elements in generation order, identity first

    Raises:
        PreconditionError: If a generator is not an autoparatopism of l
        BudgetExhaustedError: If the group outgrows cap
    """
    if not gens:
        if l is None:
            raise PreconditionError("closure needs a generator or a square")
        return ParatopismGroup.trivial(l.order)

    if l is not None:
        for number, generator in enumerate(gens):
            if not is_autoparatopism(generator, l):
                raise PreconditionError(f"generator {number} {generator} is not an autoparatopism of the square")

    identity = Paratopism.identity(gens[0].order)
    elements = [identity]
    seen = {identity.key()}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for generator in gens:
            product = generator * current
            key = product.key()
            if key in seen:
                continue
            seen.add(key)
            elements.append(product)
            queue.append(product)
            if len(elements) > cap:
                raise BudgetExhaustedError(
                    f"closure exceeded the cap of {cap} elements", partial_size=len(elements)
                )

    logger.info(f"Closed {len(gens)} generators into a group of order {len(elements)}")
    return ParatopismGroup(elements, gens)


def orbit(g: ParatopismGroup, e: Sequence[int]) -> FrozenSet[Entry]:
    """Return {x(e) : x in g}."""
    return frozenset(x.apply(e) for x in g)


def stab(g: ParatopismGroup, e: Sequence[int], kind: str = "full") -> ParatopismGroup:
    """
    Return the stabilizer of e's row, column, symbol or whole entry.

    Args:
        g: Group
        e: Entry
        kind: One of "row", "col", "sym", "full"

    Returns:
        The subgroup of elements fixing the chosen coordinates of e

    Raises:
        PreconditionError: On an unknown kind
        ConsistencyError: If the elements kept do not form a subgroup
    """
    try:
        coordinates = STABILIZER_KINDS[kind]
    except KeyError:
        raise PreconditionError(f"unknown stabilizer kind {kind!r}; expected one of {sorted(STABILIZER_KINDS)}")

    kept = []
    for x in g:
        image = x.apply(e)
        if all(image[k] == e[k] for k in coordinates):
            kept.append(x)
    subgroup = ParatopismGroup(kept)
    if not subgroup.is_closed():
        raise ConsistencyError(f"{kind} stabilizer of {tuple(e)} is not closed under products")
    return subgroup


def stabilizer_orders(g: ParatopismGroup, e: Sequence[int]) -> Dict[str, int]:
    """Orders of the four stabilizers of e in one pass over g."""
    counts = dict.fromkeys(STABILIZER_KINDS, 0)
    for x in g:
        image = x.apply(e)
        fixed = [image[k] == e[k] for k in range(3)]
        for kind, coordinates in STABILIZER_KINDS.items():
            if all(fixed[k] for k in coordinates):
                counts[kind] += 1
    return counts


def is_entry_transitive(g: ParatopismGroup, p: PartialLatinSquare) -> bool:
    """
    Check whether g moves any entry of p onto every other entry of p.

    Args:
        g: Group acting on entries
        p: Partial Latin square

    Returns:
        True if Ent(p) lies inside a single orbit of g
    """
    entries = p.entries
    if not entries:
        return True
    start = min(entries)
    return entries <= orbit(g, start)


def point_stabilizer(g: ParatopismGroup, point: int) -> ParatopismGroup:
    """
    Stabilizer of a symbol under a group of automorphisms.

    Raises:
        PreconditionError: If g holds an element that is not an automorphism
    """
    kept = []
    for x in g:
        if not x.is_automorphism():
            raise PreconditionError(f"{x} is not an automorphism")
        if x.components[0].fixes(point):
            kept.append(x)
    return ParatopismGroup(kept)


def row_transfer_counts(g: ParatopismGroup, e: Sequence[int]) -> Dict[int, int]:
    """
    Count, for each row r, the elements of g sending the row of e to r.

    Every reachable row is hit exactly |stab(g, e, "row")| times.
    """
    return dict(Counter(x.apply(e)[0] for x in g))


def orbits_of(g: ParatopismGroup, entries: Iterable[Sequence[int]]) -> List[FrozenSet[Entry]]:
    """
    Partition a g-invariant entry set into orbits.

    Args:
        g: Group
        entries: Entry set closed under g

    Returns:
        Orbits ordered by their least entry

    Raises:
        PreconditionError: If an orbit leaves the entry set
    """
    remaining = {Entry(*e) for e in entries}
    universe = frozenset(remaining)
    found = []
    while remaining:
        start = min(remaining)
        current = orbit(g, start)
        if not current <= universe:
            outside = min(current - universe)
            raise PreconditionError(f"the entry set is not closed under the group: {tuple(outside)} escapes")
        found.append(current)
        remaining -= current
    return found

"""
Group Table Module

This module provides finite groups given by their Cayley table, with
element 0 as the identity, plus subgroup and coset helpers.
"""

from typing import FrozenSet, Iterable, List, Sequence

import numpy as np

from latin_bitrades.core.partial_latin_square import PartialLatinSquare
from latin_bitrades.groups.paratopism_group import ParatopismGroup
from latin_bitrades.utils.errors import ParseError, PreconditionError
from latin_bitrades.utils.logger import get_logger

logger = get_logger(__name__)

FULL_ASSOCIATIVITY_LIMIT = 64
ASSOCIATIVITY_SAMPLES = 20_000


class FiniteGroupTable:
    """
    A finite group on the indices 0..n-1 with identity 0.

    ``mult[a, b]`` is the index of the product a*b.
    """

    def __init__(self, mult: Sequence[Sequence[int]], name: str = "group"):
        """
        Initialize and validate the table.

        Args:
            mult: n x n multiplication table
            name: Display name

        Raises:
            PreconditionError: If the table is not Latin, 0 is not the
                identity or associativity fails
        """
        table = np.array(mult, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise PreconditionError(f"group table must be a non-empty square, got shape {table.shape}")
        n = table.shape[0]
        full = np.arange(n)
        for i in range(n):
            if not (np.array_equal(np.sort(table[i, :]), full) and np.array_equal(np.sort(table[:, i]), full)):
                raise PreconditionError(f"group table is not a Latin square at line {i}")
        if not (np.array_equal(table[0, :], full) and np.array_equal(table[:, 0], full)):
            raise PreconditionError("element 0 must be the identity")

        table.setflags(write=False)
        self.mult = table
        self.name = name
        self.inverses = np.nonzero(table == 0)[1]
        self._check_associative()

    def _check_associative(self) -> None:
        n = self.order
        table = self.mult
        if n <= FULL_ASSOCIATIVITY_LIMIT:
            points = np.arange(n)
            left = table[table[:, :, None], points[None, None, :]]
            right = table[points[:, None, None], table[None, :, :]]
            failures = np.argwhere(left != right)
        else:
            rng = np.random.default_rng(0)
            a, b, c = rng.integers(0, n, size=(3, ASSOCIATIVITY_SAMPLES))
            bad = table[table[a, b], c] != table[a, table[b, c]]
            failures = np.stack([a[bad], b[bad], c[bad]], axis=1)
        if len(failures):
            a, b, c = (int(v) for v in failures[0])
            raise PreconditionError(f"associativity fails for ({a}, {b}, {c})")

    @classmethod
    def parse(cls, text: str, source: str = "<string>") -> "FiniteGroupTable":
        """
        Parse the group table format: the order n, then n rows of n indices.

        Raises:
            ParseError: On malformed text or a table that is not a group
        """
        lines = [
            (number, raw.split("#", 1)[0].strip())
            for number, raw in enumerate(text.splitlines(), start=1)
        ]
        lines = [(number, line) for number, line in lines if line]
        if not lines:
            raise ParseError("empty group table", location=source)
        try:
            n = int(lines[0][1])
        except ValueError:
            raise ParseError(f"expected the order, got {lines[0][1]!r}", location=f"{source}:{lines[0][0]}")
        if len(lines) - 1 != n:
            raise ParseError(f"expected {n} rows, found {len(lines) - 1}", location=source)

        rows = []
        for number, line in lines[1:]:
            try:
                row = [int(token) for token in line.split()]
            except ValueError:
                raise ParseError(f"bad index in {line!r}", location=f"{source}:{number}")
            if len(row) != n:
                raise ParseError(f"expected {n} indices, found {len(row)}", location=f"{source}:{number}")
            rows.append(row)
        try:
            return cls(rows, name=source)
        except PreconditionError as e:
            raise ParseError(e.message, location=source)

    @classmethod
    def from_paratopism_group(cls, group: ParatopismGroup) -> "FiniteGroupTable":
        """Tabulate products of an explicit group in its generation order."""
        elements = group.elements
        if not elements[0].is_identity():
            raise PreconditionError("the first group element must be the identity")
        table = [[group.position(x * y) for y in elements] for x in elements]
        return cls(table, name=f"group of order {len(elements)}")

    @property
    def order(self) -> int:
        return int(self.mult.shape[0])

    def mul(self, a: int, b: int) -> int:
        return int(self.mult[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        result = 0
        for _ in range(k):
            result = self.mul(result, a)
        return result

    def cyclic_subgroup(self, a: int) -> FrozenSet[int]:
        members = [0]
        current = a
        while current != 0:
            members.append(current)
            current = self.mul(current, a)
        return frozenset(members)

    def element_order(self, a: int) -> int:
        return len(self.cyclic_subgroup(a))

    def generated_subgroup(self, gens: Iterable[int]) -> FrozenSet[int]:
        """Closure of a set of elements under products."""
        gens = list(gens)
        members = {0}
        frontier = [0]
        while frontier:
            current = frontier.pop()
            for g in gens:
                product = self.mul(current, g)
                if product not in members:
                    members.add(product)
                    frontier.append(product)
        return frozenset(members)

    def left_coset(self, g: int, subgroup: Iterable[int]) -> FrozenSet[int]:
        """Return gH = {g*h : h in H}."""
        return frozenset(int(self.mult[g, h]) for h in subgroup)

    def coset_partition(self, subgroup: FrozenSet[int]) -> List[FrozenSet[int]]:
        """Left cosets of a subgroup, ordered by least member."""
        seen = set()
        cosets = []
        for g in range(self.order):
            if g in seen:
                continue
            coset = self.left_coset(g, subgroup)
            seen |= coset
            cosets.append(coset)
        return cosets

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mult, self.mult.T))

    def to_latin_square(self) -> PartialLatinSquare:
        return PartialLatinSquare.from_table(self.mult)

    def format(self) -> str:
        lines = [str(self.order)]
        lines.extend(" ".join(str(int(v)) for v in row) for row in self.mult)
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"FiniteGroupTable({self.name!r}, order={self.order})"

"""
Permutation Module

This module provides permutations of 0..n-1 in one-line (image array) form,
with cycle-notation parsing and formatting. Products compose right to left:
``(a * b)(i) == a(b(i))``.
"""

import json
import math
import re
from typing import Callable, Iterable, List, Sequence, Tuple

from latin_bitrades.utils.errors import ParseError, PreconditionError

IDENTITY_TOKEN = "Id"
COMPACT_DEGREE = 10

_CYCLE = re.compile(r"\(([^()]*)\)")


class Permutation:
    """
    A bijection on 0..n-1 stored as its image tuple.
    """

    __slots__ = ("_images",)

    # Offset added to points when printing and subtracted when parsing
    display_offset = 0

    def __init__(self, images: Sequence[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise PreconditionError(f"{list(images)} is not a permutation of 0..{len(images) - 1}")
        self._images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def from_function(cls, n: int, fn: Callable[[int], int]) -> "Permutation":
        """Tabulate a bijection given as a function on 0..n-1."""
        return cls([fn(i) for i in range(n)])

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """
        Build a permutation of degree n from disjoint cycles.

        Raises:
            PreconditionError: If a point is out of range or repeated
        """
        images = list(range(n))
        seen = set()
        for cycle in cycles:
            for point in cycle:
                if not 0 <= point < n:
                    raise PreconditionError(f"point {point + cls.display_offset} outside the degree {n}")
                if point in seen:
                    raise PreconditionError(f"point {point + cls.display_offset} appears twice")
                seen.add(point)
            for position, point in enumerate(cycle):
                images[point] = cycle[(position + 1) % len(cycle)]
        return cls(images)

    @classmethod
    def parse(cls, text: str, n: int) -> "Permutation":
        """
        Parse a permutation of degree n.

        Accepts "Id", an image array such as "[1,0,2,3]" or cycle notation.
        Cycles without spaces read one digit per point ("(0132)"); cycles
        with spaces read whole numbers ("(5 10)").

        Args:
            text: Permutation text
            n: Degree

        Returns:
            The permutation

        Raises:
            ParseError: On malformed text
        """
        stripped = text.strip()
        try:
            if stripped in (IDENTITY_TOKEN, "", "()"):
                return cls.identity(n)
            if stripped.startswith("["):
                images = json.loads(stripped)
                if len(images) != n:
                    raise ParseError(f"image array {stripped} has length {len(images)}, expected {n}")
                return cls([int(i) - cls.display_offset for i in images])
            if _CYCLE.sub("", stripped).strip():
                raise ParseError(f"cannot read {stripped!r} as cycle notation")
            cycles = []
            for body in _CYCLE.findall(stripped):
                tokens = body.split() if any(ch.isspace() for ch in body.strip()) else list(body.strip())
                cycles.append([int(token) - cls.display_offset for token in tokens])
            return cls.from_cycles(n, cycles)
        except (json.JSONDecodeError, TypeError, ValueError) as e:
            if isinstance(e, ParseError):
                raise
            raise ParseError(f"bad permutation {stripped!r}: {e}")

    @property
    def images(self) -> Tuple[int, ...]:
        return self._images

    @property
    def degree(self) -> int:
        return len(self._images)

    def __call__(self, point: int) -> int:
        return self._images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise PreconditionError(f"degree mismatch: {self.degree} vs {other.degree}")
        mine = self._images
        return type(self)([mine[i] for i in other._images])

    def __pow__(self, exponent: int) -> "Permutation":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = type(self).identity(self.degree)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inverse(self) -> "Permutation":
        inverse = [0] * self.degree
        for point, image in enumerate(self._images):
            inverse[image] = point
        return type(self)(inverse)

    def is_identity(self) -> bool:
        return all(point == image for point, image in enumerate(self._images))

    def cycles(self) -> List[Tuple[int, ...]]:
        """Return the non-trivial cycles, each starting at its least point."""
        seen = set()
        found = []
        for start in range(self.degree):
            if start in seen or self._images[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            point = self._images[start]
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self._images[point]
            found.append(tuple(cycle))
        return found

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if not self.is_identity() else 1

    def fixes(self, point: int) -> bool:
        return self._images[point] == point

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __str__(self) -> str:
        if self.is_identity():
            return IDENTITY_TOKEN
        joiner = "" if self.degree + self.display_offset <= COMPACT_DEGREE else " "
        return "".join(
            "(" + joiner.join(str(p + self.display_offset) for p in cycle) + ")"
            for cycle in self.cycles()
        )

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)}, degree={self.degree})"


class RolePerm(Permutation):
    """
    A permutation of the three coordinate roles (row, column, symbol).

    Stored 0-based like any permutation but read and printed 1-based, so
    "(12)" swaps rows and columns.
    """

    __slots__ = ()

    display_offset = 1

    @classmethod
    def identity(cls, n: int = 3) -> "RolePerm":
        return cls(range(n))

    @classmethod
    def parse(cls, text: str, n: int = 3) -> "RolePerm":
        return super().parse(text, n)

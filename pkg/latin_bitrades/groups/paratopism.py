"""
Paratopism Module

This module provides paratopisms (f1, f2, f3; pi) of Latin squares: their
action on entries, the composition law, inverses, text parsing and the
autoparatopism test.
"""

import json
from typing import Iterable, List, Sequence, Tuple

from latin_bitrades.core.partial_latin_square import Entry, PartialLatinSquare
from latin_bitrades.groups.permutation import IDENTITY_TOKEN, Permutation, RolePerm
from latin_bitrades.utils.errors import ParseError, PreconditionError


class Paratopism:
    """
    A triple of permutations of 0..n-1 with a permutation of the roles.

    The action on an entry e is
    ``apply(e)[k] = f[pi(k)](e[pi(k)])`` for k = 0, 1, 2, so isotopisms have
    the identity role permutation and automorphisms also have three equal
    components.
    """

    __slots__ = ("components", "role", "_key")

    def __init__(self, components: Sequence[Permutation], role: RolePerm = None):
        """
        Initialize the paratopism.

        Args:
            components: The three permutations f1, f2, f3
            role: Role permutation; identity when omitted

        Raises:
            PreconditionError: If there are not three components of one degree
        """
        if len(components) != 3:
            raise PreconditionError(f"a paratopism needs three components, got {len(components)}")
        degrees = {f.degree for f in components}
        if len(degrees) != 1:
            raise PreconditionError(f"component degrees differ: {sorted(degrees)}")
        self.components: Tuple[Permutation, Permutation, Permutation] = tuple(components)
        self.role = role if role is not None else RolePerm.identity()
        if self.role.degree != 3:
            raise PreconditionError("the role permutation must act on three coordinates")
        self._key = tuple(i for f in self.components for i in f.images) + self.role.images

    @classmethod
    def identity(cls, n: int) -> "Paratopism":
        f = Permutation.identity(n)
        return cls((f, f, f))

    @classmethod
    def automorphism(cls, f: Permutation) -> "Paratopism":
        """The automorphism (f, f, f)."""
        return cls((f, f, f))

    @classmethod
    def isotopism(cls, f1: Permutation, f2: Permutation, f3: Permutation) -> "Paratopism":
        return cls((f1, f2, f3))

    @classmethod
    def parastrophism(cls, role: RolePerm, n: int) -> "Paratopism":
        f = Permutation.identity(n)
        return cls((f, f, f), role)

    @property
    def order(self) -> int:
        """Degree n of the components (the order of the squares acted on)."""
        return self.components[0].degree

    def key(self) -> Tuple[int, ...]:
        """Flattened image vector used for hashing and membership."""
        return self._key

    def is_isotopism(self) -> bool:
        return self.role.is_identity()

    def is_automorphism(self) -> bool:
        f1, f2, f3 = self.components
        return self.is_isotopism() and f1 == f2 == f3

    def is_identity(self) -> bool:
        return self.is_isotopism() and all(f.is_identity() for f in self.components)

    def apply(self, e: Sequence[int]) -> Entry:
        """Map an entry (row, col, sym) to its image."""
        role = self.role.images
        f = self.components
        return Entry(*(f[role[k]](e[role[k]]) for k in range(3)))

    __call__ = apply

    def compose(self, inner: "Paratopism") -> "Paratopism":
        """
        Return the product self * inner, applying inner first.

        With self = (g; rho) and inner = (f; pi) the product is
        (h; pi rho) where h[m] = g[pi^-1(m)] f[m].

        Raises:
            PreconditionError: If the orders differ
        """
        if inner.order != self.order:
            raise PreconditionError(f"order mismatch: {self.order} vs {inner.order}")
        pi_inverse = inner.role.inverse()
        components = [self.components[pi_inverse(m)] * inner.components[m] for m in range(3)]
        return Paratopism(components, inner.role * self.role)

    def __mul__(self, other: "Paratopism") -> "Paratopism":
        if not isinstance(other, Paratopism):
            return NotImplemented
        return self.compose(other)

    def inverse(self) -> "Paratopism":
        role = self.role
        components = [self.components[role(m)].inverse() for m in range(3)]
        return Paratopism(components, role.inverse())

    def __pow__(self, exponent: int) -> "Paratopism":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Paratopism.identity(self.order)
        for _ in range(exponent):
            result = self * result
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Paratopism):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __str__(self) -> str:
        return format_paratopism(self)

    def __repr__(self) -> str:
        return f"Paratopism({format_paratopism(self)})"


def is_autoparatopism(th: Paratopism, l: PartialLatinSquare) -> bool:
    """
    Check whether a paratopism maps the entries of l into Ent(l).

    Args:
        th: Paratopism of the same order as l
        l: Square whose entry set must be preserved

    Returns:
        True if every image of an entry of l is an entry of l
    """
    if th.order != l.order:
        raise PreconditionError(f"order mismatch: {th.order} vs {l.order}")
    return all(l.contains(th.apply(e)) for e in l.entries)


def is_paratopism(th: Paratopism, source: PartialLatinSquare, target: PartialLatinSquare) -> bool:
    """Check whether th maps Ent(source) onto Ent(target)."""
    if not th.order == source.order == target.order:
        raise PreconditionError("source, target and paratopism must share one order")
    return frozenset(th.apply(e) for e in source.entries) == target.entries


def format_paratopism(th: Paratopism) -> str:
    """
    Render a paratopism as "(f1,f2,f3;pi)".

    The role part is left out for isotopisms, and the role permutation is
    printed 1-based.
    """
    body = ",".join(str(f) for f in th.components)
    if th.role.is_identity():
        return f"({body})"
    return f"({body};{th.role})"


def _split_top_level(text: str) -> List[str]:
    """Split on commas and semicolons outside brackets and parentheses."""
    parts, depth, current = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch in ",;" and depth == 0:
            parts.append("".join(current).strip())
            current = []
            continue
        current.append(ch)
    parts.append("".join(current).strip())
    return parts


def _outer_body(text: str) -> str:
    """Return the text inside a single enclosing pair of parentheses, or ''."""
    if not (text.startswith("(") and text.endswith(")")):
        return ""
    depth = 0
    for position, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0 and position != len(text) - 1:
                return ""
    return text[1:-1]


def parse_paratopism(text: str, n: int) -> Paratopism:
    """
    Parse a paratopism of order n.

    Accepted forms:
        - "(f1,f2,f3;pi)" or "(f1,f2,f3)" with each part in cycle notation,
          "Id" or an image array
        - a JSON object {"f1": .., "f2": .., "f3": .., "pi": ..}
        - a single permutation, read as the automorphism (f, f, f)

    Raises:
        ParseError: On malformed text
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            payload = json.loads(stripped)
            parts = [payload["f1"], payload["f2"], payload["f3"]]
            role = payload.get("pi", IDENTITY_TOKEN)
        except (json.JSONDecodeError, KeyError, TypeError) as e:
            raise ParseError(f"bad paratopism JSON: {e}")
        texts = [value if isinstance(value, str) else json.dumps(value) for value in parts + [role]]
        components = [Permutation.parse(part, n) for part in texts[:3]]
        return Paratopism(components, RolePerm.parse(texts[3]))

    body = _outer_body(stripped)
    parts = _split_top_level(body) if body else []
    if len(parts) in (3, 4):
        components = [Permutation.parse(part, n) for part in parts[:3]]
        role = RolePerm.parse(parts[3]) if len(parts) == 4 else RolePerm.identity()
        return Paratopism(components, role)
    return Paratopism.automorphism(Permutation.parse(stripped, n))


def parse_generators(text: str, n: int, source: str = "<string>") -> List[Paratopism]:
    """
    Parse a generator file: one paratopism per line, '#' starts a comment.

    Raises:
        ParseError: Naming the file and line of the first bad generator
    """
    generators = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            generators.append(parse_paratopism(line, n))
        except (ParseError, PreconditionError) as e:
            raise ParseError(e.message, location=f"{source}:{number}")
    if not generators:
        raise ParseError("no generators found", location=source)
    return generators


def automorphisms(perms: Iterable[Permutation]) -> List[Paratopism]:
    """Lift permutations to automorphisms (f, f, f)."""
    return [Paratopism.automorphism(f) for f in perms]

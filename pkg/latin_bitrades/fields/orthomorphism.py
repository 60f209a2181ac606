"""
Orthomorphism Module

This module builds the Latin square L(theta) of a quadratic orthomorphism
of GF(q), q an odd prime, and the trades of size mq it contains.
"""

from math import gcd
from typing import List, NamedTuple, Optional

from latin_bitrades.core.partial_latin_square import Entry, PartialLatinSquare
from latin_bitrades.fields.finite_field import FieldCtx
from latin_bitrades.groups.paratopism import Paratopism, is_autoparatopism
from latin_bitrades.groups.paratopism_group import ParatopismGroup, closure
from latin_bitrades.groups.permutation import Permutation
from latin_bitrades.trades.trade_engine import (
    Construction,
    Tau,
    construct,
    construct_bitrade,
    find_tau,
    orbit_partition,
)
from latin_bitrades.utils.errors import ConsistencyError, PreconditionError
from latin_bitrades.utils.logger import get_logger

logger = get_logger(__name__)


class QuadraticOrthomorphism(NamedTuple):
    """theta(x) = ax on non-zero squares, bx on non-squares, theta(0) = 0."""

    field: FieldCtx
    a: int
    b: int
    theta: Permutation


class OrthoTrade(NamedTuple):
    """A construction in L(theta) with its disjoint copies."""

    construction: Construction
    m: int
    copies: List[frozenset]
    orbit_sizes: List[int]


def _require_odd_prime_field(f: FieldCtx) -> None:
    if f.kind != "prime" or f.size == 2:
        raise PreconditionError(f"quadratic orthomorphisms need an odd prime field, got {f.name}")


def check_quadratic_constants(f: FieldCtx, a: int, b: int) -> bool:
    """
    Check that ab and (a-1)(b-1) are non-zero squares.

    Raises:
        PreconditionError: If a or b is zero or the field is not an odd
            prime field
    """
    _require_odd_prime_field(f)
    if a % f.size == 0 or b % f.size == 0:
        raise PreconditionError("a and b must be non-zero")
    a, b = a % f.size, b % f.size
    product = f.mul(a, b)
    shifted = f.mul(f.sub(a, 1), f.sub(b, 1))
    return f.is_square(product) and f.is_square(shifted)


def quadratic_orthomorphism(f: FieldCtx, a: int, b: int) -> QuadraticOrthomorphism:
    """
    Build theta and verify the orthomorphism property by scanning.

    Raises:
        PreconditionError: If the constants fail check_quadratic_constants
        ConsistencyError: If theta or x -> theta(x) - x is not a bijection
    """
    if not check_quadratic_constants(f, a, b):
        raise PreconditionError(f"ab and (a-1)(b-1) are not both non-zero squares for a={a}, b={b}")
    a, b = a % f.size, b % f.size

    def theta(x: int) -> int:
        if x == 0:
            return 0
        return f.mul(a if f.is_square(x) else b, x)

    images = [theta(x) for x in f.elements]
    differences = [f.sub(images[x], x) for x in f.elements]
    if sorted(images) != list(f.elements) or sorted(differences) != list(f.elements):
        raise ConsistencyError(f"theta for a={a}, b={b} is not an orthomorphism")
    return QuadraticOrthomorphism(f, a, b, Permutation(images))


def l_theta(ortho: QuadraticOrthomorphism) -> PartialLatinSquare:
    """The square with entries (i, j, theta(j - i) + i)."""
    f = ortho.field
    return PartialLatinSquare.from_table(
        [[f.add(ortho.theta(f.sub(j, i)), i) for j in f.elements] for i in f.elements]
    )


def affine_map(f: FieldCtx, g: int, h: int) -> Paratopism:
    """The automorphism x -> gx + h."""
    return Paratopism.automorphism(Permutation.from_function(f.size, lambda x: f.add(f.mul(g, x), h)))


def affine_automorphisms(ortho: QuadraticOrthomorphism) -> ParatopismGroup:
    """
    Scan every x -> gx + h and keep the automorphisms of L(theta).

    Only multipliers g that are squares survive, so the group has order
    q(q-1)/2.
    """
    f = ortho.field
    square = l_theta(ortho)
    kept = []
    for g in range(1, f.size):
        for h in f.elements:
            candidate = affine_map(f, g, h)
            if is_autoparatopism(candidate, square):
                kept.append(candidate)
    logger.info(f"Found {len(kept)} affine automorphisms of L(theta) over {f.name}")
    return ParatopismGroup(kept)


def multiplier_order(f: FieldCtx, a: int, b: int) -> int:
    """Order m of the multiplicative subgroup generated by b/a and (b-1)/(a-1)."""
    first = f.log[f.div(b, a)]
    second = f.log[f.div(f.sub(b, 1), f.sub(a, 1))]
    n = f.multiplicative_order
    return n // gcd(gcd(first, second), n)


def ortho_trade(f: FieldCtx, a: int, b: int, minimality_nodes: Optional[int] = None) -> OrthoTrade:
    """
    Build the trade of size mq in L(theta) and its (q-1)/m disjoint copies.

    The group is generated by alpha(x) = bx/a and
    alpha_bar(x) = (b-1)(x-1)/(a-1) + 1, with tau = ((0, 1, a), alpha, alpha_bar).

    Args:
        f: Odd prime field
        a, b: Distinct constants passing check_quadratic_constants
        minimality_nodes: Budget for the minimality search; skipped when None

    Returns:
        The construction, m, the copies and the orbit sizes on Ent(L(theta))

    Raises:
        PreconditionError: If a = b or the constants fail
        ConsistencyError: If the copies do not match the predicted count
    """
    if a % f.size == b % f.size:
        raise PreconditionError("a and b must differ")
    ortho = quadratic_orthomorphism(f, a, b)
    a, b = ortho.a, ortho.b
    square = l_theta(ortho)

    ratio = f.div(b, a)
    shifted = f.div(f.sub(b, 1), f.sub(a, 1))
    alpha = affine_map(f, ratio, 0)
    alpha_bar = affine_map(f, shifted, f.sub(1, shifted))
    group = closure([alpha, alpha_bar], square)
    tau = Tau(Entry(0, 1, a), alpha, alpha_bar)
    built = construct(square, group, tau, minimality_nodes)

    m = multiplier_order(f, a, b)
    q = f.size
    if built.bitrade.size != m * q:
        raise ConsistencyError(f"trade size {built.bitrade.size} differs from mq = {m * q}")

    orbits = orbit_partition(group, square.entries)
    copies = [o for o in orbits if len(o) == m * q and not any(e.row == e.col for e in o)]
    if len(copies) != (q - 1) // m:
        raise ConsistencyError(f"found {len(copies)} disjoint copies, expected {(q - 1) // m}")
    for copy in copies:
        mates = find_tau(group, min(copy), limit=1)
        if not mates or construct_bitrade(square, group, mates[0]).t.entries != copy:
            raise ConsistencyError(f"the orbit of {tuple(min(copy))} is not a trade")

    built.report.extras.update({"m": str(m), "copies": str(len(copies))})
    sizes = sorted((len(o) for o in orbits), reverse=True)
    logger.info(f"L(theta) over {f.name} splits into orbits of sizes {sizes}")
    return OrthoTrade(built, m, copies, sizes)

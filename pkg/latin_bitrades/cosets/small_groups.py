"""
Small Groups Module

This module builds the Cayley tables of every group of order at most 16
(42 groups up to isomorphism) from cyclic, direct, semidirect and
dicyclic constructions.
"""

from functools import lru_cache
from typing import Callable, Dict, List, Sequence

from latin_bitrades.cosets.group_table import FiniteGroupTable
from latin_bitrades.utils.errors import PreconditionError


def cyclic(n: int) -> FiniteGroupTable:
    """Z_n under addition."""
    return FiniteGroupTable([[(i + j) % n for j in range(n)] for i in range(n)], name=f"Z{n}")


def direct_product(g: FiniteGroupTable, h: FiniteGroupTable, name: str = None) -> FiniteGroupTable:
    """G x H with (g, h) stored at index g * |H| + h."""
    m = h.order
    size = g.order * m
    table = [
        [g.mul(x // m, y // m) * m + h.mul(x % m, y % m) for y in range(size)]
        for x in range(size)
    ]
    return FiniteGroupTable(table, name=name or f"{g.name}x{h.name}")


def semidirect_product(
    normal: FiniteGroupTable,
    m: int,
    phi: Sequence[int],
    name: str = None,
) -> FiniteGroupTable:
    """
    N x| Z_m where the generator of Z_m acts on N by the automorphism phi.

    The pair (x, k) is stored at index x + |N| * k and multiplies as
    (x1, k1)(x2, k2) = (x1 * phi^k1(x2), k1 + k2).

    Args:
        normal: The normal subgroup N
        m: Order of the acting cyclic group
        phi: Images of the automorphism on the indices of N
        name: Display name

    Raises:
        PreconditionError: If phi is not an automorphism of N or phi^m is
            not the identity
    """
    n = normal.order
    phi = list(phi)
    if sorted(phi) != list(range(n)):
        raise PreconditionError("phi is not a bijection of N")
    for x in range(n):
        for y in range(n):
            if phi[normal.mul(x, y)] != normal.mul(phi[x], phi[y]):
                raise PreconditionError(f"phi does not respect the product of {x} and {y}")

    powers = [list(range(n))]
    for _ in range(m):
        powers.append([phi[v] for v in powers[-1]])
    if powers[m] != powers[0]:
        raise PreconditionError(f"phi^{m} is not the identity")

    size = n * m
    table = []
    for left in range(size):
        x1, k1 = left % n, left // n
        row = []
        for right in range(size):
            x2, k2 = right % n, right // n
            row.append(normal.mul(x1, powers[k1][x2]) + n * ((k1 + k2) % m))
        table.append(row)
    return FiniteGroupTable(table, name=name or f"{normal.name}:Z{m}")


def cyclic_action(n: int, r: int) -> List[int]:
    """The automorphism x -> r x of Z_n."""
    return [(r * x) % n for x in range(n)]


def dicyclic(n: int) -> FiniteGroupTable:
    """
    The dicyclic group of order 4n, generated by a of order 2n and x with
    x^2 = a^n and x a x^-1 = a^-1. Element a^k x^j sits at index k + 2n j.
    """
    half = 2 * n

    def product(left: int, right: int) -> int:
        k1, j1 = left % half, left // half
        k2, j2 = right % half, right // half
        if j1 == 0:
            return (k1 + k2) % half + half * j2
        if j2 == 0:
            return (k1 - k2) % half + half
        return (k1 - k2 + n) % half

    size = 4 * n
    return FiniteGroupTable(
        [[product(i, j) for j in range(size)] for i in range(size)],
        name="Q8" if n == 2 else f"Dic{n}",
    )


def dihedral(n: int) -> FiniteGroupTable:
    """Dihedral group of order 2n as Z_n x| Z_2 acting by inversion."""
    return semidirect_product(cyclic(n), 2, cyclic_action(n, n - 1), name=f"D{n}")


def _elementary(k: int) -> FiniteGroupTable:
    group = cyclic(2)
    for _ in range(k - 1):
        group = direct_product(group, cyclic(2))
    return group


def _pauli() -> FiniteGroupTable:
    # (k, a) in Z4 x Z2 at index 2k + a; the twist sends (k, a) to (k + 2a, a)
    base = direct_product(cyclic(4), cyclic(2))
    phi = [2 * ((k + 2 * a) % 4) + a for k in range(4) for a in range(2)]
    return semidirect_product(base, 2, phi, name="Pauli")


def _z2_squared_by_z4() -> FiniteGroupTable:
    base = _elementary(2)
    # Swap the two coordinates of Z2 x Z2 (indices 1 and 2)
    return semidirect_product(base, 4, [0, 2, 1, 3], name="Z2^2:Z4")


def _a4() -> FiniteGroupTable:
    return semidirect_product(_elementary(2), 3, [0, 2, 3, 1], name="A4")


SMALL_GROUP_BUILDERS: Dict[str, Callable[[], FiniteGroupTable]] = {
    "Z1": lambda: cyclic(1),
    "Z2": lambda: cyclic(2),
    "Z3": lambda: cyclic(3),
    "Z4": lambda: cyclic(4),
    "Z2^2": lambda: _elementary(2),
    "Z5": lambda: cyclic(5),
    "Z6": lambda: cyclic(6),
    "S3": lambda: dihedral(3),
    "Z7": lambda: cyclic(7),
    "Z8": lambda: cyclic(8),
    "Z4xZ2": lambda: direct_product(cyclic(4), cyclic(2)),
    "Z2^3": lambda: _elementary(3),
    "D4": lambda: dihedral(4),
    "Q8": lambda: dicyclic(2),
    "Z9": lambda: cyclic(9),
    "Z3^2": lambda: direct_product(cyclic(3), cyclic(3)),
    "Z10": lambda: cyclic(10),
    "D5": lambda: dihedral(5),
    "Z11": lambda: cyclic(11),
    "Z12": lambda: cyclic(12),
    "Z6xZ2": lambda: direct_product(cyclic(6), cyclic(2)),
    "D6": lambda: dihedral(6),
    "A4": _a4,
    "Dic3": lambda: semidirect_product(cyclic(3), 4, cyclic_action(3, 2), name="Dic3"),
    "Z13": lambda: cyclic(13),
    "Z14": lambda: cyclic(14),
    "D7": lambda: dihedral(7),
    "Z15": lambda: cyclic(15),
    "Z16": lambda: cyclic(16),
    "Z8xZ2": lambda: direct_product(cyclic(8), cyclic(2)),
    "Z4xZ4": lambda: direct_product(cyclic(4), cyclic(4)),
    "Z4xZ2^2": lambda: direct_product(cyclic(4), _elementary(2)),
    "Z2^4": lambda: _elementary(4),
    "D8": lambda: dihedral(8),
    "SD16": lambda: semidirect_product(cyclic(8), 2, cyclic_action(8, 3), name="SD16"),
    "M16": lambda: semidirect_product(cyclic(8), 2, cyclic_action(8, 5), name="M16"),
    "Q16": lambda: dicyclic(4),
    "Z4:Z4": lambda: semidirect_product(cyclic(4), 4, cyclic_action(4, 3), name="Z4:Z4"),
    "D4xZ2": lambda: direct_product(dihedral(4), cyclic(2)),
    "Q8xZ2": lambda: direct_product(dicyclic(2), cyclic(2)),
    "Pauli": _pauli,
    "Z2^2:Z4": _z2_squared_by_z4,
}


@lru_cache(maxsize=None)
def small_group(name: str) -> FiniteGroupTable:
    """
    Return a library group by name.

    Raises:
        ValueError: If the name is unknown
    """
    builder = SMALL_GROUP_BUILDERS.get(name)
    if builder is None:
        raise ValueError(f"Unknown small group: {name}. Known groups: {', '.join(SMALL_GROUP_BUILDERS)}")
    group = builder()
    group.name = name
    return group


def small_groups(max_order: int = 16) -> List[FiniteGroupTable]:
    """All library groups of order at most max_order, in library order."""
    return [g for g in (small_group(name) for name in SMALL_GROUP_BUILDERS) if g.order <= max_order]

"""
Coset Construction Module

This module builds the bitrade whose entries are the coset triples
(gA, gB, gC) and (gA, gB, ga^-1 C) of three cyclic subgroups of a finite
group, where abc = 1.
"""

from typing import Dict, FrozenSet, List, NamedTuple

from latin_bitrades.core.partial_latin_square import Bitrade
from latin_bitrades.core.verifiers import verify_bitrade
from latin_bitrades.cosets.group_table import FiniteGroupTable
from latin_bitrades.models import CdhCheck, CdhReport
from latin_bitrades.utils.errors import ConsistencyError, PreconditionError
from latin_bitrades.utils.logger import get_logger

logger = get_logger(__name__)


class CosetBitrade(NamedTuple):
    """A coset-constructed bitrade with its coset partitions."""

    bitrade: Bitrade
    row_cosets: List[FrozenSet[int]]
    col_cosets: List[FrozenSet[int]]
    sym_cosets: List[FrozenSet[int]]
    report: CdhReport


def cdh_check(g: FiniteGroupTable, a: int, b: int, c: int) -> CdhCheck:
    """
    Check abc = 1 and the pairwise trivial intersections of <a>, <b>, <c>.

    Args:
        g: Group
        a, b, c: Element indices

    Returns:
        Per-condition result

    Raises:
        PreconditionError: If an index is out of range or the identity
    """
    for name, x in (("a", a), ("b", b), ("c", c)):
        if not 0 <= x < g.order:
            raise PreconditionError(f"{name}={x} is not an element of a group of order {g.order}")
        if x == 0:
            raise PreconditionError(f"{name} is the identity; a, b and c must be non-identity elements")

    sub_a, sub_b, sub_c = (g.cyclic_subgroup(x) for x in (a, b, c))
    return CdhCheck(
        g1=g.mul(g.mul(a, b), c) == 0,
        g2_ab=len(sub_a & sub_b) == 1,
        g2_ac=len(sub_a & sub_c) == 1,
        g2_bc=len(sub_b & sub_c) == 1,
    )


def _labels(g: FiniteGroupTable, subgroup: FrozenSet[int]) -> Dict[int, int]:
    """Map each element g to the least member of gH."""
    labels = {}
    for coset in g.coset_partition(subgroup):
        label = min(coset)
        for member in coset:
            labels[member] = label
    return labels


def cdh_bitrade(g: FiniteGroupTable, a: int, b: int, c: int) -> CosetBitrade:
    """
    Build the coset bitrade of (g, a, b, c).

    Cosets are labelled by their least element, so the bitrade lives in a
    square of order |g|.

    Args:
        g: Group
        a, b, c: Non-identity elements with abc = 1 and pairwise trivially
            intersecting cyclic subgroups

    Returns:
        The bitrade, the three coset partitions and the report

    Raises:
        PreconditionError: If a condition fails
        ConsistencyError: If the output is not a bitrade
    """
    check = cdh_check(g, a, b, c)
    if not check.valid:
        raise PreconditionError(", ".join(f"{name} failed" for name in check.failed_conditions()))

    sub_a, sub_b, sub_c = (g.cyclic_subgroup(x) for x in (a, b, c))
    row_of, col_of, sym_of = _labels(g, sub_a), _labels(g, sub_b), _labels(g, sub_c)
    a_inverse = g.inv(a)

    trade, mate = [], []
    for x in range(g.order):
        trade.append((row_of[x], col_of[x], sym_of[x]))
        mate.append((row_of[x], col_of[x], sym_of[g.mul(x, a_inverse)]))

    try:
        bitrade = Bitrade.from_entries(g.order, trade, mate)
    except PreconditionError as e:
        raise ConsistencyError(f"coset triples do not form partial Latin squares: {e.message}")
    if not verify_bitrade(bitrade) or bitrade.size != g.order:
        raise ConsistencyError(f"coset construction on {g.name} did not yield a bitrade of size {g.order}")

    conjugate = frozenset(g.mul(g.mul(a, x), a_inverse) for x in sub_c)
    report = CdhReport(
        size=bitrade.size,
        rows=g.order // len(sub_a),
        cols=g.order // len(sub_b),
        symbols=g.order // len(sub_c),
        per_row=len(sub_a),
        per_col=len(sub_b),
        per_sym=len(sub_c),
        primary_condition=len(g.generated_subgroup([a, b, c])) == g.order,
        orthogonal_condition=len(sub_c & conjugate) == 1,
    )
    logger.info(f"Coset bitrade of size {bitrade.size} on {g.name} with a={a}, b={b}, c={c}")
    return CosetBitrade(
        bitrade,
        g.coset_partition(sub_a),
        g.coset_partition(sub_b),
        g.coset_partition(sub_c),
        report,
    )


def valid_triples(g: FiniteGroupTable):
    """Yield every (a, b, c) of non-identity elements passing cdh_check."""
    for a in range(1, g.order):
        for b in range(1, g.order):
            c = g.inv(g.mul(a, b))
            if c == 0:
                continue
            if cdh_check(g, a, b, c).valid:
                yield a, b, c

"""
Isotopy Bridge Module

This module relates an orbit bitrade built from a group of automorphisms
to the coset bitrade of the same abstract group, and certifies that the
map g(e) -> (gA, gB, gC) carries one onto the other class by class.
"""

from collections import defaultdict
from typing import Dict, FrozenSet, Iterable, List, Tuple

from latin_bitrades.core.partial_latin_square import PartialLatinSquare
from latin_bitrades.cosets.cdh import cdh_bitrade, cdh_check
from latin_bitrades.cosets.group_table import FiniteGroupTable
from latin_bitrades.groups.paratopism_group import ParatopismGroup, stab
from latin_bitrades.models import BridgeCertificate
from latin_bitrades.trades.trade_engine import Tau, check_tau, construct_bitrade, displaced_entry
from latin_bitrades.utils.errors import PreconditionError
from latin_bitrades.utils.logger import get_logger

logger = get_logger(__name__)

Pair = Tuple[Tuple[int, int, int], Tuple[int, int, int]]


def _classes_preserved(pairs: Iterable[Pair], coordinate: int) -> bool:
    """Check that sharing a coordinate is preserved in both directions."""
    forward: Dict[int, set] = defaultdict(set)
    backward: Dict[int, set] = defaultdict(set)
    for source, target in pairs:
        forward[source[coordinate]].add(target[coordinate])
        backward[target[coordinate]].add(source[coordinate])
    return all(len(v) == 1 for v in forward.values()) and all(len(v) == 1 for v in backward.values())


def isotopy_bridge(l: PartialLatinSquare, g: ParatopismGroup, tau: Tau) -> BridgeCertificate:
    """
    Certify the isotopy between the orbit bitrade of (g, tau) and the coset
    bitrade with a = alpha^-1, b = alpha_bar and c = alpha_bar^-1 alpha.

    Args:
        l: Ambient Latin square
        g: Group of automorphisms of l
        tau: (e, alpha, alpha_bar)

    Returns:
        The certificate with both entry maps

    Raises:
        PreconditionError: If g holds a non-automorphism, or naming every
            failed condition among C1'-C3' and B1-B4
    """
    for x in g:
        if not x.is_automorphism():
            raise PreconditionError(f"{x} is not an automorphism")

    table = FiniteGroupTable.from_paratopism_group(g)
    alpha, alpha_bar = tau.theta, tau.theta_bar
    a = g.position(alpha.inverse())
    b = g.position(alpha_bar)
    c = g.position(alpha_bar.inverse() * alpha)

    check = check_tau(g, tau)

    def positions(group: ParatopismGroup) -> FrozenSet[int]:
        return frozenset(g.position(x) for x in group)

    conditions = {
        "C1'": check.c1,
        "C2'": check.c2,
        "C3'": check.c3,
        "B1": positions(stab(g, tau.e, "row")) == table.cyclic_subgroup(a),
        "B2": positions(stab(g, tau.e, "col")) == table.cyclic_subgroup(b),
        "B3": positions(stab(g, tau.e, "sym")) == table.cyclic_subgroup(c),
        "B4": len(table.cyclic_subgroup(a) & table.cyclic_subgroup(b)) == 1,
    }
    failed = [name for name, ok in conditions.items() if not ok]
    if failed:
        raise PreconditionError(", ".join(f"{name} failed" for name in failed))

    coset_check = cdh_check(table, a, b, c)
    if not coset_check.valid:
        raise PreconditionError(", ".join(f"{name} failed" for name in coset_check.failed_conditions()))

    orbit_bitrade = construct_bitrade(l, g, tau)
    coset = cdh_bitrade(table, a, b, c)
    d = displaced_entry(tau)

    theta: List[Pair] = []
    theta_mate: List[Pair] = []
    trade_entries = coset.bitrade.t.symbol_lookup()
    mate_entries = coset.bitrade.t_mate.symbol_lookup()
    row_label = {m: min(coset_set) for coset_set in coset.row_cosets for m in coset_set}
    col_label = {m: min(coset_set) for coset_set in coset.col_cosets for m in coset_set}
    for index, x in enumerate(g):
        cell = (row_label[index], col_label[index])
        theta.append((tuple(x.apply(tau.e)), cell + (trade_entries[cell],)))
        theta_mate.append((tuple(x.apply(d)), cell + (mate_entries[cell],)))

    preserved = {}
    for component, pairs, source, target in (
        ("t", theta, orbit_bitrade.t, coset.bitrade.t),
        ("t_mate", theta_mate, orbit_bitrade.t_mate, coset.bitrade.t_mate),
    ):
        onto = {p[0] for p in pairs} == set(map(tuple, source.entries)) and {p[1] for p in pairs} == set(
            map(tuple, target.entries)
        )
        injective = len({p[0] for p in pairs}) == len(pairs)
        preserved[f"{component}.bijective"] = onto and injective
        for coordinate, name in enumerate(("row", "col", "sym")):
            preserved[f"{component}.{name}"] = _classes_preserved(pairs, coordinate)

    certificate = BridgeCertificate(
        conditions=conditions,
        a=a,
        b=b,
        c=c,
        size=orbit_bitrade.size,
        theta=sorted(theta),
        theta_mate=sorted(theta_mate),
        preserved=preserved,
    )
    logger.info(f"Isotopy bridge {'validated' if certificate.valid else 'failed'} on a group of order {len(g)}")
    return certificate

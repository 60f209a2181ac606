"""
Trade Engine Module

This module builds Latin bitrades as orbits of an autoparatopism group and
predicts their sizes, homogeneity, orthogonality and block behaviour from
stabilizer orders.
"""

import json
from typing import FrozenSet, Iterable, List, NamedTuple, Optional, Sequence

from latin_bitrades.core.partial_latin_square import Bitrade, Entry, PartialLatinSquare
from latin_bitrades.core.search import is_minimal
from latin_bitrades.core.verifiers import homogeneity, is_orthogonal_direct, verify_bitrade
from latin_bitrades.groups.paratopism import Paratopism, is_autoparatopism, parse_paratopism
from latin_bitrades.groups.paratopism_group import (
    ParatopismGroup,
    is_entry_transitive,
    orbit,
    orbits_of,
    stab,
    stabilizer_orders,
)
from latin_bitrades.models import BlockVerdict, CountPrediction, TauCheck, TradeReport
from latin_bitrades.utils.errors import ConsistencyError, ParseError, PreconditionError
from latin_bitrades.utils.logger import get_logger

logger = get_logger(__name__)

BLOCK_METHODS = ("algebraic", "direct", "both")


class Tau(NamedTuple):
    """An entry e with the two group elements theta and theta_bar."""

    e: Entry
    theta: Paratopism
    theta_bar: Paratopism


class Construction(NamedTuple):
    """Everything a factory produces for one bitrade."""

    square: PartialLatinSquare
    group: ParatopismGroup
    tau: Tau
    bitrade: Bitrade
    report: TradeReport


def displaced_entry(tau: Tau) -> Entry:
    """Return (e1, e2, s) where s is the symbol of theta(e)."""
    e = tau.e
    return Entry(e[0], e[1], tau.theta.apply(e)[2])


def parse_tau(text: str, n: int, source: str = "<string>") -> Tau:
    """
    Parse a triple file {"e": [r, c, s], "theta": .., "theta_bar": ..}.

    theta and theta_bar take any form parse_paratopism accepts, either as a
    string or as a nested JSON object.

    Raises:
        ParseError: On invalid JSON, missing keys or a bad paratopism
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", location=f"{source}:{e.lineno}")

    try:
        e = Entry(*(int(v) for v in payload["e"]))
        raw = [payload["theta"], payload["theta_bar"]]
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"malformed triple: {e}", location=source)

    elements = []
    for key, value in zip(("theta", "theta_bar"), raw):
        value = value if isinstance(value, str) else json.dumps(value)
        try:
            elements.append(parse_paratopism(value, n))
        except (ParseError, PreconditionError) as error:
            raise ParseError(f"{key}: {error.message}", location=source)
    return Tau(e, elements[0], elements[1])


def _conditions(tau: Tau) -> TauCheck:
    e = tau.e
    moved = tau.theta.apply(e)
    c3_image = tau.theta_bar.inverse().apply(moved)
    return TauCheck(
        c1=moved[0] == e[0] and moved[1] != e[1],
        c2=tau.theta_bar.apply(e)[1] == e[1],
        c3=c3_image[2] == e[2],
    )


def check_tau(g: ParatopismGroup, tau: Tau) -> TauCheck:
    """
    Evaluate conditions C1, C2 and C3 on a triple.

    Args:
        g: Group containing theta and theta_bar
        tau: The triple (e, theta, theta_bar)

    Returns:
        Per-condition result

    Raises:
        PreconditionError: If theta or theta_bar is not in g
    """
    g.position(tau.theta)
    g.position(tau.theta_bar)
    result = _conditions(tau)
    logger.debug(f"Tau conditions at {tuple(tau.e)}: C1={result.c1} C2={result.c2} C3={result.c3}")
    return result


def find_tau(g: ParatopismGroup, e: Sequence[int], limit: Optional[int] = None) -> List[Tau]:
    """
    Enumerate every (theta, theta_bar) in g x g satisfying C1-C3 at e.

    Pairs come in (theta index, theta_bar index) order of the group.

    Args:
        g: Group
        e: Entry
        limit: Stop after this many triples when given

    Returns:
        The valid triples, possibly empty
    """
    e = Entry(*e)
    row_only = []
    for x in g:
        image = x.apply(e)
        if image[0] == e[0] and image[1] != e[1]:
            row_only.append((x, image))
    col_fixers = [(y, y.inverse()) for y in g if y.apply(e)[1] == e[1]]

    found = []
    for theta, moved in row_only:
        for theta_bar, theta_bar_inverse in col_fixers:
            if theta_bar_inverse.apply(moved)[2] == e[2]:
                found.append(Tau(e, theta, theta_bar))
                if limit is not None and len(found) >= limit:
                    return found
    logger.debug(f"Found {len(found)} valid triples at {tuple(e)}")
    return found


def _require_preserves(l: PartialLatinSquare, g: ParatopismGroup) -> None:
    for x in g.generators or g.elements:
        if not is_autoparatopism(x, l):
            raise PreconditionError(f"{x} is not an autoparatopism of the square")


def construct_bitrade(l: PartialLatinSquare, g: ParatopismGroup, tau: Tau) -> Bitrade:
    """
    Build the bitrade (orbit of e, orbit of the displaced entry).

    Args:
        l: Ambient Latin square
        g: Group of autoparatopisms of l
        tau: Triple passing C1-C3

    Returns:
        The verified bitrade

    Raises:
        PreconditionError: If tau fails a condition, e is not an entry of l
            or g does not preserve l
        ConsistencyError: If the orbits do not form a bitrade
    """
    check = check_tau(g, tau)
    if not check.valid:
        raise PreconditionError(", ".join(f"{name} failed" for name in check.failed_conditions()))
    if not l.contains(tau.e):
        raise PreconditionError(f"{tuple(tau.e)} is not an entry of the square")
    _require_preserves(l, g)

    try:
        bitrade = Bitrade.from_entries(l.order, orbit(g, tau.e), orbit(g, displaced_entry(tau)))
    except PreconditionError as e:
        raise ConsistencyError(f"orbit of the displaced entry is not a partial Latin square: {e.message}")
    if not verify_bitrade(bitrade):
        raise ConsistencyError("the constructed orbits do not form a bitrade")

    logger.info(f"Constructed a bitrade of size {bitrade.size} from a group of order {len(g)}")
    return bitrade


def predict_counts(g: ParatopismGroup, e: Sequence[int]) -> CountPrediction:
    """
    Predict trade size and per-line counts from stabilizer orders.

    Args:
        g: Group
        e: Entry generating the trade

    Returns:
        Sizes derived from |g| and the four stabilizers of e
    """
    orders = stabilizer_orders(g, e)
    full = orders["full"]
    per_row, per_col, per_sym = (orders[kind] // full for kind in ("row", "col", "sym"))
    return CountPrediction(
        trade_size=len(g) // full,
        per_row=per_row,
        per_col=per_col,
        per_sym=per_sym,
        rows=len(g) // orders["row"],
        cols=len(g) // orders["col"],
        symbols=len(g) // orders["sym"],
        k=per_row if per_row == per_col == per_sym else None,
    )


def predict_orthogonal(g: ParatopismGroup, tau: Tau) -> bool:
    """
    Predict orthogonality from stabilizers.

    The bitrade is orthogonal exactly when every element fixing the symbols
    of both e and the displaced entry fixes e itself.
    """
    e = tau.e
    d = displaced_entry(tau)
    for x in g:
        image = x.apply(e)
        if image[2] == e[2] and x.apply(d)[2] == d[2] and image != e:
            logger.debug(f"{x} fixes both symbols but moves {tuple(e)}")
            return False
    return True


def _splitting_witness(x: Paratopism, block: FrozenSet[Entry]):
    images = {o: x.apply(o) for o in block}
    inside = [o for o, image in images.items() if image in block]
    if not inside or len(inside) == len(block):
        return None
    outside = sorted(o for o, image in images.items() if image not in block)
    return outside[0], images[outside[0]]


def is_block(b_group: ParatopismGroup, g: ParatopismGroup, e: Sequence[int], method: str = "both") -> BlockVerdict:
    """
    Decide whether the orbit of e under g is a block for b_group.

    Args:
        b_group: Overgroup B
        g: Subgroup of B
        e: Entry
        method: "algebraic" compares S_B G with G S_B for S_B the stabilizer
            of e in B; "direct" maps the orbit by every element of B;
            "both" runs the two and requires agreement

    Returns:
        The verdict with a splitting witness when the direct test ran

    Raises:
        PreconditionError: If g is not inside b_group or method is unknown
        ConsistencyError: If the two methods disagree
    """
    if method not in BLOCK_METHODS:
        raise PreconditionError(f"unknown block method {method!r}; expected one of {BLOCK_METHODS}")
    if not g.issubset(b_group):
        raise PreconditionError("g is not contained in the overgroup")

    e = Entry(*e)
    verdict = BlockVerdict()
    if method in ("algebraic", "both"):
        stabilizer = stab(b_group, e, "full")
        left = {(s * x).key() for s in stabilizer for x in g}
        right = {(x * s).key() for s in stabilizer for x in g}
        verdict.algebraic = left == right

    if method in ("direct", "both"):
        block = orbit(g, e)
        verdict.direct = True
        for x in b_group:
            split = _splitting_witness(x, block)
            if split is not None:
                verdict.direct = False
                verdict.witness = str(x)
                verdict.witness_entry, verdict.witness_image = (tuple(v) for v in split)
                break

    if verdict.algebraic is not None and verdict.direct is not None and verdict.algebraic != verdict.direct:
        raise ConsistencyError(
            f"block tests disagree: algebraic={verdict.algebraic}, direct={verdict.direct}"
        )
    return verdict


def splits_orbit(x: Paratopism, g: ParatopismGroup, e: Sequence[int]) -> bool:
    """Return True if x maps part, but not all, of the orbit of e back inside it."""
    return _splitting_witness(x, orbit(g, e)) is not None


def orbit_partition(g_ext: ParatopismGroup, entries: Iterable[Sequence[int]]) -> List[FrozenSet[Entry]]:
    """
    Split an entry set closed under g_ext into its orbits.

    Used to pair a trade with its transpose when the group is extended by
    an element swapping the two.
    """
    return orbits_of(g_ext, entries)


def build_report(
    l: PartialLatinSquare,
    g: ParatopismGroup,
    tau: Tau,
    bitrade: Bitrade,
    minimality_nodes: Optional[int] = None,
) -> TradeReport:
    """
    Summarize a constructed bitrade and cross-check the predictions.

    Args:
        l: Ambient square
        g: Constructing group
        tau: Constructing triple
        bitrade: Output of construct_bitrade
        minimality_nodes: Run the minimality search with this budget when given

    Returns:
        The report

    Raises:
        ConsistencyError: If a prediction disagrees with the bitrade
    """
    prediction = predict_counts(g, tau.e)
    if prediction.trade_size != bitrade.size:
        raise ConsistencyError(f"predicted size {prediction.trade_size} but built {bitrade.size}")

    predicted = predict_orthogonal(g, tau)
    direct = is_orthogonal_direct(bitrade)
    if predicted != direct:
        raise ConsistencyError(f"orthogonality predicted {predicted} but found {direct}")

    orders = stabilizer_orders(g, tau.e)
    report = TradeReport(
        size=bitrade.size,
        k=homogeneity(bitrade.t),
        orthogonal_predicted=predicted,
        orthogonal_direct=direct,
        group_order=len(g),
        stab_full=orders["full"],
        stab_row=orders["row"],
        stab_col=orders["col"],
        stab_sym=orders["sym"],
        entry_transitive=is_entry_transitive(g, bitrade.t),
    )
    if minimality_nodes is not None:
        report.minimal = is_minimal(bitrade.t, minimality_nodes).value
    return report


def construct(
    l: PartialLatinSquare,
    g: ParatopismGroup,
    tau: Tau,
    minimality_nodes: Optional[int] = None,
) -> Construction:
    """Run construct_bitrade and build_report together."""
    bitrade = construct_bitrade(l, g, tau)
    return Construction(l, g, tau, bitrade, build_report(l, g, tau, bitrade, minimality_nodes))


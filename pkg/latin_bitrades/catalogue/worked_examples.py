"""
Worked Examples Module

This module rebuilds the seven published worked examples from their
generators and compares each result with the golden text stored next to
this file. The first example prints a composed paratopism; the others print the
overlay grid followed by the trade report.
"""

from pathlib import Path
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple

from latin_bitrades.core.formats import first_overlay_difference, format_overlay
from latin_bitrades.core.partial_latin_square import Entry, PartialLatinSquare
from latin_bitrades.core.search import DEFAULT_SEARCH_NODES
from latin_bitrades.fields.finite_field import make_field
from latin_bitrades.fields.mersenne import (
    mersenne_params,
    mersenne_trade,
    published_relabeling,
    relabel_construction,
)
from latin_bitrades.fields.orthomorphism import ortho_trade
from latin_bitrades.groups.paratopism import Paratopism, is_paratopism, parse_paratopism
from latin_bitrades.groups.paratopism_group import DEFAULT_CLOSURE_CAP, ParatopismGroup, closure
from latin_bitrades.trades.trade_engine import Construction, Tau, construct
from latin_bitrades.utils.errors import ConsistencyError, GoldenMismatchError, PreconditionError
from latin_bitrades.utils.logger import get_logger

logger = get_logger(__name__)

GOLDEN_DIR = Path(__file__).resolve().parent / "golden"
EXAMPLE_IDS: Tuple[int, ...] = (1, 2, 3, 4, 5, 6, 7)

COMPOSITION_SQUARES = {
    "Q": "1 3 0 2/0 2 1 3/2 0 3 1/3 1 2 0",
    "Q'": "0 1 2 3/3 2 1 0/2 3 0 1/1 0 3 2",
    "Q''": "2 3 0 1/3 2 1 0/1 0 3 2/0 1 2 3",
}
COMPOSITION_FIRST = "((01),(123),Id;(123))"
COMPOSITION_SECOND = "((0132),(12),(03);(23))"

ATOP_SQUARE = "0 2 3 1/1 3 2 0/3 1 0 2/2 0 1 3"
ATOP_SQUARE_GENERATORS = ["((0123),(13),(0132))", "((23),(0132),(0213))"]
ATOP_SQUARE_TAU = ("((123),(012),(023))", "((03)(12),Id,(02)(13))")

KLEIN_ATOP_GENERATORS = ["(123)", "((01),(0213),(0312))"]
KLEIN_TAU = ("((123),(013),(013))", "((012),(132),(012))")

XOR8_AUT_GENERATORS = ["(1735)(46)", "(1736452)"]
XOR8_ATOP_GENERATORS = [
    "((0265)(1374),(0573)(1462),(0716)(23))",
    "((0526713),(0361542),(0647251))",
]
XOR8_APAR_GENERATORS = [
    "((0265)(1374),(0573)(1462),(0716)(23);(123))",
    "((0526713),(0361542),(0647251);(12))",
]
XOR8_TAU = (
    "((1643)(27),(0621)(3745),(0621)(3745))",
    "((0674)(1532),(1346)(27),(0674)(1532))",
)

# First two components listed so that the element fixes the column of (0,0,0)
XOR8_PARATOPIC_GENERATORS = [
    "((26)(37),(0642)(1753),(0642)(1753);(12))",
    "((0213)(4657),(0213)(4657),(23)(67))",
    "((04)(15)(26)(37),(05)(14)(36)(27),(01)(23)(45)(67))",
]

ORIGIN = Entry(0, 0, 0)


class WorkedExample(NamedTuple):
    """A rebuilt example with its rendered output."""

    number: int
    title: str
    output: str
    construction: Optional[Construction] = None


def square_from_rows(rows: str) -> PartialLatinSquare:
    """Build a full square from rows separated by "/"."""
    return PartialLatinSquare.from_table([[int(s) for s in row.split()] for row in rows.split("/")])


def xor_square(k: int) -> PartialLatinSquare:
    """Cayley table of ((Z2)^k, +) on the labels 0..2^k - 1."""
    n = 1 << k
    return PartialLatinSquare.from_table([[x ^ y for y in range(n)] for x in range(n)])


def _parse_all(texts: Sequence[str], n: int) -> List[Paratopism]:
    return [parse_paratopism(text, n) for text in texts]


def published_groups() -> Dict[str, Tuple[PartialLatinSquare, List[str]]]:
    """Squares and generator texts of the published overgroups, by name."""
    return {
        "atop-square-atop": (square_from_rows(ATOP_SQUARE), ATOP_SQUARE_GENERATORS),
        "klein-atop": (xor_square(2), KLEIN_ATOP_GENERATORS),
        "xor8-aut": (xor_square(3), XOR8_AUT_GENERATORS),
        "xor8-atop": (xor_square(3), XOR8_ATOP_GENERATORS),
        "xor8-apar": (xor_square(3), XOR8_APAR_GENERATORS),
    }


def published_group(name: str, cap: int = DEFAULT_CLOSURE_CAP) -> Tuple[PartialLatinSquare, ParatopismGroup]:
    """
    Close one of the published overgroups against its square.

    Raises:
        ValueError: If the name is unknown
    """
    groups = published_groups()
    if name not in groups:
        raise ValueError(f"Unsupported group: {name}. Supported groups: {sorted(groups)}")
    square, texts = groups[name]
    return square, closure(_parse_all(texts, square.order), square, cap)


def render_construction(built: Construction) -> str:
    """Overlay grid followed by the report lines."""
    return format_overlay(built.square, built.bitrade) + "\n".join(built.report.to_lines()) + "\n"


def _orbit_example(
    square: PartialLatinSquare,
    generators: Sequence[str],
    tau: Tuple[str, str],
    cap: int,
) -> Construction:
    n = square.order
    group = closure(_parse_all(generators, n), square, cap)
    theta, theta_bar = (parse_paratopism(text, n) for text in tau)
    return construct(square, group, Tau(ORIGIN, theta, theta_bar))


def composition_example(cap: int = DEFAULT_CLOSURE_CAP, search_nodes: int = DEFAULT_SEARCH_NODES) -> WorkedExample:
    """Compose two paratopisms Q -> Q' -> Q'' and print the product."""
    squares = {name: square_from_rows(rows) for name, rows in COMPOSITION_SQUARES.items()}
    first = parse_paratopism(COMPOSITION_FIRST, 4)
    second = parse_paratopism(COMPOSITION_SECOND, 4)
    product = second * first

    for th, source, target in ((first, "Q", "Q'"), (second, "Q'", "Q''"), (product, "Q", "Q''")):
        if not is_paratopism(th, squares[source], squares[target]):
            raise ConsistencyError(f"{th} does not map {source} onto {target}")
    return WorkedExample(1, "composition of paratopisms", f"{product}\n")


def autotopism_example(cap: int = DEFAULT_CLOSURE_CAP, search_nodes: int = DEFAULT_SEARCH_NODES) -> WorkedExample:
    built = _orbit_example(square_from_rows(ATOP_SQUARE), ATOP_SQUARE_TAU, ATOP_SQUARE_TAU, cap)
    return WorkedExample(2, "autotopisms of an order 4 quasigroup", render_construction(built), built)


def klein_example(cap: int = DEFAULT_CLOSURE_CAP, search_nodes: int = DEFAULT_SEARCH_NODES) -> WorkedExample:
    built = _orbit_example(xor_square(2), KLEIN_TAU, KLEIN_TAU, cap)
    return WorkedExample(3, "3-homogeneous orthogonal trade in (Z2)^2", render_construction(built), built)


def xor8_autotopism_example(cap: int = DEFAULT_CLOSURE_CAP, search_nodes: int = DEFAULT_SEARCH_NODES) -> WorkedExample:
    built = _orbit_example(xor_square(3), XOR8_TAU, XOR8_TAU, cap)
    return WorkedExample(4, "4-homogeneous trade in (Z2)^3 from autotopisms", render_construction(built), built)


def xor8_paratopism_example(cap: int = DEFAULT_CLOSURE_CAP, search_nodes: int = DEFAULT_SEARCH_NODES) -> WorkedExample:
    """
    The trade of the subgroup generated by three autoparatopisms of (Z2)^3.

    theta is the product of the first two generators (second applied
    first) and theta_bar the first generator.
    """
    square = xor_square(3)
    theta_1, theta_2, _ = _parse_all(XOR8_PARATOPIC_GENERATORS, square.order)
    group = closure(_parse_all(XOR8_PARATOPIC_GENERATORS, square.order), square, cap)
    built = construct(square, group, Tau(ORIGIN, theta_1 * theta_2, theta_1))
    return WorkedExample(5, "4-homogeneous trade in (Z2)^3 from autoparatopisms", render_construction(built), built)


def mersenne_example(cap: int = DEFAULT_CLOSURE_CAP, search_nodes: int = DEFAULT_SEARCH_NODES) -> WorkedExample:
    """The Mersenne trade of GF(8) in the published labeling, with minimality."""
    params = mersenne_params(3)
    built = relabel_construction(mersenne_trade(params, search_nodes), published_relabeling(params))
    return WorkedExample(6, "Mersenne trade of size 21 in GF(8)", render_construction(built), built)


def orthomorphism_example(cap: int = DEFAULT_CLOSURE_CAP, search_nodes: int = DEFAULT_SEARCH_NODES) -> WorkedExample:
    result = ortho_trade(make_field("prime", 11), 2, 6)
    built = result.construction
    return WorkedExample(7, "quadratic orthomorphism trade in GF(11)", render_construction(built), built)


EXAMPLE_BUILDERS: Dict[int, Callable[..., WorkedExample]] = {
    1: composition_example,
    2: autotopism_example,
    3: klein_example,
    4: xor8_autotopism_example,
    5: xor8_paratopism_example,
    6: mersenne_example,
    7: orthomorphism_example,
}


def build_example(
    number: int,
    cap: int = DEFAULT_CLOSURE_CAP,
    search_nodes: int = DEFAULT_SEARCH_NODES,
) -> WorkedExample:
    """
    Rebuild one worked example.

    Raises:
        PreconditionError: If the number is not 1..7
    """
    if number not in EXAMPLE_BUILDERS:
        raise PreconditionError(f"no worked example {number}; expected one of {list(EXAMPLE_IDS)}")
    logger.info(f"Rebuilding worked example {number}")
    return EXAMPLE_BUILDERS[number](cap=cap, search_nodes=search_nodes)


def golden_path(number: int) -> Path:
    return GOLDEN_DIR / f"example_{number}.txt"


def load_golden(number: int) -> str:
    """Read the stored golden output of an example."""
    path = golden_path(number)
    if not path.exists():
        raise PreconditionError(f"no golden output for example {number} at {path}")
    return path.read_text()


def describe_mismatch(expected: str, actual: str) -> Optional[str]:
    """
    Locate the first difference between a golden text and a rebuilt one.

    Grid lines are compared cell by cell; other lines as a whole.

    Returns:
        A description, or None when the texts are identical
    """
    if expected == actual:
        return None
    expected_lines = expected.splitlines()
    actual_lines = actual.splitlines()
    grid = sum(1 for line in expected_lines if not ("=" in line or line.startswith("(")))
    cell = first_overlay_difference("\n".join(expected_lines[:grid]), "\n".join(actual_lines[:grid]))
    if cell is not None:
        return cell
    for number in range(max(len(expected_lines), len(actual_lines))):
        want = expected_lines[number] if number < len(expected_lines) else "<missing>"
        got = actual_lines[number] if number < len(actual_lines) else "<missing>"
        if want != got:
            return f"line {number + 1}: expected {want!r}, got {got!r}"
    return "trailing whitespace differs"


def check_example(
    number: int,
    cap: int = DEFAULT_CLOSURE_CAP,
    search_nodes: int = DEFAULT_SEARCH_NODES,
) -> WorkedExample:
    """
    Rebuild an example and compare it byte for byte with its golden text.

    Raises:
        GoldenMismatchError: Naming the first differing cell or line
    """
    example = build_example(number, cap, search_nodes)
    problem = describe_mismatch(load_golden(number), example.output)
    if problem is not None:
        logger.warning(f"Example {number} differs from its golden output: {problem}")
        raise GoldenMismatchError(problem, location=f"example {number}")
    return example

"""
Shared fixtures for the test suite.
"""

import pytest

from latin_bitrades.catalogue.worked_examples import (
    ATOP_SQUARE,
    published_group,
    square_from_rows,
    xor_square,
)
from latin_bitrades.core.partial_latin_square import Bitrade, PartialLatinSquare
from latin_bitrades.fields.finite_field import make_field
from latin_bitrades.fields.mersenne import mersenne_params, mersenne_trade


@pytest.fixture
def klein_square():
    """Cayley table of (Z2)^2 on 0..3."""
    return xor_square(2)


@pytest.fixture(scope="session")
def xor8_square():
    """Cayley table of (Z2)^3 on 0..7."""
    return xor_square(3)


@pytest.fixture
def atop_square():
    """The order 4 square whose autotopism group has order 96."""
    return square_from_rows(ATOP_SQUARE)


@pytest.fixture
def intercalate():
    """The 2x2 bitrade swapping symbols 0 and 1, inside an order 3 grid."""
    return Bitrade.from_entries(
        3,
        [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)],
        [(0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1)],
    )


@pytest.fixture
def two_intercalates():
    """Two disjoint intercalates in an order 4 grid."""
    t = [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0), (2, 2, 0), (2, 3, 1), (3, 2, 1), (3, 3, 0)]
    mate = [(r, c, 1 - s) for r, c, s in t]
    return Bitrade.from_entries(4, t, mate)


@pytest.fixture
def z2_square():
    return PartialLatinSquare.from_table([[0, 1], [1, 0]])


@pytest.fixture(scope="session")
def klein_atop():
    """(square, group) for the autotopism group of (Z2)^2."""
    return published_group("klein-atop")


@pytest.fixture(scope="session")
def square_atop():
    """(square, group) for the autotopism group of the order 4 square."""
    return published_group("atop-square-atop")


@pytest.fixture(scope="session")
def xor8_aut():
    """(square, group) for the automorphism group of (Z2)^3."""
    return published_group("xor8-aut")


@pytest.fixture(scope="session")
def gf8_params():
    return mersenne_params(3)


@pytest.fixture(scope="session")
def gf8_construction(gf8_params):
    """The size 21 Mersenne construction in canonical labels."""
    return mersenne_trade(gf8_params)


@pytest.fixture(scope="session")
def gf11():
    return make_field("prime", 11)

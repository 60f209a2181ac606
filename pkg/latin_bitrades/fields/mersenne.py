"""
Mersenne Module

This module builds the q-homogeneous trades of size pq in the addition
table of GF(2^q) when p = 2^q - 1 is prime, from the group generated by
x -> ax and the square root map.
"""

from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from sympy import isprime

from latin_bitrades.core.partial_latin_square import Bitrade, Entry, PartialLatinSquare
from latin_bitrades.fields.finite_field import DEFAULT_POLYNOMIALS, FieldCtx, is_irreducible, make_field
from latin_bitrades.groups.paratopism import Paratopism
from latin_bitrades.groups.paratopism_group import closure
from latin_bitrades.groups.permutation import Permutation
from latin_bitrades.trades.trade_engine import Construction, Tau, construct
from latin_bitrades.utils.errors import ConsistencyError, PreconditionError
from latin_bitrades.utils.logger import get_logger

logger = get_logger(__name__)

# Images of 1, a, a^2 under the relabeling used for the published GF(8) tables
PUBLISHED_BASIS: Tuple[int, ...] = (1, 2, 6)


class MersenneParams(NamedTuple):
    """Exponents and generators of the Mersenne construction."""

    q: int
    p: int
    i: int
    j: int
    field: FieldCtx
    omega: Permutation
    alpha: Permutation
    alpha_bar: Permutation


def _solve_exponents(field: FieldCtx, p: int) -> Tuple[int, int]:
    """
    Return (i, j) for the primitive element of field.

    Raises:
        PreconditionError: If i is not unique or no j exists
    """
    a = field.primitive
    target = field.add(field.add(field.mul(a, a), a), 1)
    solutions = [i for i in range(p) if field.power(a, 2 * i) == target]
    if len(solutions) != 1:
        raise PreconditionError(f"the Mersenne hypothesis fails: {len(solutions)} solutions for i")
    i = solutions[0]

    j = next((j for j in range(1, p + 1) if (pow(2, j, p) + i - 1) % p == 0), None)
    if j is None:
        raise PreconditionError(f"the Mersenne hypothesis fails: no j with {p} | 2^j + {i} - 1")
    return i, j


def candidate_polynomials(q: int) -> Iterator[int]:
    """The default polynomial of degree q, then every other irreducible one in increasing order."""
    default = DEFAULT_POLYNOMIALS.get(q)
    if default is not None:
        yield default
    for poly in range((1 << q) + 1, 1 << (q + 1), 2):
        if poly != default and is_irreducible(poly):
            yield poly


def _field_for(q: int, p: int, polynomial: Optional[int]) -> Tuple[FieldCtx, int, int]:
    if polynomial is not None:
        field = make_field("binary", q, polynomial)
        return (field,) + _solve_exponents(field, p)

    # The hypothesis depends on the primitive element, so try each defining polynomial
    for poly in candidate_polynomials(q):
        try:
            field = make_field("binary", q, poly)
            i, j = _solve_exponents(field, p)
        except PreconditionError as e:
            logger.debug(f"Polynomial {poly:#b} rejected: {e.message}")
            continue
        return field, i, j
    raise PreconditionError(f"the Mersenne hypothesis fails for every polynomial of degree {q}")


def mersenne_params(q: int, polynomial: Optional[int] = None) -> MersenneParams:
    """
    Solve for i and j and build omega, alpha and alpha_bar.

    i is the unique exponent with a^(2i) = a^2 + a + 1; j is the least
    positive exponent with p dividing 2^j + i - 1. Without an explicit
    polynomial the first of candidate_polynomials(q) admitting both is used.

    Args:
        q: Degree, at least 3, with 2^q - 1 prime
        polynomial: Primitive polynomial bits of degree q

    Returns:
        The parameters

    Raises:
        PreconditionError: If q < 3, p is composite, or no unique i or no
            j exists
    """
    if q < 3:
        raise PreconditionError(f"q must be at least 3, got {q}")
    p = (1 << q) - 1
    if not isprime(p):
        raise PreconditionError(f"2^{q} - 1 = {p} is not prime")

    field, i, j = _field_for(q, p, polynomial)
    a = field.primitive

    n = field.size
    omega = Permutation.from_function(n, lambda x: field.mul(a, x))
    alpha = Permutation.from_function(n, lambda x: field.power(x, (p + 1) // 2) if x else 0)
    alpha_bar = omega ** i * alpha ** (-j)

    if alpha * omega ** 2 != omega * alpha:
        raise ConsistencyError("alpha omega^2 = omega alpha does not hold")
    if alpha_bar(a) != a:
        raise ConsistencyError("alpha_bar does not fix a")

    logger.info(f"Mersenne parameters for q={q}: p={p}, i={i}, j={j}")
    return MersenneParams(q, p, i, j, field, omega, alpha, alpha_bar)


def addition_square(field: FieldCtx) -> PartialLatinSquare:
    """Addition table of the field."""
    n = field.size
    return PartialLatinSquare.from_table([[field.add(x, y) for y in range(n)] for x in range(n)])


def linear_relabeling(basis: Sequence[int]) -> List[int]:
    """
    Extend images of 1, a, a^2, ... to the additive map on all labels.

    Raises:
        PreconditionError: If the images are not linearly independent
    """
    size = 1 << len(basis)
    mapping = []
    for x in range(size):
        image = 0
        for bit, b in enumerate(basis):
            if x >> bit & 1:
                image ^= b
        mapping.append(image)
    if sorted(mapping) != list(range(size)):
        raise PreconditionError(f"basis images {list(basis)} are not independent")
    return mapping


def relabel_entry(e: Sequence[int], mapping: Sequence[int]) -> Entry:
    return Entry(*(mapping[v] for v in e))


def relabel_square(square: PartialLatinSquare, mapping: Sequence[int]) -> PartialLatinSquare:
    return PartialLatinSquare.from_entries(square.order, (relabel_entry(e, mapping) for e in square.entries))


def relabel_bitrade(bitrade: Bitrade, mapping: Sequence[int]) -> Bitrade:
    return Bitrade(relabel_square(bitrade.t, mapping), relabel_square(bitrade.t_mate, mapping))


def relabel_construction(built: Construction, mapping: Sequence[int]) -> Construction:
    """Move a whole construction to other labels; the report is unchanged."""
    m = Permutation(mapping)
    m_auto = Paratopism.automorphism(m)
    m_inverse = m_auto.inverse()

    def conjugate(x: Paratopism) -> Paratopism:
        return m_auto * x * m_inverse

    square = relabel_square(built.square, mapping)
    group = closure([conjugate(x) for x in built.group.generators], square)
    tau = Tau(relabel_entry(built.tau.e, mapping), conjugate(built.tau.theta), conjugate(built.tau.theta_bar))
    return Construction(
        square,
        group,
        tau,
        relabel_bitrade(built.bitrade, mapping),
        built.report,
    )


def mersenne_trade(params: MersenneParams, minimality_nodes: Optional[int] = None) -> Construction:
    """
    Build the trade of size pq in the addition table of GF(2^q).

    The group is generated by omega and alpha as automorphisms, and
    tau = ((1, a, a + 1), alpha, alpha_bar).

    Args:
        params: Output of mersenne_params
        minimality_nodes: Budget for the minimality search; skipped when None

    Returns:
        The construction with a report carrying i, j, p and q

    Raises:
        ConsistencyError: If the size or homogeneity differ from pq and q
    """
    field = params.field
    a = field.primitive
    square = addition_square(field)
    group = closure([Paratopism.automorphism(params.omega), Paratopism.automorphism(params.alpha)], square)
    e = Entry(1, a, field.add(a, 1))
    tau = Tau(e, Paratopism.automorphism(params.alpha), Paratopism.automorphism(params.alpha_bar))

    built = construct(square, group, tau, minimality_nodes)
    report = built.report
    if report.size != params.p * params.q or report.k != params.q:
        raise ConsistencyError(f"expected a {params.q}-homogeneous trade of size {params.p * params.q}")
    extras: Dict[str, str] = {"i": str(params.i), "j": str(params.j), "p": str(params.p), "q": str(params.q)}
    report.extras.update(extras)
    return built


def published_relabeling(params: MersenneParams) -> List[int]:
    """
    Relabeling onto the published GF(8) labels.

    Raises:
        PreconditionError: For any degree other than 3
    """
    if params.q != len(PUBLISHED_BASIS):
        raise PreconditionError("published labels exist only for GF(8)")
    return linear_relabeling(PUBLISHED_BASIS)

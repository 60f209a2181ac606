"""
Finite Field Module

This module provides table-driven arithmetic in GF(p) for a prime p and in
GF(2^q) given by a primitive polynomial. Elements are integer labels: the
residue itself in GF(p), and in GF(2^q) the integer whose bit i is the
coefficient of a^i.
"""

from math import gcd
from typing import Dict, List, Optional

from sympy import isprime

from latin_bitrades.utils.errors import PreconditionError
from latin_bitrades.utils.logger import get_logger

logger = get_logger(__name__)

FIELD_KINDS = ("prime", "binary")

# Primitive polynomials over GF(2), leading term included
DEFAULT_POLYNOMIALS: Dict[int, int] = {
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10001111,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
}


def _poly_mod(value: int, modulus: int) -> int:
    """Remainder of carry-less division over GF(2)."""
    degree = modulus.bit_length() - 1
    while value.bit_length() - 1 >= degree:
        value ^= modulus << (value.bit_length() - 1 - degree)
    return value


def is_irreducible(poly: int) -> bool:
    """Check irreducibility over GF(2) by trial division."""
    degree = poly.bit_length() - 1
    if degree < 1:
        return False
    for divisor in range(2, 1 << (degree // 2 + 1)):
        if _poly_mod(poly, divisor) == 0:
            return False
    return True


class FieldCtx:
    """
    A finite field with exponential and logarithm tables for a primitive
    element.
    """

    def __init__(self, kind: str, size: int, exp: List[int], modulus: int, name: str):
        self.kind = kind
        self.size = size
        self.modulus = modulus
        self.name = name
        self.exp = exp
        self.primitive = exp[1] if len(exp) > 1 else 1
        self.log: Dict[int, int] = {x: k for k, x in enumerate(exp)}

    @property
    def multiplicative_order(self) -> int:
        return self.size - 1

    @property
    def elements(self) -> range:
        return range(self.size)

    def add(self, x: int, y: int) -> int:
        if self.kind == "binary":
            return x ^ y
        return (x + y) % self.size

    def neg(self, x: int) -> int:
        if self.kind == "binary":
            return x
        return (-x) % self.size

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self.exp[(self.log[x] + self.log[y]) % self.multiplicative_order]

    def inv(self, x: int) -> int:
        if x == 0:
            raise PreconditionError("zero has no inverse")
        return self.exp[(-self.log[x]) % self.multiplicative_order]

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def power(self, x: int, k: int) -> int:
        if x == 0:
            if k <= 0:
                raise PreconditionError("zero has no non-positive powers")
            return 0
        return self.exp[(self.log[x] * k) % self.multiplicative_order]

    def is_square(self, x: int) -> bool:
        """True for non-zero squares; in odd order these have even logarithm."""
        if x == 0:
            return False
        if self.kind == "binary":
            return True
        return self.log[x] % 2 == 0

    def squares(self) -> List[int]:
        return sorted(x for x in range(1, self.size) if self.is_square(x))

    def element_order(self, x: int) -> int:
        if x == 0:
            raise PreconditionError("zero has no multiplicative order")
        k = self.log[x]
        n = self.multiplicative_order
        return n // gcd(k, n)

    def __repr__(self) -> str:
        return f"FieldCtx({self.name}, primitive={self.primitive})"


def _prime_field(p: int, primitive: Optional[int]) -> FieldCtx:
    if not isprime(p):
        raise PreconditionError(f"{p} is not prime")
    candidates = [primitive] if primitive is not None else range(1, p)
    for a in candidates:
        exp = [1]
        for _ in range(p - 2):
            exp.append((exp[-1] * a) % p)
        if len(set(exp)) == p - 1:
            return FieldCtx("prime", p, exp, p, f"GF({p})")
    raise PreconditionError(f"{primitive} is not a primitive element of GF({p})")


def _binary_field(q: int, poly: Optional[int]) -> FieldCtx:
    if q < 1:
        raise PreconditionError(f"degree must be positive, got {q}")
    if poly is None:
        if q not in DEFAULT_POLYNOMIALS:
            raise PreconditionError(f"no default polynomial of degree {q}; pass one explicitly")
        poly = DEFAULT_POLYNOMIALS[q]
    if poly.bit_length() - 1 != q:
        raise PreconditionError(f"polynomial {poly:#b} does not have degree {q}")
    if not is_irreducible(poly):
        raise PreconditionError(f"polynomial {poly:#b} is reducible")

    size = 1 << q
    exp = [1]
    x = 1
    for _ in range(size - 2):
        x <<= 1
        if x & size:
            x ^= poly
        exp.append(x)
    if len(set(exp)) != size - 1:
        raise PreconditionError(f"x is not primitive modulo {poly:#b}")
    return FieldCtx("binary", size, exp, poly, f"GF(2^{q})")


def make_field(kind: str, value: int, polynomial: Optional[int] = None, primitive: Optional[int] = None) -> FieldCtx:
    """
    Build a finite field context.

    Args:
        kind: "prime" for GF(p) or "binary" for GF(2^q)
        value: p for a prime field, q for a binary field
        polynomial: Defining polynomial bits for a binary field; a default
            primitive polynomial is used when omitted
        primitive: Primitive element of a prime field; the least one is
            used when omitted

    Returns:
        The field with its tables

    Raises:
        PreconditionError: On a composite p, a reducible or non-primitive
            polynomial or a non-primitive element
    """
    if kind == "prime":
        field = _prime_field(value, primitive)
    elif kind == "binary":
        field = _binary_field(value, polynomial)
    else:
        raise PreconditionError(f"unknown field kind {kind!r}; expected one of {FIELD_KINDS}")
    logger.debug(f"Built {field.name} with primitive element {field.primitive}")
    return field


def parse_polynomial(text: str) -> int:
    """Read polynomial bits given as binary digits ("1011") or a 0b/0x literal."""
    text = text.strip()
    if text.startswith(("0b", "0x", "0o")):
        return int(text, 0)
    return int(text, 2)

# beauville_forge/core/field/gf2m.py
"""
Arithmetic in GF(2^m).

Elements are bit masks of polynomials over GF(2) reduced modulo the FieldSpec's
irreducible modulus; bit i is the coefficient of x^i. Addition is XOR.
Multiplication goes through exp/log tables built once per FieldSpec from a
primitive element.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Literal, Optional, Tuple

from sympy import divisors, primefactors

from ..exceptions import DegreeMismatchError, FieldArithmeticError

logger = logging.getLogger(__name__)

DEFAULT_MODULI = {
    3: 0b1011,        # x^3 + x + 1
    5: 0b100101,      # x^5 + x^2 + 1
    7: 0b10000011,    # x^7 + x + 1
}

FieldOp = Literal["add", "mul", "inv", "pow"]


# ---- polynomial helpers over GF(2) ----------------------------------------------


def poly_degree(a: int) -> int:
    return a.bit_length() - 1


def poly_mod(a: int, b: int) -> int:
    """Remainder of a modulo b in GF(2)[x]."""
    db = poly_degree(b)
    while a and poly_degree(a) >= db:
        a ^= b << (poly_degree(a) - db)
    return a


def clmul(a: int, b: int) -> int:
    """Carry-less product of two bit masks."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def is_irreducible(modulus: int) -> bool:
    """Trial division by every polynomial of degree 1..deg/2."""
    deg = poly_degree(modulus)
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for divisor in range(1 << d, 1 << (d + 1)):
            if poly_mod(modulus, divisor) == 0:
                return False
    return True


def least_irreducible(m: int) -> int:
    for candidate in range((1 << m) | 1, 1 << (m + 1), 2):
        if is_irreducible(candidate):
            return candidate
    raise FieldArithmeticError(f"no irreducible polynomial of degree {m}")  # unreachable for m >= 1


def format_poly(a: int) -> str:
    if a == 0:
        return "0"
    terms = []
    for i in range(poly_degree(a), -1, -1):
        if a >> i & 1:
            terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
    return "+".join(terms)


# ---- field specification ---------------------------------------------------------


@dataclass(frozen=True)
class FieldSpec:
    """
    GF(2^m) for odd m, with q = 2^m = 2^(2n+1).

    Args:
        m: odd positive exponent.
        modulus: irreducible polynomial of degree m as an (m+1)-bit mask.

    Example:
        >>> F = FieldSpec.for_degree(3)
        >>> F.mul(0b10, 0b100)   # x * x^2 = x + 1
        3
    """

    m: int
    modulus: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.m % 2 == 0:
            raise FieldArithmeticError(f"field exponent must be odd and positive, got m={self.m}")
        if poly_degree(self.modulus) != self.m:
            raise FieldArithmeticError(
                f"modulus {self.modulus:#x} does not have degree {self.m}"
            )
        if not is_irreducible(self.modulus):
            raise FieldArithmeticError(f"modulus {self.modulus:#x} is reducible over GF(2)")

    @classmethod
    def for_degree(cls, m: int, modulus: Optional[int] = None) -> "FieldSpec":
        if modulus is None:
            modulus = DEFAULT_MODULI.get(m) or least_irreducible(m)
        return cls(m, modulus)

    # ---- sizes -------------------------------------------------------------------

    @property
    def q(self) -> int:
        return 1 << self.m

    @property
    def n(self) -> int:
        return (self.m - 1) // 2

    @property
    def twist(self) -> int:
        """2^(n+1), the integer square root of 2q."""
        return 1 << (self.n + 1)

    # ---- raw arithmetic on bit masks ---------------------------------------------

    def _tables(self) -> Tuple[List[int], List[int], int]:
        return _exp_log_tables(self)

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise FieldArithmeticError(f"{a:#x} is not an element of GF({self.q})")
        return a

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        exp, log, _ = self._tables()
        return exp[(log[a] + log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldArithmeticError("inversion of zero", context={"field": f"GF({self.q})"})
        exp, log, _ = self._tables()
        return exp[(-log[a]) % (self.q - 1)]

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise FieldArithmeticError("negative power of zero")
            return 1 if k == 0 else 0
        exp, log, _ = self._tables()
        return exp[(log[a] * k) % (self.q - 1)]

    def sqrt(self, a: int) -> int:
        """Inverse Frobenius: a^(2^(m-1))."""
        return self.pow(a, 1 << (self.m - 1))

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise FieldArithmeticError("zero has no multiplicative order")
        for d in divisors(self.q - 1):
            if self.pow(a, d) == 1:
                return d
        raise FieldArithmeticError("order search failed")  # unreachable

    def is_generator(self, a: int) -> bool:
        return a != 0 and self.order(a) == self.q - 1

    def generators(self) -> Iterator[int]:
        """Multiplicative generators in bit-mask order."""
        for a in range(1, self.q):
            if self.is_generator(a):
                yield a

    def in_proper_subfield(self, a: int) -> bool:
        """True when a lies in GF(2^d) for a proper divisor d of m."""
        for d in divisors(self.m):
            if d < self.m and self.pow(a, 1 << d) == a:
                return True
        return False

    # ---- wrapped elements --------------------------------------------------------

    def element(self, bits: int) -> "FieldElement":
        return FieldElement(self, self.check(bits))

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def __str__(self) -> str:
        return f"GF(2^{self.m}) mod {format_poly(self.modulus)}"


@lru_cache(maxsize=None)
def _exp_log_tables(spec: FieldSpec) -> Tuple[List[int], List[int], int]:
    q, modulus = spec.q, spec.modulus
    if q == 2:
        return [1], [0, 0], 1
    factors = primefactors(q - 1)

    def slow_pow(a: int, k: int) -> int:
        result, base = 1, a
        while k:
            if k & 1:
                result = poly_mod(clmul(result, base), modulus)
            base = poly_mod(clmul(base, base), modulus)
            k >>= 1
        return result

    primitive = next(
        g for g in range(2, q) if all(slow_pow(g, (q - 1) // p) != 1 for p in factors)
    )
    exp = [0] * (q - 1)
    log = [0] * q
    value = 1
    for i in range(q - 1):
        exp[i] = value
        log[value] = i
        value = poly_mod(clmul(value, primitive), modulus)
    logger.debug(f"Built exp/log tables for GF({q}) with primitive element {format_poly(primitive)}")
    return exp, log, primitive


# ---- element wrapper -------------------------------------------------------------


@dataclass(frozen=True)
class FieldElement:
    """An element of GF(2^m) bound to its FieldSpec."""

    spec: FieldSpec
    bits: int

    def _same(self, other: "FieldElement") -> None:
        if self.spec != other.spec:
            raise DegreeMismatchError("field elements from different fields", left=self.spec, right=other.spec)

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        return FieldElement(self.spec, self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        return FieldElement(self.spec, self.spec.mul(self.bits, other.bits))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        return FieldElement(self.spec, self.spec.mul(self.bits, self.spec.inv(other.bits)))

    def __pow__(self, k: int) -> "FieldElement":
        return FieldElement(self.spec, self.spec.pow(self.bits, k))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv(self.bits))

    def sqrt(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.sqrt(self.bits))

    def order(self) -> int:
        return self.spec.order(self.bits)

    def is_zero(self) -> bool:
        return self.bits == 0

    def hex(self) -> str:
        return f"{self.bits:#x}"

    def __str__(self) -> str:
        return format_poly(self.bits)


def ff_arith(
    a: FieldElement,
    b: Optional[FieldElement] = None,
    op: FieldOp = "add",
    *,
    k: Optional[int] = None,
) -> FieldElement:
    """
    Single entry point for scalar arithmetic.

    ``add``/``mul`` need ``b``; ``inv`` ignores it; ``pow`` needs ``k`` and
    accepts negative exponents through the inverse.
    """
    if op == "add":
        if b is None:
            raise ValueError("add needs two operands")
        return a + b
    if op == "mul":
        if b is None:
            raise ValueError("mul needs two operands")
        return a * b
    if op == "inv":
        return a.inverse()
    if op == "pow":
        if k is None:
            raise ValueError("pow needs an exponent k")
        return a ** k
    raise ValueError(f"unknown field operation: {op}")


__all__ = [
    "DEFAULT_MODULI",
    "FieldSpec",
    "FieldElement",
    "ff_arith",
    "is_irreducible",
    "least_irreducible",
    "format_poly",
    "clmul",
    "poly_mod",
]

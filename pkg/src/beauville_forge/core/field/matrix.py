# beauville_forge/core/field/matrix.py
"""
4x4 matrices over GF(2^m), the natural module of the Suzuki groups.

Entries are stored row-major as 16 raw bit masks. Characteristic 2 removes
every sign, so determinants and cofactors are plain sums of products.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Literal, Optional, Sequence, Tuple

from sympy import divisors

from ..exceptions import DegreeMismatchError, FieldArithmeticError, OrderBoundExceededError
from .gf2m import FieldSpec, format_poly

logger = logging.getLogger(__name__)

SIZE = 4
DEFAULT_ORDER_BOUND = 1_000_000

MatrixOp = Literal["mul", "inv", "pow"]

def _det_sub(spec: FieldSpec, e: Sequence[int], rows: Sequence[int], cols: Sequence[int]) -> int:
    """Determinant of the square submatrix on ``rows`` x ``cols`` (characteristic 2)."""
    k = len(rows)
    if k == 0:
        return 1
    if k == 1:
        return e[rows[0] * SIZE + cols[0]]
    total = 0
    r0 = rows[0]
    rest = rows[1:]
    for idx, c in enumerate(cols):
        a = e[r0 * SIZE + c]
        if a:
            total ^= spec.mul(a, _det_sub(spec, e, rest, cols[:idx] + cols[idx + 1:]))
    return total


@dataclass(frozen=True)
class SuzukiMatrix:
    """
    Immutable 4x4 matrix over a FieldSpec.

    Products follow the row-vector convention ``v -> v A``, so ``A * B``
    applies A first, matching the left-to-right permutation products.

    Example:
        >>> F = FieldSpec.for_degree(3)
        >>> t1 = SuzukiMatrix.from_rows(F, [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]])
        >>> (t1 * t1).is_identity()
        True
    """

    spec: FieldSpec
    entries: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != SIZE * SIZE:
            raise ValueError(f"expected 16 entries, got {len(self.entries)}")
        for v in self.entries:
            self.spec.check(v)

    # ---- constructors ------------------------------------------------------------

    @classmethod
    def from_rows(cls, spec: FieldSpec, rows: Sequence[Sequence[int]]) -> "SuzukiMatrix":
        flat: List[int] = []
        for row in rows:
            if len(row) != SIZE:
                raise ValueError("each row needs 4 entries")
            flat.extend(int(v) for v in row)
        return cls(spec, tuple(flat))

    @classmethod
    def identity(cls, spec: FieldSpec) -> "SuzukiMatrix":
        return cls(spec, tuple(1 if i % 5 == 0 else 0 for i in range(16)))

    @classmethod
    def scalar(cls, spec: FieldSpec, value: int) -> "SuzukiMatrix":
        return cls(spec, tuple(value if i % 5 == 0 else 0 for i in range(16)))

    # ---- access ------------------------------------------------------------------

    def __getitem__(self, rc: Tuple[int, int]) -> int:
        r, c = rc
        return self.entries[r * SIZE + c]

    def rows(self) -> List[Tuple[int, ...]]:
        return [self.entries[r * SIZE:(r + 1) * SIZE] for r in range(SIZE)]

    def is_identity(self) -> bool:
        return self.entries == SuzukiMatrix.identity(self.spec).entries

    def _same(self, other: "SuzukiMatrix") -> None:
        if self.spec != other.spec:
            raise DegreeMismatchError("matrices over different fields", left=self.spec, right=other.spec)

    # ---- algebra -----------------------------------------------------------------

    def __mul__(self, other: "SuzukiMatrix") -> "SuzukiMatrix":
        if not isinstance(other, SuzukiMatrix):
            return NotImplemented
        self._same(other)
        mul = self.spec.mul
        a, b = self.entries, other.entries
        out = []
        for r in range(SIZE):
            for c in range(SIZE):
                acc = 0
                for k in range(SIZE):
                    x = a[r * SIZE + k]
                    if x:
                        y = b[k * SIZE + c]
                        if y:
                            acc ^= mul(x, y)
                out.append(acc)
        return SuzukiMatrix(self.spec, tuple(out))

    def __add__(self, other: "SuzukiMatrix") -> "SuzukiMatrix":
        self._same(other)
        return SuzukiMatrix(self.spec, tuple(x ^ y for x, y in zip(self.entries, other.entries)))

    def __pow__(self, k: int) -> "SuzukiMatrix":
        base = self.inverse() if k < 0 else self
        k = abs(k)
        result = SuzukiMatrix.identity(self.spec)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def det(self) -> int:
        idx = tuple(range(SIZE))
        return _det_sub(self.spec, self.entries, idx, idx)

    def inverse(self) -> "SuzukiMatrix":
        d = self.det()
        if d == 0:
            raise FieldArithmeticError("singular matrix has no inverse")
        d_inv = self.spec.inv(d)
        e = self.entries
        out = [0] * 16
        full = tuple(range(SIZE))
        for r in range(SIZE):
            for c in range(SIZE):
                rows = tuple(i for i in full if i != c)
                cols = tuple(j for j in full if j != r)
                # adjugate entry (r, c) is the cofactor of (c, r)
                out[r * SIZE + c] = self.spec.mul(_det_sub(self.spec, e, rows, cols), d_inv)
        return SuzukiMatrix(self.spec, tuple(out))

    def conjugate(self, g: "SuzukiMatrix") -> "SuzukiMatrix":
        """``g^-1 * self * g``."""
        return g.inverse() * self * g

    def commutes_with(self, other: "SuzukiMatrix") -> bool:
        return self * other == other * self

    def trace(self) -> int:
        t = 0
        for i in range(SIZE):
            t ^= self.entries[i * 5]
        return t

    def char_poly(self) -> "CharPoly":
        return char_poly(self)

    def order(self, exponent_bound: int = DEFAULT_ORDER_BOUND) -> int:
        return element_order_matrix(self, exponent_bound)

    def hex_entries(self) -> List[str]:
        return [f"{v:#x}" for v in self.entries]

    def __str__(self) -> str:
        return "[" + "; ".join(" ".join(format_poly(v) for v in row) for row in self.rows()) + "]"


@dataclass(frozen=True)
class CharPoly:
    """lambda^4 + c1 lambda^3 + c2 lambda^2 + c3 lambda + c4 over the FieldSpec's field."""

    spec: FieldSpec
    coefficients: Tuple[int, int, int, int]

    def evaluate(self, value: int) -> int:
        acc = 1
        for c in self.coefficients:
            acc = self.spec.mul(acc, value) ^ c
        return acc

    def roots(self) -> List[int]:
        return [v for v in range(self.spec.q) if self.evaluate(v) == 0]

    def __str__(self) -> str:
        parts = ["l^4"]
        for power, c in zip((3, 2, 1, 0), self.coefficients):
            if c:
                coeff = format_poly(c)
                coeff = f"({coeff})" if "+" in coeff else coeff
                mono = {3: "l^3", 2: "l^2", 1: "l", 0: ""}[power]
                parts.append(coeff if not mono else (mono if c == 1 else f"{coeff}{mono}"))
        return " + ".join(parts)


# ---- operations ------------------------------------------------------------------


def mat_ops(A: SuzukiMatrix, B: Optional[SuzukiMatrix] = None, op: MatrixOp = "mul", *, k: Optional[int] = None) -> SuzukiMatrix:
    """Matrix product, inverse, or integer power (negative via the inverse)."""
    if op == "mul":
        if B is None:
            raise ValueError("mul needs two operands")
        return A * B
    if op == "inv":
        return A.inverse()
    if op == "pow":
        if k is None:
            raise ValueError("pow needs an exponent k")
        return A ** k
    raise ValueError(f"unknown matrix operation: {op}")


def char_poly(A: SuzukiMatrix) -> CharPoly:
    """
    Coefficients of det(lambda I - A).

    The coefficient of lambda^(4-k) is the sum of the k x k principal minors;
    in characteristic 2 there are no alternating signs.
    """
    coeffs = []
    full = range(SIZE)
    for k in range(1, SIZE + 1):
        total = 0
        for idx in combinations(full, k):
            total ^= _det_sub(A.spec, A.entries, idx, idx)
        coeffs.append(total)
    return CharPoly(A.spec, tuple(coeffs))  # type: ignore[arg-type]


def candidate_orders(spec: FieldSpec) -> List[int]:
    """Divisors of 4, q-1 and q +/- 2^(n+1) + 1, ascending."""
    q, s = spec.q, spec.twist
    pool = set(divisors(4))
    for N in (q - 1, q + s + 1, q - s + 1):
        if N > 0:
            pool.update(divisors(N))
    return sorted(pool)


def element_order_matrix(A: SuzukiMatrix, exponent_bound: int = DEFAULT_ORDER_BOUND) -> int:
    """
    Least k >= 1 with A^k = I.

    Suzuki element orders are tried first; anything else is found by
    iterating up to ``exponent_bound``.

    Raises:
        OrderBoundExceededError: nothing up to the bound works.
    """
    if A.is_identity():
        return 1
    for d in candidate_orders(A.spec):
        if (A ** d).is_identity():
            return d
    logger.debug("Matrix order not among Suzuki candidates; iterating")
    current = A
    for k in range(1, exponent_bound + 1):
        if current.is_identity():
            return k
        current = current * A
    raise OrderBoundExceededError("matrix order exceeds bound", bound=exponent_bound)


def _rank(spec: FieldSpec, rows: Iterable[Sequence[int]]) -> int:
    """Row rank by Gaussian elimination (rows of width 4)."""
    work = [list(r) for r in rows]
    rank = 0
    for col in range(SIZE):
        pivot = next((i for i in range(rank, len(work)) if work[i][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = spec.inv(work[rank][col])
        work[rank] = [spec.mul(v, inv) for v in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][col]:
                f = work[i][col]
                work[i] = [a ^ spec.mul(f, b) for a, b in zip(work[i], work[rank])]
        rank += 1
    return rank


def eigenvalues(A: SuzukiMatrix) -> List[int]:
    """Eigenvalues of A lying in the base field."""
    return char_poly(A).roots()


def share_eigenvector(A: SuzukiMatrix, B: SuzukiMatrix) -> bool:
    """True when some nonzero vector is an eigenvector of both A and B (over the base field)."""
    A._same(B)
    spec = A.spec
    for lam in eigenvalues(A):
        shifted_a = (A + SuzukiMatrix.scalar(spec, lam)).rows()
        for mu in eigenvalues(B):
            shifted_b = (B + SuzukiMatrix.scalar(spec, mu)).rows()
            # v (A - lam) = 0 and v (B - mu) = 0: stack the columns as equations
            cols_a = [tuple(row[c] for row in shifted_a) for c in range(SIZE)]
            cols_b = [tuple(row[c] for row in shifted_b) for c in range(SIZE)]
            if _rank(spec, cols_a + cols_b) < SIZE:
                return True
    return False


__all__ = [
    "SuzukiMatrix",
    "CharPoly",
    "mat_ops",
    "char_poly",
    "candidate_orders",
    "element_order_matrix",
    "eigenvalues",
    "share_eigenvector",
    "DEFAULT_ORDER_BOUND",
]

# beauville_forge/core/constructions/symmetric.py
"""
S_n x S_n on 2n points, n >= 5.

The first pair is x1 = (1..n-1)(2n-1,2n), y1 = (n,n-1)(n+1..2n-1) for even n
and x1 = (1..n)(2n-1,2n), y1 = (n,n-1)(n+1..2n) for odd n. The second pair
is built from a 3-cycle, a long cycle and a p-cycle in each block, with p = 4
for even n and p the least prime >= 5 prime to 3(n-3) for odd n. The cases
n = 5 and n = 6 use the explicit elements printed for them. Those two,
and odd n divisible by 3, break condition dagger as printed; the
construction records that as a discrepancy rather than repairing it.
"""

from __future__ import annotations

import logging
import math
from typing import List, Tuple

from sympy import nextprime

from ..exceptions import ConstructionError
from ..groups import GroupHandle
from ..perm import Permutation
from ..structures import BeauvilleStructure, OvergroupConjugation, StronglyRealWitness
from .base import (
    NO_LIMITS,
    Construction,
    FamilyRequest,
    Limits,
    cycle,
    involution,
    mirror,
    pair_conjugators,
    reflection,
    register_family,
    span,
    with_reading,
)

logger = logging.getLogger(__name__)

Pairs = List[Tuple[int, int]]


def symmetric_square(n: int, limits: Limits = NO_LIMITS) -> GroupHandle:
    degree = 2 * n
    gens: List[Permutation] = []
    for block in (span(1, n), span(n + 1, degree)):
        gens.extend([cycle(block[:2], degree), cycle(block, degree)])
    return GroupHandle(gens, orbit_blocks=[span(1, n), span(n + 1, degree)], name=f"S{n}xS{n}", **limits.handle_kwargs())


def second_prime(n: int) -> int:
    """4 for even n; otherwise the least prime p >= 5 with gcd(p, 3(n-3)) = 1."""
    if n % 2 == 0:
        return 4
    p = 5
    while math.gcd(p, 3 * (n - 3)) != 1:
        p = nextprime(p)
    return p


def _first_pair(n: int) -> Tuple[Permutation, Permutation, Permutation]:
    N = 2 * n
    if n % 2 == 0:
        x1 = cycle(span(1, n - 1), N) * cycle([N - 1, N], N)
        y1 = cycle([n, n - 1], N) * cycle(span(n + 1, N - 1), N)
        # fixes n-1, n, 2n-1 and 2n
        t = involution(reflection(span(1, n - 1), n - 2) + reflection(span(n + 1, N - 1), n - 2), N)
    else:
        x1 = cycle(span(1, n), N) * cycle([N - 1, N], N)
        y1 = cycle([n, n - 1], N) * cycle(span(n + 1, N), N)
        # swaps n-1 with n and 2n-1 with 2n
        t = involution(mirror(span(1, n), n - 3) + mirror(span(n + 1, N), n - 3), N)
    return x1, y1, t


def _block_mirror(n: int, p: int, offset: int) -> Pairs:
    """Reflection inverting (1,2,3), (4..n) and the p-cycle on 1..p, shifted by offset."""
    pts = [offset + i for i in span(1, n)]
    return [(1 + offset, 3 + offset)] + mirror(pts[:p], 2) + mirror(pts[3:], p - 4)


def _second_pair(n: int) -> Tuple[Permutation, Permutation, Permutation]:
    N = 2 * n
    if n == 6:
        x2 = cycle([1, 2, 3, 4], N) * cycle([10, 11, 12], N)
        y2 = cycle([4, 5, 6], N) * cycle([7, 8, 9, 10], N)
        w = involution([(1, 3), (5, 6), (7, 9), (11, 12)], N)
        return x2, y2, w
    p = second_prime(n)
    x2 = cycle([1, 2, 3], N) * cycle(span(4, n), N) * cycle(span(n + p, n + 1), N)
    y2 = cycle(span(p, 1), N) * cycle([n + 1, n + 2, n + 3], N) * cycle(span(n + 4, N), N)
    w = involution(_block_mirror(n, p, 0) + _block_mirror(n, p, n), N)
    return x2, y2, w


def _smallest_case(request: FamilyRequest, limits: Limits) -> Construction:
    N = 10
    x1 = Permutation.from_cycles([(1, 4), (2, 5), (6, 10), (7, 8, 9)], N)
    y1 = Permutation.from_cycles([(1, 5), (2, 3, 4), (6, 9), (7, 10)], N)
    x2 = Permutation.from_cycles([(1, 2, 3, 4, 5), (6, 7, 9, 10)], N)
    y2 = Permutation.from_cycles([(5, 4, 2, 1), (10, 9, 8, 7, 6)], N)
    tau = Permutation.from_cycles([(1, 5), (2, 4), (6, 10), (7, 9)], N)
    s = BeauvilleStructure(symmetric_square(5, limits), (x1, y1), (x2, y2), name="sym_double(5)")
    literal = StronglyRealWitness(OvergroupConjugation(tau))
    return with_reading(request, s, literal, None, (
        "explicit elements printed for n=5",
        "the printed elements break condition dagger; the verifier reports it as a discrepancy",
    ))


@register_family("sym_double")
def sym_double_structure(request: FamilyRequest, limits: Limits = NO_LIMITS) -> Construction:
    (n,) = request.ints(1)
    if n < 5:
        raise ConstructionError(f"needs n >= 5 (got {n})", family=request.family, params=[n])
    if n == 5:
        return _smallest_case(request, limits)
    x1, y1, t = _first_pair(n)
    x2, y2, w = _second_pair(n)
    notes: List[str] = []
    if n == 6:
        notes.append("second pair from the elements printed for n=6")
        notes.append("the printed elements break condition dagger; the verifier reports it as a discrepancy")
    else:
        notes.append(f"second pair built with p={second_prime(n)}")
        if n % 2 == 1 and n % 3 == 0:
            notes.append(
                f"powers of x1 and x2 can both act on 1..{n} with cycle type 3^{n // 3}; "
                "condition dagger may fail"
            )
    s = BeauvilleStructure(symmetric_square(n, limits), (x1, y1), (x2, y2), name=f"sym_double({n})")
    logger.debug(f"sym_double({n}): type {s.type()}")
    return with_reading(request, s, pair_conjugators(t, w), None, notes)


__all__ = ["symmetric_square", "second_prime", "sym_double_structure"]

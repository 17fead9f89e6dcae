# beauville_forge/core/constructions/alternating.py
"""
Alternating-group families.

- ``alt_coprime`` (r a multiple of 6): a coprime structure on A_2r of type
  ((r^2-1, r+1, r+1), (2r-1, 2r-1, 3)).
- ``alt_4r`` (n = 4r > 12, 3 not dividing r): the printed structure of type
  ((4r^2-1, 2r+1, 2r+1), (4r^2-9, 2r-1, 2r+3)). Its formulas contain a
  repeated label and a malformed involution; the verifier has the last word.
- ``alt_power`` (n, k): structures on A_n^k acting on k blocks of n points,
  one coordinate per block, with odd and even n handled separately.

Every inverting involution is written as a cycle reflection: the pairs that
the printed formulas list follow one reflection each, so generating them
from (cycle, fixed point) reproduces the printed pairs.
"""

from __future__ import annotations

import logging
from typing import List, Tuple

from ..exceptions import ConstructionError
from ..groups import GroupHandle
from ..perm import Permutation, direct_sum
from ..structures import BeauvilleStructure, StructureType
from .base import (
    NO_LIMITS,
    Construction,
    FamilyRequest,
    Limits,
    alternating_generators,
    cycle,
    involution,
    pair_conjugators,
    reflection,
    register_family,
    span,
    with_reading,
)

logger = logging.getLogger(__name__)

Pairs = List[Tuple[int, int]]


def alternating_group(n: int, limits: Limits = NO_LIMITS) -> GroupHandle:
    return GroupHandle(alternating_generators(span(1, n), n), name=f"A{n}", **limits.handle_kwargs())


# ---- A_2r, r a multiple of 6 -------------------------------------------------------


@register_family("alt_coprime")
def alt_coprime_structure(request: FamilyRequest, limits: Limits = NO_LIMITS) -> Construction:
    (r,) = request.ints(1)
    if r < 6 or r % 6 != 0:
        raise ConstructionError(f"r must be a positive multiple of 6 (got {r})", family=request.family, params=[r])
    n = 2 * r
    x1 = cycle(span(1, r + 1), n) * cycle(span(r + 2, n), n)
    y1 = cycle(span(n, r), n)
    # a fixes r/2 and 3r/2 + 1
    a = involution(reflection(span(1, r + 1), r // 2 - 1) + reflection(span(r + 2, n), r // 2 - 1), n)
    x2 = cycle(span(1, n - 1), n)
    y2 = cycle(span(n, 2), n)
    # b fixes 1 and 2r
    b = involution(reflection(span(1, n - 1), 0), n)
    G = alternating_group(n, limits)
    s = BeauvilleStructure(G, (x1, y1), (x2, y2), name=f"alt_coprime({r})")
    expected = StructureType((r * r - 1, r + 1, r + 1), (n - 1, n - 1, 3))
    return with_reading(request, s, pair_conjugators(a, b), expected)


# ---- A_4r ----------------------------------------------------------------------------


@register_family("alt_4r")
def alt_4r_structure(request: FamilyRequest, limits: Limits = NO_LIMITS) -> Construction:
    (r,) = request.ints(1)
    n = 4 * r
    if n <= 12 or r % 3 == 0:
        raise ConstructionError(
            f"needs n = 4r > 12 with r not divisible by 3 (got r={r})", family=request.family, params=[r]
        )
    x1 = cycle(span(1, 2 * r + 1), n) * cycle(span(2 * r + 2, n), n)
    y1 = cycle(span(n, 2 * r), n)
    # a: (2r,2r+1)(2r-1,1)... on the first cycle, (2r+2,n)... on the second
    a = involution(
        reflection(span(1, 2 * r + 1), r - 1) + reflection(span(2 * r + 2, n), r - 1),
        n,
    )
    x2 = cycle(span(1, 2 * r + 3), n) * cycle(span(2 * r + 4, n), n)
    # printed with the label y1 again
    y2 = cycle(span(n, 2 * r + 2), n)
    # b: (2r+2,2r+3)(2r+1,1)... and (2r+4,4r)...; the printed tail repeats a pair
    b = involution(
        reflection(span(1, 2 * r + 3), r) + reflection(span(2 * r + 4, n), r - 2),
        n,
    )
    G = alternating_group(n, limits)
    s = BeauvilleStructure(G, (x1, y1), (x2, y2), name=f"alt_4r({r})")
    expected = StructureType(
        (4 * r * r - 1, 2 * r + 1, 2 * r + 1),
        (4 * r * r - 9, 2 * r - 1, 2 * r + 3),
    )
    notes = (
        "second pair printed as (x2, y1); read as (x2, y2)",
        f"b printed with its first run ending ({3 * r + 1},{3 * r + 3}), a pair of the second run; "
        f"read as the reflection of (1..{2 * r + 3}) fixing {r + 1}, ending ({r},{r + 2}), "
        f"times the reflection of ({2 * r + 4}..{n}) fixing {3 * r + 2}",
    )
    return with_reading(request, s, pair_conjugators(a, b), expected, notes)


# ---- A_n^k ----------------------------------------------------------------------------


def _odd_coordinate(n: int, j: int) -> Tuple[Permutation, ...]:
    x1 = cycle(span(1, 2 * j + 3), n)
    y1 = cycle(span(2 * j + 3, n), n)
    # printed t: (1,2j)...(j,j+1)(2j+2,n)...; its only fixed point is 2j+1
    t_pairs: Pairs = [(i, 2 * j + 1 - i) for i in range(1, j + 1)]
    t_pairs += [(2 * j + 1 + i, n + 1 - i) for i in range(1, (n - 2 * j - 1) // 2 + 1)]
    t = involution(t_pairs, n)
    x2 = cycle(span(1, n - 2), n)
    y2 = involution(
        [(j + 1, j + 2), (n - j - 1, n - j - 2), ((n - 1) // 2, n - 1), ((n + 1) // 2, n)], n
    )
    u = involution([(i, n - i) for i in range(2, (n - 1) // 2 + 1)] + [(n - 1, n)], n)
    return x1, y1, t, x2, y2, u


def _even_coordinate(n: int, j: int) -> Tuple[Permutation, ...]:
    x1 = cycle(span(1, 2 * j + 5), n)
    y1 = cycle(span(n, 2 * j + 4), n)
    # fixes j+2 on the first cycle and one point of 2j+6..n
    t = involution(
        reflection(span(1, 2 * j + 5), j + 1) + reflection(span(2 * j + 6, n), (n - 2 * j - 6) // 2),
        n,
    )
    x2 = cycle(span(1, n - 2), n) * cycle([n - 1, n], n)
    y2 = cycle([n // 2, (n - 2) // 2, n - 1], n) * cycle([j + 1, j, n, n - j - 1, n - j - 2], n)
    u = involution([(i, n - 1 - i) for i in range(1, (n - 2) // 2 + 1)], n)
    return x1, y1, t, x2, y2, u


def power_group(n: int, k: int, limits: Limits = NO_LIMITS) -> GroupHandle:
    degree = n * k
    gens = []
    for block in range(k):
        pts = span(block * n + 1, (block + 1) * n)
        gens.extend(alternating_generators(pts, degree))
    return GroupHandle(
        gens,
        orbit_blocks=[span(b * n + 1, (b + 1) * n) for b in range(k)],
        name=f"A{n}^{k}",
        **limits.handle_kwargs(),
    )


@register_family("alt_power")
def alt_power_structure(request: FamilyRequest, limits: Limits = NO_LIMITS) -> Construction:
    n, k = request.ints(2)
    notes: List[str] = []
    if n % 2 == 1:
        if n < 11 or k < 1 or k > (n - 6) // 2:
            raise ConstructionError(
                f"odd case needs n >= 11 and 1 <= k <= (n-6)/2 (got n={n}, k={k})",
                family=request.family,
                params=[n, k],
            )
        if 4 * k >= n - 6:
            notes.append(f"j runs to {k}, beyond the stricter first-pair range j < (n-6)/4")
        coords = [_odd_coordinate(n, j) for j in range(1, k + 1)]
    else:
        if n < 12 or k < 1 or 4 * k > n - 8:
            raise ConstructionError(
                f"even case needs n >= 12 and 1 <= k <= (n-8)/4 (got n={n}, k={k})",
                family=request.family,
                params=[n, k],
            )
        notes.append(
            "t read from its printed pairs (2j+6,n), ..., which sum to n+2j+6 and fix n/2+j+3; "
            "the printed fixed point (n+2j+4)/2 disagrees with them"
        )
        coords = [_even_coordinate(n, j) for j in range(1, k + 1)]

    def glue(index: int) -> Permutation:
        return direct_sum(*(c[index] for c in coords))

    x1, y1, t, x2, y2, u = (glue(i) for i in range(6))
    G = power_group(n, k, limits)
    s = BeauvilleStructure(G, (x1, y1), (x2, y2), name=f"alt_power({n},{k})")
    return with_reading(request, s, pair_conjugators(t, u), None, notes)


__all__ = [
    "alternating_group",
    "power_group",
    "alt_coprime_structure",
    "alt_4r_structure",
    "alt_power_structure",
]

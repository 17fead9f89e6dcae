# beauville_forge/core/constructions/mathieu.py
"""
Hard-coded structures on A5 x A5, M11 x M11 and M23 x M23.

Each group acts intransitively on two blocks of equal size and is generated
by the four structure elements. For A5 x A5 the inverting involution keeps
both blocks; for the Mathieu squares it is i <-> 2d+1-i, which swaps them.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from ..exceptions import ConstructionError
from ..groups import GroupHandle
from ..perm import Permutation, parse_cycles
from ..structures import BeauvilleStructure, OvergroupConjugation, StronglyRealWitness, StructureType
from .base import NO_LIMITS, Construction, FamilyRequest, Limits, register_family, span, with_reading

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class _Printed:
    half: int
    x1: str
    y1: str
    x2: str
    y2: str
    a: str
    expected: StructureType


def _swap(half: int) -> str:
    return "".join(f"({i},{2 * half + 1 - i})" for i in range(1, half + 1))


_DATA: Dict[str, _Printed] = {
    "A5xA5": _Printed(
        5,
        "(1,2,3,4,5)(6,7,8,9,10)",
        "(2,3,4)(7,10)(6,9)",
        "(1,4,3,2,5)(7,8,9)",
        "(1,2)(4,5)(6,9,8,7,10)",
        "(1,5)(2,4)(6,10)(7,9)",
        StructureType((5, 6, 5), (15, 10, 15)),
    ),
    "M11xM11": _Printed(
        11,
        "(1,2,3,4,5,6,7,8,9,10,11)(12,13,14,15,16,17,18,19,20,21,22)",
        "(1,6,10,5,2,7,4,9,11,8,3)(12,14,19,16,21,18,13,17,22,20,15)",
        "(1,3,9,11,10,7,2,4)(5,8)(12,14,20,22,19,21,16,13)(15,18)",
        "(2,6,9,4,8,3,7,5)(10,11)(12,13)(14,17,21,18,16,20,15,19)",
        _swap(11),
        StructureType((11, 11, 11), (8, 8, 8)),
    ),
    "M23xM23": _Printed(
        23,
        "(1,22,5,17,6,10,18,16,19,8,9,15,13,14,21,4,3,7,23,20,2,12,11)"
        "(24,40,44,43,26,33,34,32,38,39,28,31,29,37,41,30,42,25,46,36,35,45,27)",
        "(1,16,3,14,7,15,18,22,21,8,20,10,4,17,19,13,5,6,23,9,2,12,11)"
        "(24,41,42,34,28,30,43,37,27,39,26,25,29,32,40,33,44,31,46,36,35,45,38)",
        "(1,3,19,7,18,4,11,21,16,14,6)(2,23,9,17,15,20,22,10,13,12,8)"
        "(24,45,39,35,34,37,25,27,32,30,38)(26,36,43,29,40,28,44,46,41,33,31)",
        "(1,6,22,9,16,17,5,19,11,18,2)(3,14,13,23,4,12,15,10,7,21,8)"
        "(24,34,33,44,39,26,40,37,32,35,43)(25,41,46,45,29,36,28,42,30,31,38)",
        _swap(23),
        StructureType((23, 23, 23), (11, 11, 11)),
    ),
}

NAMES: Tuple[str, ...] = tuple(_DATA)


def printed_elements(name: str) -> Tuple[Permutation, ...]:
    """x1, y1, x2, y2 and the inverting involution a, in that order."""
    row = _DATA.get(name)
    if row is None:
        raise ConstructionError(
            f"unknown group; choose one of {', '.join(NAMES)}", family="mathieu_double", params=[name]
        )
    degree = 2 * row.half
    return tuple(parse_cycles(text, degree) for text in (row.x1, row.y1, row.x2, row.y2, row.a))


@register_family("mathieu_double")
def mathieu_double_structure(request: FamilyRequest, limits: Limits = NO_LIMITS) -> Construction:
    if len(request.params) != 1:
        raise ConstructionError("expected one group name", family=request.family, params=list(request.params))
    name = str(request.params[0])
    x1, y1, x2, y2, a = printed_elements(name)
    row = _DATA[name]
    blocks: List[List[int]] = [span(1, row.half), span(row.half + 1, 2 * row.half)]
    G = GroupHandle([x1, y1, x2, y2], orbit_blocks=blocks, name=name, **limits.handle_kwargs())
    s = BeauvilleStructure(G, (x1, y1), (x2, y2), name=f"mathieu_double({name})")
    logger.debug(f"mathieu_double({name}): degree {G.degree}")
    return with_reading(request, s, StronglyRealWitness(OvergroupConjugation(a)), row.expected)


__all__ = ["NAMES", "printed_elements", "mathieu_double_structure"]

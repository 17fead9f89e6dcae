# beauville_forge/core/structures/structure.py
"""Beauville structures, their types, and strongly-real witnesses."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field, replace
from typing import Any, Optional, Sequence, Tuple, Union

from ..groups import GroupHandle

Triple = Tuple[int, int, int]

_INT_LIST_RE = re.compile(r"-?\d+")


@dataclass(frozen=True)
class StructureType:
    """((o(x1), o(y1), o(x1 y1)), (o(x2), o(y2), o(x2 y2)))."""

    first: Triple
    second: Triple

    def __post_init__(self) -> None:
        for v in self.first + self.second:
            if v < 1:
                raise ValueError(f"element orders must be positive, got {v}")

    @classmethod
    def parse(cls, text: str) -> "StructureType":
        """Accept ``5,6,5,15,10,15`` or ``((5,6,5),(15,10,15))``."""
        values = [int(v) for v in _INT_LIST_RE.findall(text)]
        if len(values) != 6:
            raise ValueError(f"a type needs six orders, got {len(values)} in {text!r}")
        return cls(tuple(values[:3]), tuple(values[3:]))  # type: ignore[arg-type]

    @property
    def products(self) -> Tuple[int, int]:
        return math.prod(self.first), math.prod(self.second)

    def is_coprime(self) -> bool:
        a, b = self.products
        return math.gcd(a, b) == 1

    def swapped(self) -> "StructureType":
        return StructureType(self.second, self.first)

    def as_tuple(self) -> Tuple[Triple, Triple]:
        return (self.first, self.second)

    def __str__(self) -> str:
        f = ",".join(map(str, self.first))
        s = ",".join(map(str, self.second))
        return f"(({f}),({s}))"


# ---- witnesses --------------------------------------------------------------------


@dataclass(frozen=True)
class OvergroupConjugation:
    """phi(x) = tau^-1 x tau for tau in an ambient group normalizing G."""

    tau: Any
    ambient: Optional[GroupHandle] = field(default=None, compare=False)

    kind = "conjugation"

    def apply(self, x: Any) -> Any:
        return x.conjugate(self.tau)


@dataclass(frozen=True)
class AbelianInversion:
    """phi(x) = x^-1, an automorphism only of abelian groups."""

    kind = "inversion"

    def apply(self, x: Any) -> Any:
        return x.inverse()


Automorphism = Union[OvergroupConjugation, AbelianInversion]


@dataclass(frozen=True)
class StronglyRealWitness:
    """
    An automorphism phi with conjugators g1, g2 in G such that
    ``g_i phi(x_i) g_i^-1 == x_i^-1`` and likewise for y_i.

    Missing conjugators mean the identity.
    """

    automorphism: Automorphism
    g1: Optional[Any] = None
    g2: Optional[Any] = None

    def conjugators(self, identity: Any) -> Tuple[Any, Any]:
        return (
            self.g1 if self.g1 is not None else identity,
            self.g2 if self.g2 is not None else identity,
        )

    @property
    def uses_trivial_conjugators(self) -> bool:
        def trivial(g: Optional[Any]) -> bool:
            return g is None or g.is_identity()

        return trivial(self.g1) and trivial(self.g2)


# ---- structure --------------------------------------------------------------------


@dataclass(frozen=True)
class BeauvilleStructure:
    """
    Two generating pairs {{x1, y1}, {x2, y2}} of one group.

    Example:
        >>> from beauville_forge.core.perm import Permutation
        >>> c = Permutation.cycle([1, 2, 3, 4, 5], 5)
        >>> G = GroupHandle([c])
        >>> s = BeauvilleStructure(G, (c, c), (c, c))
        >>> str(s.type())
        '((5,5,5),(5,5,5))'
    """

    group: GroupHandle
    pair1: Tuple[Any, Any]
    pair2: Tuple[Any, Any]
    name: Optional[str] = None

    def __post_init__(self) -> None:
        for e in self.elements():
            self.group.check_element(e)

    def elements(self) -> Tuple[Any, Any, Any, Any]:
        return (self.pair1[0], self.pair1[1], self.pair2[0], self.pair2[1])

    def pairs(self) -> Tuple[Tuple[Any, Any], Tuple[Any, Any]]:
        return (self.pair1, self.pair2)

    def type(self) -> StructureType:
        order = self.group.element_order

        def triple(pair: Sequence[Any]) -> Triple:
            x, y = pair
            return (order(x), order(y), order(x * y))

        return StructureType(triple(self.pair1), triple(self.pair2))

    def swapped(self) -> "BeauvilleStructure":
        return replace(self, pair1=self.pair2, pair2=self.pair1)

    def conjugated(self, which: int, g: Any) -> "BeauvilleStructure":
        """Replace pair ``which`` (1 or 2) by its conjugate under g."""
        x, y = self.pair1 if which == 1 else self.pair2
        new = (x.conjugate(g), y.conjugate(g))
        return replace(self, pair1=new) if which == 1 else replace(self, pair2=new)

    def __str__(self) -> str:
        (x1, y1), (x2, y2) = self.pairs()
        label = f"{self.name}: " if self.name else ""
        return f"{label}{{{{{x1}, {y1}}}, {{{x2}, {y2}}}}}"


__all__ = [
    "Triple",
    "StructureType",
    "OvergroupConjugation",
    "AbelianInversion",
    "Automorphism",
    "StronglyRealWitness",
    "BeauvilleStructure",
]

# beauville_forge/core/groups/conjugacy.py
"""
Conjugacy fingerprints, class tables and the tiered conjugacy oracle.

A ClassKey pairs a cheap conjugation invariant (element order plus per-block
cycle types for permutations, the characteristic polynomial for matrices)
with an optional exact class identifier. Exact identifiers come from the
cheapest tier that applies to the group:

- symmetric / alternating: cycle type, plus the split label in A_n;
- blocks: the tuple of exact identifiers of the coordinates, valid when the
  group is the full direct product of its block projections (or factors);
- enumeration: the index of the class in the group's class table.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, FrozenSet, Hashable, List, Optional, Sequence, Tuple

from ..exceptions import BudgetExceededError, EnumerationUnavailableError
from ..field import char_poly
from ..perm import Permutation
from .handle import GroupHandle, restrict
from .product import ProductElement
from .tristate import TriState

logger = logging.getLogger(__name__)

ExactId = Tuple[Hashable, ...]


@dataclass(frozen=True)
class ClassKey:
    """Conjugation-invariant fingerprint, with the exact class id when known."""

    order: int
    shape: Tuple[Hashable, ...]
    exact_id: Optional[ExactId] = None

    @property
    def fingerprint(self) -> Tuple[int, Tuple[Hashable, ...]]:
        return (self.order, self.shape)

    @property
    def is_exact(self) -> bool:
        return self.exact_id is not None

    def __str__(self) -> str:
        text = f"o={self.order} shape={self.shape}"
        return f"{text} id={self.exact_id}" if self.exact_id is not None else text


@dataclass(frozen=True)
class ConjugacyClass:
    key: ClassKey
    representative: Any
    size: int


@dataclass(frozen=True)
class _ClassTable:
    classes: Tuple[ConjugacyClass, ...]
    class_of: Tuple[int, ...] = field(repr=False)


# ---- fingerprints -----------------------------------------------------------------


def _component_shape(x: Any) -> Hashable:
    if isinstance(x, Permutation):
        return x.cycle_type().lengths
    if isinstance(x, ProductElement):
        return tuple(_component_shape(c) for c in x)
    return char_poly(x).coefficients


def fingerprint(G: GroupHandle, x: Any) -> ClassKey:
    """Tier-1 key: equal for conjugate elements, never carries an exact id."""
    if G.kind == "permutation":
        shape = tuple(x.restricted_cycle_type(block) for block in G.blocks())
    elif G.kind == "matrix":
        shape = char_poly(x).coefficients
    else:
        shape = tuple(_component_shape(c) for c in x)
    return ClassKey(G.element_order(x), shape)


# ---- exact identifiers ------------------------------------------------------------


def _cycles_with_fixed(x: Permutation, points: Sequence[int]) -> List[Tuple[int, ...]]:
    moved = x.cycles()
    covered = {p for c in moved for p in c}
    fixed = [(p,) for p in points if p not in covered]
    # longest first; ties keep least-point order
    return sorted(moved + fixed, key=lambda c: -len(c))


def aligning_conjugator(a: Permutation, b: Permutation, points: Sequence[int]) -> Permutation:
    """
    Some h in Sym(points) with ``a.conjugate(h) == b``.

    Both permutations must fix every point outside ``points`` and share a cycle type.
    """
    images = list(range(a.degree))
    for ca, cb in zip(_cycles_with_fixed(a, points), _cycles_with_fixed(b, points)):
        if len(ca) != len(cb):
            raise ValueError("cycle types differ")
        for p, q in zip(ca, cb):
            images[p - 1] = q - 1
    return Permutation(images)


def _canonical_element(lengths: Sequence[int], points: Sequence[int], degree: int) -> Permutation:
    pts = list(points)
    cycles = []
    i = 0
    for ln in lengths:
        cycles.append(pts[i:i + ln])
        i += ln
    return Permutation.from_cycles([c for c in cycles if len(c) > 1], degree)


def _alternating_id(G: GroupHandle, x: Permutation) -> ExactId:
    points = G.moved_points()
    lengths = tuple(len(c) for c in _cycles_with_fixed(x, points))
    split = len(set(lengths)) == len(lengths) and all(ln % 2 == 1 for ln in lengths)
    if not split:
        return ("A", lengths)
    canonical = _canonical_element(lengths, points, x.degree)
    label = aligning_conjugator(canonical, x, points).parity()
    return ("A", lengths, label)


def _class_table(G: GroupHandle) -> _ClassTable:
    def build() -> _ClassTable:
        elements = G.enumerate()
        index = {e: i for i, e in enumerate(elements)}
        gens = [(s.inverse(), s) for s in G.generators]
        class_of = [-1] * len(elements)
        raw: List[List[int]] = []
        for start in range(len(elements)):
            if class_of[start] != -1:
                continue
            members = [start]
            class_of[start] = len(raw)
            head = 0
            while head < len(members):
                y = elements[members[head]]
                head += 1
                for s_inv, s in gens:
                    j = index[s_inv * y * s]
                    if class_of[j] == -1:
                        class_of[j] = len(raw)
                        members.append(j)
            raw.append(members)

        orders = [G.element_order(elements[m[0]]) for m in raw]
        ranking = sorted(range(len(raw)), key=lambda c: (orders[c], raw[c][0]))
        relabel = {old: new for new, old in enumerate(ranking)}
        classes = []
        for new, old in enumerate(ranking):
            rep = elements[raw[old][0]]
            key = fingerprint(G, rep)
            classes.append(ConjugacyClass(ClassKey(key.order, key.shape, ("C", new)), rep, len(raw[old])))
        logger.debug(f"{G.describe()}: {len(classes)} conjugacy classes")
        return _ClassTable(tuple(classes), tuple(relabel[c] for c in class_of))

    return G._cached("class_table", build)


def conjugacy_classes(G: GroupHandle) -> List[ConjugacyClass]:
    """
    Classes with exact ids, identity first, then by (order, first appearance).

    Raises:
        EnumerationUnavailableError: G does not fit the enumeration budget.
    """
    try:
        return list(_class_table(G).classes)
    except BudgetExceededError as e:
        raise EnumerationUnavailableError(
            "conjugacy classes need the element list", context={"budget": e.budget}
        ) from e


def class_id(G: GroupHandle, x: Any) -> Optional[ExactId]:
    """Exact class identifier of x in G, or None when no exact tier applies."""
    tier = G.exact_tier()
    if tier is None:
        return None
    if tier == "symmetric":
        return ("S", x.cycle_type().lengths)
    if tier == "alternating":
        return _alternating_id(G, x)
    if tier == "blocks":
        if G.kind == "permutation":
            parts = [class_id(G.projection(i), restrict(x, b)) for i, b in enumerate(G.blocks())]
        else:
            parts = [class_id(f, c) for f, c in zip(G.factors, x)]
        if any(p is None for p in parts):
            return None
        return ("B", tuple(parts))
    table = _class_table(G)
    return ("C", table.class_of[G._enumeration_index()[x]])


def class_key(G: GroupHandle, x: Any, *, exact: bool = True) -> ClassKey:
    key = fingerprint(G, x)
    if not exact:
        return key
    return ClassKey(key.order, key.shape, class_id(G, x))


# ---- oracle -----------------------------------------------------------------------


def are_conjugate(G: GroupHandle, a: Any, b: Any) -> TriState:
    """
    Tiered conjugacy test.

    Fingerprint mismatch refutes; otherwise the group's exact tier decides.
    Without an exact tier the answer is UNDETERMINED.
    """
    if a == b:
        return TriState.passed("identical elements", "reflexive")
    fa, fb = fingerprint(G, a), fingerprint(G, b)
    if fa != fb:
        return TriState.failed(f"fingerprints differ ({fa} vs {fb})", "fingerprint")
    tier = G.exact_tier()
    if tier is None:
        return TriState.undetermined("enumeration", "group exceeds the enumeration budget and no exact tier applies")
    ida, idb = class_id(G, a), class_id(G, b)
    if ida is None or idb is None:
        return TriState.undetermined(tier, "a coordinate has no exact tier")
    return TriState.of(ida == idb, f"class ids {ida} / {idb}", tier)


def power_class_set(G: GroupHandle, x: Any, *, exact: bool = True) -> FrozenSet[ClassKey]:
    """Keys of x^i for 1 <= i < o(x); the identity is excluded."""
    keys = set()
    n = G.element_order(x)
    p = x
    for _ in range(1, n):
        keys.add(class_key(G, p, exact=exact))
        p = p * x
    return frozenset(keys)


__all__ = [
    "ClassKey",
    "ConjugacyClass",
    "ExactId",
    "fingerprint",
    "class_id",
    "class_key",
    "conjugacy_classes",
    "are_conjugate",
    "power_class_set",
    "aligning_conjugator",
]

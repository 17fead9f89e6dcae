# beauville_forge/core/groups/handle.py
"""
GroupHandle: a finite group given by generators.

One handle type serves three element kinds:

- ``permutation``: Permutations of a fixed degree. Order and membership come
  from a stabilizer chain; orbit blocks may be declared for direct products
  realized on disjoint point sets.
- ``matrix``: SuzukiMatrix values over one FieldSpec. Order and membership
  need closure enumeration within the budget.
- ``product``: ProductElement tuples. When ``factors`` is given the handle is
  the full direct product of those factor handles.

Lazily computed data (chain, enumeration, projections, class tables) lives in
a per-handle cache guarded by a lock, so concurrent readers see one value.
"""

from __future__ import annotations

import logging
import math
import threading
from typing import Any, Callable, Dict, List, Literal, Optional, Sequence, Tuple

from ..exceptions import (
    BudgetExceededError,
    DegreeMismatchError,
    EnumerationUnavailableError,
)
from ..field import DEFAULT_ORDER_BOUND, FieldSpec, SuzukiMatrix
from ..perm import Permutation
from .product import ProductElement, element_order
from .stabilizer_chain import StabilizerChain

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_BUDGET = 1_000_000

ElementKind = Literal["permutation", "matrix", "product"]
ExactTier = Literal["symmetric", "alternating", "blocks", "enumeration"]

Block = Tuple[int, ...]


def kind_of(element: Any) -> ElementKind:
    if isinstance(element, Permutation):
        return "permutation"
    if isinstance(element, SuzukiMatrix):
        return "matrix"
    if isinstance(element, ProductElement):
        return "product"
    raise TypeError(f"unsupported group element type: {type(element).__name__}")


def restrict(x: Permutation, block: Sequence[int]) -> Permutation:
    """Action of x on a block it preserves, relabelled to 1..len(block) in sorted order."""
    points = sorted(block)
    position = {p: i for i, p in enumerate(points)}
    return Permutation._trusted(tuple(position[x(p)] for p in points))


class GroupHandle:
    """
    A finite group with lazily computed order, membership and enumeration.

    Args:
        generators: nonempty list of elements of one kind.
        orbit_blocks: permutation kind only; disjoint point sets, each mapped
            to itself by every generator and together covering every moved point.
        factors: product kind only; the handle is the full direct product.
        declared_order: order claimed by the caller (a hint for budget checks,
            cross-checked against enumeration when both exist).
        certificate: name of a structural generation certificate that applies
            to this group (``"suzuki"``), or None.
        enumeration_budget: closure enumeration limit.
        order_bound: bound for matrix element orders.

    Example:
        >>> a4 = GroupHandle([Permutation.cycle([1, 2, 3], 4), Permutation.cycle([2, 3, 4], 4)])
        >>> a4.order(), a4.contains(Permutation.from_cycles([(1, 2)], 4))
        (12, False)
    """

    def __init__(
        self,
        generators: Sequence[Any],
        *,
        orbit_blocks: Optional[Sequence[Sequence[int]]] = None,
        factors: Optional[Sequence["GroupHandle"]] = None,
        declared_order: Optional[int] = None,
        certificate: Optional[str] = None,
        name: Optional[str] = None,
        enumeration_budget: Optional[int] = None,
        order_bound: Optional[int] = None,
    ):
        gens = list(generators)
        if not gens:
            raise ValueError("a group handle needs at least one generator")
        self.kind: ElementKind = kind_of(gens[0])
        for g in gens[1:]:
            if kind_of(g) != self.kind:
                raise TypeError("generators of mixed element kinds")
        self.generators: Tuple[Any, ...] = tuple(gens)
        self.name = name
        self.declared_order = declared_order
        self.certificate = certificate
        self.enumeration_budget = enumeration_budget or DEFAULT_ENUMERATION_BUDGET
        self.order_bound = order_bound or DEFAULT_ORDER_BOUND

        self.degree: Optional[int] = None
        self.spec: Optional[FieldSpec] = None
        self.factors: Optional[Tuple["GroupHandle", ...]] = None
        self.orbit_blocks: Optional[Tuple[Block, ...]] = None

        if self.kind == "permutation":
            self.degree = gens[0].degree
            for g in gens:
                if g.degree != self.degree:
                    raise DegreeMismatchError("generators of different degree", left=self.degree, right=g.degree)
            if orbit_blocks is not None:
                self.orbit_blocks = self._validate_blocks(orbit_blocks)
        elif self.kind == "matrix":
            self.spec = gens[0].spec
            for g in gens:
                if g.spec != self.spec:
                    raise DegreeMismatchError("generators over different fields", left=self.spec, right=g.spec)
        else:
            width = len(gens[0])
            for g in gens:
                if len(g) != width:
                    raise DegreeMismatchError("product generators of different width", left=width, right=len(g))
            if factors is not None:
                if len(factors) != width:
                    raise DegreeMismatchError("factor count differs from element width", left=len(factors), right=width)
                self.factors = tuple(factors)

        if orbit_blocks is not None and self.kind != "permutation":
            raise ValueError("orbit blocks apply to permutation groups only")

        self._lock = threading.RLock()
        self._cache: Dict[str, Any] = {}

    # ---- construction helpers ----------------------------------------------------

    def _validate_blocks(self, blocks: Sequence[Sequence[int]]) -> Tuple[Block, ...]:
        seen: set = set()
        out: List[Block] = []
        for block in blocks:
            b = tuple(sorted(int(p) for p in block))
            if not b:
                raise ValueError("orbit blocks must be nonempty")
            for p in b:
                if p < 1 or p > self.degree:
                    raise ValueError(f"block point {p} outside 1..{self.degree}")
                if p in seen:
                    raise ValueError(f"point {p} appears in two orbit blocks")
                seen.add(p)
            out.append(b)
        for g in self.generators:
            for b in out:
                members = set(b)
                if any(g(p) not in members for p in b):
                    raise ValueError(f"generator {g} does not preserve block {list(b)}")
            stray = g.support() - seen
            if stray:
                raise ValueError(f"generator {g} moves points outside the orbit blocks: {sorted(stray)}")
        return tuple(out)

    def subgroup(self, generators: Sequence[Any], *, name: Optional[str] = None) -> "GroupHandle":
        """Handle for the subgroup generated by ``generators`` (inherits blocks and limits)."""
        return GroupHandle(
            generators,
            orbit_blocks=self.orbit_blocks,
            name=name,
            enumeration_budget=self.enumeration_budget,
            order_bound=self.order_bound,
        )

    def _cached(self, key: str, factory: Callable[[], Any]) -> Any:
        with self._lock:
            if key not in self._cache:
                self._cache[key] = factory()
            return self._cache[key]

    # ---- basic data --------------------------------------------------------------

    def identity(self) -> Any:
        return self.generators[0] ** 0

    def element_order(self, x: Any) -> int:
        return element_order(x, self.order_bound)

    def check_element(self, x: Any) -> None:
        """Raise when x has the wrong kind, degree or field."""
        if kind_of(x) != self.kind:
            raise TypeError(f"expected a {self.kind} element, got {type(x).__name__}")
        if self.kind == "permutation" and x.degree != self.degree:
            raise DegreeMismatchError("element degree differs from group degree", left=self.degree, right=x.degree)
        if self.kind == "matrix" and x.spec != self.spec:
            raise DegreeMismatchError("element field differs from group field", left=self.spec, right=x.spec)

    def blocks(self) -> Tuple[Block, ...]:
        """Declared orbit blocks, or one block of all points."""
        if self.orbit_blocks is not None:
            return self.orbit_blocks
        return (tuple(range(1, (self.degree or 0) + 1)),)

    def moved_points(self) -> Tuple[int, ...]:
        pts: set = set()
        for g in self.generators:
            pts |= g.support()
        return tuple(sorted(pts))

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a.commutes_with(b) for i, a in enumerate(gens) for b in gens[i + 1:])

    # ---- order and membership ----------------------------------------------------

    def chain(self) -> StabilizerChain:
        if self.kind != "permutation":
            raise TypeError("stabilizer chains exist for permutation groups only")
        return self._cached("chain", lambda: StabilizerChain.from_permutations(self.generators))

    def order(self) -> int:
        """
        Exact group order.

        Raises:
            BudgetExceededError: matrix kind (or an undeclared product) whose
                closure does not fit the enumeration budget.
        """
        if self.kind == "permutation":
            return self.chain().order()
        if self.kind == "product" and self.factors is not None:
            return math.prod(f.order() for f in self.factors)
        return len(self.enumerate())

    def contains(self, g: Any) -> bool:
        """
        Membership test.

        Raises:
            EnumerationUnavailableError: the group is only known through a
                closure that does not fit the budget.
        """
        self.check_element(g)
        if self.kind == "permutation":
            return self.chain().contains(g)
        if self.kind == "product" and self.factors is not None:
            return all(f.contains(c) for f, c in zip(self.factors, g))
        try:
            return g in self._enumeration_index()
        except BudgetExceededError as e:
            raise EnumerationUnavailableError(
                "membership needs the element list", context={"budget": e.budget, "group": self.name}
            ) from e

    # ---- enumeration -------------------------------------------------------------

    def _order_hint(self) -> Optional[int]:
        if self.kind == "permutation":
            return self.order()
        if self.kind == "product" and self.factors is not None:
            try:
                return self.order()
            except BudgetExceededError:
                return None
        return self.declared_order

    def enumerate(self, budget: Optional[int] = None) -> List[Any]:
        """
        Breadth-first closure of the generators, identity first.

        Raises:
            BudgetExceededError: more than ``budget`` elements (soft error).
        """
        limit = budget or self.enumeration_budget
        with self._lock:
            cached = self._cache.get("elements")
            if cached is not None:
                if len(cached) > limit:
                    raise BudgetExceededError("group larger than enumeration budget", budget=limit)
                return cached
            failed_at = self._cache.get("enumeration_failed_at")
            if failed_at is not None and limit <= failed_at:
                raise BudgetExceededError("group larger than enumeration budget", budget=limit)

            hint = self._order_hint()
            if hint is not None and hint > limit:
                self._cache["enumeration_failed_at"] = limit
                raise BudgetExceededError(f"group order {hint} exceeds enumeration budget", budget=limit)

            elements = [self.identity()]
            seen = {elements[0]}
            head = 0
            while head < len(elements):
                e = elements[head]
                head += 1
                for s in self.generators:
                    p = e * s
                    if p not in seen:
                        if len(elements) >= limit:
                            self._cache["enumeration_failed_at"] = limit
                            raise BudgetExceededError("closure exceeded enumeration budget", budget=limit)
                        seen.add(p)
                        elements.append(p)

            if self.kind == "permutation" and len(elements) != self.order():
                raise RuntimeError(f"closure size {len(elements)} disagrees with chain order {self.order()}")
            if self.declared_order is not None and len(elements) != self.declared_order:
                logger.warning(
                    f"Group {self.name or ''} enumerated {len(elements)} elements, declared order {self.declared_order}"
                )
            logger.debug(f"Enumerated {len(elements)} elements of {self.describe()}")
            self._cache["elements"] = elements
            return elements

    def _enumeration_index(self) -> Dict[Any, int]:
        elements = self.enumerate()
        return self._cached("element_index", lambda: {e: i for i, e in enumerate(elements)})

    def is_enumerable(self, budget: Optional[int] = None) -> bool:
        try:
            self.enumerate(budget)
            return True
        except BudgetExceededError:
            return False

    # ---- structure used by the conjugacy tiers -----------------------------------

    def projection(self, index: int) -> "GroupHandle":
        """Permutation kind: the group induced on orbit block ``index``."""
        block = self.blocks()[index]

        def build() -> GroupHandle:
            gens = [restrict(g, block) for g in self.generators]
            return GroupHandle(
                gens,
                name=f"{self.name or 'G'}|{index}",
                enumeration_budget=self.enumeration_budget,
                order_bound=self.order_bound,
            )

        return self._cached(f"projection:{index}", build)

    def symmetric_or_alternating(self) -> Optional[Literal["symmetric", "alternating"]]:
        """Recognize Sym/Alt on the moved points by order alone."""

        def detect() -> Optional[str]:
            if self.kind != "permutation":
                return None
            k = len(self.moved_points())
            order = self.order()
            if order == math.factorial(k):
                return "symmetric"
            if k >= 3 and 2 * order == math.factorial(k):
                return "alternating"
            return None

        return self._cached("sym_alt", detect)

    def exact_tier(self) -> Optional[ExactTier]:
        """Cheapest oracle that separates all conjugacy classes, or None."""

        def detect() -> Optional[str]:
            if self.kind == "permutation":
                sa = self.symmetric_or_alternating()
                if sa is not None:
                    return sa
                if len(self.blocks()) > 1:
                    projections = [self.projection(i) for i in range(len(self.blocks()))]
                    if math.prod(p.order() for p in projections) == self.order() and all(
                        p.exact_tier() is not None for p in projections
                    ):
                        return "blocks"
            elif self.kind == "product" and self.factors is not None:
                if all(f.exact_tier() is not None for f in self.factors):
                    return "blocks"
            return "enumeration" if self.is_enumerable() else None

        return self._cached("exact_tier", detect)

    # ---- dunder ------------------------------------------------------------------

    def describe(self) -> str:
        label = self.name or "G"
        if self.kind == "permutation":
            return f"{label} <{len(self.generators)} permutations on {self.degree} points>"
        if self.kind == "matrix":
            return f"{label} <{len(self.generators)} matrices over GF({self.spec.q})>"
        return f"{label} <{len(self.generators)} product elements>"

    def __repr__(self) -> str:
        return f"GroupHandle({self.describe()})"


__all__ = [
    "DEFAULT_ENUMERATION_BUDGET",
    "ElementKind",
    "ExactTier",
    "GroupHandle",
    "kind_of",
    "restrict",
]

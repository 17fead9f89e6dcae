# beauville_forge/core/groups/product.py
"""Elements of an external direct product, multiplied coordinatewise."""

from __future__ import annotations

import math
from typing import Any, Iterator, Sequence, Tuple

from ..exceptions import DegreeMismatchError


def element_order(x: Any, order_bound: int | None = None) -> int:
    """Order of a permutation, matrix or product element."""
    if isinstance(x, ProductElement):
        return x.order(order_bound)
    if order_bound is not None and hasattr(x, "spec"):
        return x.order(order_bound)
    return x.order()


class ProductElement:
    """
    A tuple of elements, one per factor.

    Example:
        >>> from beauville_forge.core.perm import Permutation
        >>> a = ProductElement([Permutation.cycle([1, 2, 3], 3), Permutation.cycle([1, 2], 2)])
        >>> a.order()
        6
    """

    __slots__ = ("components",)

    def __init__(self, components: Sequence[Any]):
        if not components:
            raise ValueError("a product element needs at least one component")
        self.components: Tuple[Any, ...] = tuple(components)

    def _check(self, other: "ProductElement") -> None:
        if len(self.components) != len(other.components):
            raise DegreeMismatchError(
                "product elements with different factor counts",
                left=len(self.components),
                right=len(other.components),
            )

    def __mul__(self, other: "ProductElement") -> "ProductElement":
        if not isinstance(other, ProductElement):
            return NotImplemented
        self._check(other)
        return ProductElement([a * b for a, b in zip(self.components, other.components)])

    def __pow__(self, k: int) -> "ProductElement":
        return ProductElement([a ** k for a in self.components])

    def inverse(self) -> "ProductElement":
        return ProductElement([a.inverse() for a in self.components])

    def conjugate(self, g: "ProductElement") -> "ProductElement":
        """``g^-1 * self * g``."""
        return g.inverse() * self * g

    def commutes_with(self, other: "ProductElement") -> bool:
        return self * other == other * self

    def is_identity(self) -> bool:
        return all(a.is_identity() for a in self.components)

    def order(self, order_bound: int | None = None) -> int:
        return math.lcm(*(element_order(a, order_bound) for a in self.components))

    def __iter__(self) -> Iterator[Any]:
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __getitem__(self, i: int) -> Any:
        return self.components[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProductElement):
            return NotImplemented
        return self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __str__(self) -> str:
        return "(" + ", ".join(str(a) for a in self.components) + ")"

    def __repr__(self) -> str:
        return f"ProductElement({self})"


__all__ = ["ProductElement", "element_order"]

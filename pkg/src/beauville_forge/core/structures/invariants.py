# beauville_forge/core/structures/invariants.py
"""Genera of the two curves and the Euler number of the surface, in exact arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Sequence, Union

from .structure import StructureType

Number = Union[int, str]


def genus(order: int, triple: Sequence[int]) -> Fraction:
    """g = 1 + |G|/2 * (1 - 1/a - 1/b - 1/c)."""
    if order < 1:
        raise ValueError("group order must be positive")
    if any(v < 1 for v in triple):
        raise ValueError("element orders must be positive")
    bracket = 1 - sum(Fraction(1, v) for v in triple)
    return 1 + Fraction(order, 2) * bracket


def _plain(v: Fraction) -> Number:
    return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


@dataclass(frozen=True)
class SurfaceInvariants:
    g1: Fraction
    g2: Fraction
    euler_number: Fraction
    chi: Fraction

    @property
    def integral(self) -> bool:
        return all(v.denominator == 1 for v in (self.g1, self.g2, self.euler_number))

    @property
    def curves_have_genus_at_least_two(self) -> bool:
        return self.g1 >= 2 and self.g2 >= 2

    def as_dict(self) -> Dict[str, Number]:
        return {
            "g1": _plain(self.g1),
            "g2": _plain(self.g2),
            "e": _plain(self.euler_number),
            "chi": _plain(self.chi),
        }

    def __str__(self) -> str:
        d = self.as_dict()
        return f"g1={d['g1']} g2={d['g2']} e={d['e']} chi={d['chi']}"


def surface_invariants(order: int, t: StructureType) -> SurfaceInvariants:
    """
    Riemann-Hurwitz for both curves, then e(S) = 4 (g1 - 1)(g2 - 1) / |G| and chi = e / 4.

    Example:
        >>> str(surface_invariants(3600, StructureType((5, 6, 5), (15, 10, 15))))
        'g1=781 g2=1381 e=1196 chi=299'
    """
    g1 = genus(order, t.first)
    g2 = genus(order, t.second)
    e = Fraction(4) * (g1 - 1) * (g2 - 1) / order
    return SurfaceInvariants(g1, g2, e, e / 4)


__all__ = ["genus", "SurfaceInvariants", "surface_invariants"]

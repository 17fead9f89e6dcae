# beauville_forge/core/groups/stabilizer_chain.py
"""
Deterministic Schreier-Sims for permutation groups.

Each level of the chain stores a base point, the strong generators added at
that level, and an explicit transversal: for every point ``a`` of the base
point's orbit a coset representative ``u`` with ``u(base) = a`` and its
inverse. New generators are sifted first and only non-members extend the
chain; after every extension all Schreier generators of the level are sifted
into the next level. Base points are the least moved point of the generator
that opened the level, and generators and orbit points are processed in a
fixed order, so orders and sift results are reproducible.

Internally permutations are 0-based image tuples and products are
left-to-right: ``_mul(p, q)[i] == q[p[i]]``.
"""

from __future__ import annotations

import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..exceptions import DegreeMismatchError
from ..perm import Permutation

logger = logging.getLogger(__name__)

Images = Tuple[int, ...]


def _mul(p: Images, q: Images) -> Images:
    return tuple([q[i] for i in p])


def _inv(p: Images) -> Images:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def _is_identity(p: Images) -> bool:
    return all(i == v for i, v in enumerate(p))


class _Level:
    __slots__ = ("degree", "base_point", "labels", "transversal", "stab")

    def __init__(self, degree: int):
        self.degree = degree
        self.base_point: Optional[int] = None
        self.labels: List[Images] = []
        # orbit point -> (u, u^-1) with u[base_point] == point
        self.transversal: Dict[int, Tuple[Images, Images]] = {}
        self.stab: Optional["_Level"] = None

    # ---- queries -----------------------------------------------------------------

    def strong_generators(self) -> List[Images]:
        if self.stab is None:
            return list(self.labels)
        return list(self.labels) + self.stab.strong_generators()

    def order(self) -> int:
        if self.base_point is None:
            return 1
        return len(self.transversal) * self.stab.order()

    def sift(self, p: Images) -> Tuple[Images, "_Level"]:
        """Strip p through this level and below; return the residue and the level it stopped at."""
        level = self
        while level.base_point is not None:
            entry = level.transversal.get(p[level.base_point])
            if entry is None:
                return p, level
            p = _mul(p, entry[1])
            level = level.stab
        return p, level

    # ---- construction ------------------------------------------------------------

    def add(self, g: Images) -> bool:
        """Make sure g lies in the group of this level; True when the chain grew."""
        residue, _ = self.sift(g)
        if _is_identity(residue):
            return False
        self._add_nonmember(residue)
        return True

    def _add_nonmember(self, g: Images) -> None:
        if self.base_point is None:
            self.base_point = next(i for i, v in enumerate(g) if i != v)
            identity = tuple(range(self.degree))
            self.transversal = {self.base_point: (identity, identity)}
            self.stab = _Level(self.degree)

        if g[self.base_point] == self.base_point:
            self.stab._add_nonmember(g)
        else:
            self.labels.append(g)

        self._rebuild_orbit()
        self._add_schreier_generators()

    def _rebuild_orbit(self) -> None:
        gens = self.strong_generators()
        identity = tuple(range(self.degree))
        transversal = {self.base_point: (identity, identity)}
        queue = [self.base_point]
        head = 0
        while head < len(queue):
            a = queue[head]
            head += 1
            u = transversal[a][0]
            for s in gens:
                b = s[a]
                if b not in transversal:
                    w = _mul(u, s)
                    transversal[b] = (w, _inv(w))
                    queue.append(b)
        self.transversal = transversal

    def _add_schreier_generators(self) -> None:
        gens = self.strong_generators()
        for a in sorted(self.transversal):
            u_a = self.transversal[a][0]
            for s in gens:
                b = s[a]
                # u_a * s * u_b^-1 fixes the base point
                schreier = _mul(_mul(u_a, s), self.transversal[b][1])
                if not _is_identity(schreier):
                    self.stab.add(schreier)


class StabilizerChain:
    """
    Base and strong generating set for a permutation group.

    Args:
        degree: number of points.
        generators: 0-based image tuples (or Permutations via ``from_permutations``).

    Example:
        >>> a, b = Permutation.from_cycles([(1, 2)], 3), Permutation.from_cycles([(1, 2, 3)], 3)
        >>> StabilizerChain.from_permutations([a, b]).order()
        6
    """

    def __init__(self, degree: int, generators: Iterable[Images] = ()):
        self.degree = degree
        self._root = _Level(degree)
        count = 0
        for g in generators:
            if len(g) != degree:
                raise DegreeMismatchError("generator degree differs from chain degree", left=degree, right=len(g))
            self._root.add(tuple(g))
            count += 1
        if logger.isEnabledFor(logging.DEBUG):
            logger.debug(
                f"Stabilizer chain on {degree} points from {count} generators: "
                f"base {self.base()} orbit sizes {self.orbit_sizes()}"
            )

    @classmethod
    def from_permutations(cls, generators: Sequence[Permutation], degree: Optional[int] = None) -> "StabilizerChain":
        if degree is None:
            if not generators:
                raise ValueError("degree is required for an empty generator list")
            degree = generators[0].degree
        return cls(degree, (g.images for g in generators))

    # ---- structure ---------------------------------------------------------------

    def _levels(self) -> List[_Level]:
        out = []
        level = self._root
        while level.base_point is not None:
            out.append(level)
            level = level.stab
        return out

    def base(self) -> List[int]:
        """Base points, 1-based."""
        return [lv.base_point + 1 for lv in self._levels()]

    def orbit_sizes(self) -> List[int]:
        return [len(lv.transversal) for lv in self._levels()]

    def strong_generators(self) -> List[Permutation]:
        return [Permutation._trusted(g) for g in self._root.strong_generators()]

    def order(self) -> int:
        """Product of the basic orbit lengths (exact, arbitrary precision)."""
        return self._root.order()

    # ---- membership --------------------------------------------------------------

    def sift(self, p: Permutation) -> Tuple[Permutation, int]:
        """Residue of p and the number of levels it passed."""
        if p.degree != self.degree:
            raise DegreeMismatchError("cannot sift", left=self.degree, right=p.degree)
        residue, stopped = self._root.sift(p.images)
        depth = 0
        level = self._root
        while level is not stopped:
            depth += 1
            level = level.stab
        return Permutation._trusted(residue), depth

    def contains(self, p: Permutation) -> bool:
        residue, _ = self.sift(p)
        return residue.is_identity()

    def extend(self, generators: Iterable[Permutation]) -> bool:
        """Add generators in place; True when the group grew."""
        grew = False
        for g in generators:
            if g.degree != self.degree:
                raise DegreeMismatchError("generator degree differs from chain degree", left=self.degree, right=g.degree)
            grew = self._root.add(g.images) or grew
        return grew

    def __repr__(self) -> str:
        return f"StabilizerChain(degree={self.degree}, base={self.base()}, order={self.order()})"


__all__ = ["StabilizerChain"]

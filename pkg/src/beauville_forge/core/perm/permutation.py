# beauville_forge/core/perm/permutation.py
"""
Permutations of {1..n} with cycle-notation I/O.

Conventions used everywhere in the package:

- Products act LEFT TO RIGHT: ``p * q`` applies ``p`` first, so
  ``(p * q)(i) == q(p(i))``.
- Conjugation x^g is spelled ``x.conjugate(g)`` and means
  ``g^-1 * x * g``.
- Points are 1-based in every public signature and in cycle notation; the
  image tuple is stored 0-based.
- Canonical printing lists cycles by least moved point, least point first,
  and omits fixed points. The identity prints as ``()``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Literal, NamedTuple, Sequence, Tuple

from ..exceptions import DegreeMismatchError, PermutationParseError

Parity = Literal["even", "odd"]

_INT_RE = re.compile(r"\d+")


@dataclass(frozen=True)
class CycleType:
    """Multiset of cycle lengths >= 2, largest first, plus the degree."""

    lengths: Tuple[int, ...]
    degree: int

    def __post_init__(self) -> None:
        if sum(self.lengths) > self.degree:
            raise ValueError(f"cycle lengths {self.lengths} exceed degree {self.degree}")

    @property
    def order(self) -> int:
        return math.lcm(*self.lengths) if self.lengths else 1

    @property
    def fixed_points(self) -> int:
        return self.degree - sum(self.lengths)

    def with_fixed_points(self) -> Tuple[int, ...]:
        """All cycle lengths including 1-cycles, largest first."""
        return self.lengths + (1,) * self.fixed_points

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.lengths)) + "}"


class PermutationInvariants(NamedTuple):
    order: int
    cycle_type: CycleType
    parity: Parity
    support: FrozenSet[int]


class Permutation:
    """
    Immutable bijection of {1..degree}.

    Args:
        images: 0-based images, ``images[i]`` is the image of point ``i``.

    Example:
        >>> p = Permutation.from_cycles([(1, 2, 3)], degree=4)
        >>> p(1), p(3), p(4)
        (2, 1, 4)
        >>> str(p * p.inverse())
        '()'
    """

    __slots__ = ("_images", "_hash")

    def __init__(self, images: Sequence[int]):
        imgs = tuple(images)
        if not imgs:
            raise ValueError("a permutation needs degree >= 1")
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError("images do not form a bijection of 0..n-1")
        self._images = imgs
        self._hash = hash(imgs)

    @classmethod
    def _trusted(cls, images: Tuple[int, ...]) -> "Permutation":
        # Internal constructor for products of valid permutations.
        p = cls.__new__(cls)
        p._images = images
        p._hash = hash(images)
        return p

    # ---- constructors ------------------------------------------------------------

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise ValueError("degree must be positive")
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """Build from 1-based disjoint cycles (validated)."""
        text = "".join("(" + ",".join(str(v) for v in c) + ")" for c in cycles)
        return parse_cycles(text, degree)

    @classmethod
    def from_images(cls, images: Sequence[int]) -> "Permutation":
        """Build from a 1-based image list, e.g. ``[2, 1, 3]`` is (1,2)."""
        return cls([v - 1 for v in images])

    @classmethod
    def cycle(cls, points: Sequence[int], degree: int) -> "Permutation":
        """A single cycle through ``points`` (1-based)."""
        return cls.from_cycles([points], degree)

    # ---- accessors ---------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self._images)

    @property
    def images(self) -> Tuple[int, ...]:
        """0-based image tuple."""
        return self._images

    def __call__(self, point: int) -> int:
        return self._images[point - 1] + 1

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self._images))

    # ---- algebra -----------------------------------------------------------------

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        return compose(self, other)

    def __pow__(self, k: int) -> "Permutation":
        return power(self, k)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self._images)
        for i, v in enumerate(self._images):
            inv[v] = i
        return Permutation._trusted(tuple(inv))

    def conjugate(self, g: "Permutation") -> "Permutation":
        """``g^-1 * self * g``."""
        return g.inverse() * self * g

    def commutes_with(self, other: "Permutation") -> bool:
        return self * other == other * self

    # ---- invariants --------------------------------------------------------------

    def cycles(self) -> List[Tuple[int, ...]]:
        """Canonical 1-based cycles of length >= 2."""
        seen = [False] * len(self._images)
        out: List[Tuple[int, ...]] = []
        for start in range(len(self._images)):
            if seen[start] or self._images[start] == start:
                continue
            cyc = [start + 1]
            seen[start] = True
            j = self._images[start]
            while j != start:
                seen[j] = True
                cyc.append(j + 1)
                j = self._images[j]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> CycleType:
        lengths = sorted((len(c) for c in self.cycles()), reverse=True)
        return CycleType(tuple(lengths), self.degree)

    def order(self) -> int:
        return self.cycle_type().order

    def parity(self) -> Parity:
        swaps = sum(len(c) - 1 for c in self.cycles())
        return "even" if swaps % 2 == 0 else "odd"

    def support(self) -> FrozenSet[int]:
        return frozenset(i + 1 for i, v in enumerate(self._images) if i != v)

    def invariants(self) -> PermutationInvariants:
        ct = self.cycle_type()
        return PermutationInvariants(ct.order, ct, self.parity(), self.support())

    def restricted_cycle_type(self, block: Sequence[int]) -> Tuple[int, ...]:
        """Cycle lengths >= 2 of the action on a union of cycles ``block`` (1-based)."""
        members = set(block)
        return tuple(
            sorted((len(c) for c in self.cycles() if c[0] in members), reverse=True)
        )

    # ---- dunder ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Permutation") -> bool:
        return self._images < other._images

    def __iter__(self) -> Iterator[int]:
        return (v + 1 for v in self._images)

    def __str__(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Permutation('{format_cycles(self)}', degree={self.degree})"


# ---- module-level operations ----------------------------------------------------


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Left-to-right product: the result maps i to q(p(i))."""
    if p.degree != q.degree:
        raise DegreeMismatchError("cannot compose permutations", left=p.degree, right=q.degree)
    qi = q.images
    return Permutation._trusted(tuple([qi[j] for j in p.images]))


def power(p: Permutation, k: int) -> Permutation:
    """k-fold product; negative k uses the inverse, k = 0 the identity."""
    if k < 0:
        p, k = p.inverse(), -k
    n = p.degree
    if k == 0:
        return Permutation.identity(n)
    # Walk each cycle k steps instead of repeated squaring.
    out = list(range(n))
    for cyc in p.cycles():
        length = len(cyc)
        shift = k % length
        for idx, point in enumerate(cyc):
            out[point - 1] = cyc[(idx + shift) % length] - 1
    return Permutation._trusted(tuple(out))


def direct_sum(*parts: Permutation) -> Permutation:
    """
    Block-diagonal permutation: the first part acts on 1..n1, the next on
    n1+1..n1+n2, and so on.

    Example:
        >>> a = Permutation.cycle([1, 2], 2)
        >>> str(direct_sum(a, a))
        '(1,2)(3,4)'
    """
    if not parts:
        raise ValueError("direct_sum needs at least one permutation")
    images: List[int] = []
    for p in parts:
        offset = len(images)
        images.extend(v + offset for v in p.images)
    return Permutation._trusted(tuple(images))


def invariants(p: Permutation) -> PermutationInvariants:
    return p.invariants()


def format_cycles(p: Permutation) -> str:
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)


def parse_cycles(text: str, degree: int) -> Permutation:
    """
    Parse ``perm := cycle* ; cycle := '(' int (',' int)* ')'`` with whitespace ignored.

    ``""`` and ``"()"`` give the identity. Each error names the character position
    (0-based) where parsing stopped.

    Raises:
        PermutationParseError: malformed syntax, point outside 1..degree, or a
            point used twice.
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    images = list(range(degree))
    used: set = set()
    pos = 0
    n = len(text)

    def skip_ws(i: int) -> int:
        while i < n and text[i].isspace():
            i += 1
        return i

    def fail(msg: str, at: int) -> PermutationParseError:
        return PermutationParseError(msg, text=text, position=at)

    pos = skip_ws(pos)
    while pos < n:
        if text[pos] != "(":
            raise fail(f"expected '(' but found {text[pos]!r}", pos)
        pos = skip_ws(pos + 1)
        if pos < n and text[pos] == ")":
            # "()" is the empty product
            pos = skip_ws(pos + 1)
            continue
        cycle: List[int] = []
        while True:
            m = _INT_RE.match(text, pos)
            if not m:
                found = repr(text[pos]) if pos < n else "end of input"
                raise fail(f"expected a point but found {found}", pos)
            point = int(m.group())
            if point < 1 or point > degree:
                raise fail(f"point {point} outside 1..{degree}", pos)
            if point in used:
                raise fail(f"repeated point {point}", pos)
            used.add(point)
            cycle.append(point)
            pos = skip_ws(m.end())
            if pos < n and text[pos] == ",":
                pos = skip_ws(pos + 1)
                continue
            if pos < n and text[pos] == ")":
                pos = skip_ws(pos + 1)
                break
            found = repr(text[pos]) if pos < n else "end of input"
            raise fail(f"expected ',' or ')' but found {found}", pos)
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            images[a - 1] = b - 1
    return Permutation._trusted(tuple(images))


def parse_image_list(text: str) -> Permutation:
    """Whitespace-separated 1-based images, e.g. ``"2 1 3"``."""
    tokens = text.split()
    try:
        values = [int(t) for t in tokens]
    except ValueError as e:
        raise PermutationParseError(f"non-integer image: {e}", text=text, position=0) from e
    if sorted(values) != list(range(1, len(values) + 1)):
        raise PermutationParseError("images are not a bijection of 1..n", text=text, position=0)
    return Permutation.from_images(values)


__all__ = [
    "Parity",
    "CycleType",
    "PermutationInvariants",
    "Permutation",
    "compose",
    "direct_sum",
    "power",
    "invariants",
    "format_cycles",
    "parse_cycles",
    "parse_image_list",
]

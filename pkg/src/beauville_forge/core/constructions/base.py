# beauville_forge/core/constructions/base.py
"""
Family requests, construction results and the family registry.

A family builder turns integer (or name) parameters into a Construction:
the structure, the witness, the type the source formulas promise, and
reading notes. ``construct`` then runs the verifier and records every
disagreement as a discrepancy; strict mode turns discrepancies into
ConstructionDiscrepancyError.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Dict, List, Literal, Optional, Sequence, Tuple, Union

from ..exceptions import ConstructionDiscrepancyError, ConstructionError
from ..perm import Permutation
from ..structures import (
    BeauvilleStructure,
    OvergroupConjugation,
    StronglyRealWitness,
    StructureType,
    VerificationReport,
    WitnessReport,
    derive_witness,
    inspect_witness,
    verify_structure,
)

logger = logging.getLogger(__name__)

Reading = Literal["literal", "curated"]
Param = Union[int, str]

READINGS: Tuple[str, ...] = ("literal", "curated")


@dataclass(frozen=True)
class FamilyRequest:
    """
    Which family to build, with which parameters.

    ``reading`` selects between the printed formulas (``literal``) and the
    printed pairs with derived witnesses (``curated``).
    """

    family: str
    params: Tuple[Param, ...] = ()
    reading: Reading = "literal"

    def __post_init__(self) -> None:
        if self.reading not in READINGS:
            raise ConstructionError(f"unknown reading '{self.reading}'", family=self.family, params=self.params)

    @classmethod
    def parse(cls, family: str, params: str = "", reading: Reading = "literal") -> "FamilyRequest":
        """Comma-separated parameter text; integer tokens become ints."""
        values: List[Param] = []
        for token in (t.strip() for t in params.split(",")):
            if not token:
                continue
            values.append(int(token) if token.lstrip("-").isdigit() else token)
        return cls(family, tuple(values), reading)

    def ints(self, count: int) -> Tuple[int, ...]:
        if len(self.params) != count or not all(isinstance(p, int) for p in self.params):
            raise ConstructionError(
                f"expected {count} integer parameter(s)", family=self.family, params=list(self.params)
            )
        return tuple(self.params)  # type: ignore[return-value]

    def __str__(self) -> str:
        return f"{self.family}({','.join(map(str, self.params))})"


@dataclass(frozen=True)
class Construction:
    """A built family instance, optionally with its verification results."""

    request: FamilyRequest
    structure: BeauvilleStructure
    witness: Optional[StronglyRealWitness]
    expected_type: Optional[StructureType] = None
    notes: Tuple[str, ...] = ()
    discrepancies: Tuple[str, ...] = ()
    report: Optional[VerificationReport] = field(default=None, compare=False)
    witness_report: Optional[WitnessReport] = field(default=None, compare=False)

    @property
    def verified(self) -> bool:
        return self.report is not None and not self.discrepancies

    def as_dict(self) -> Dict[str, Any]:
        return {
            "family": self.request.family,
            "params": list(self.request.params),
            "reading": self.request.reading,
            "expected_type": None if self.expected_type is None else str(self.expected_type),
            "type": str(self.structure.type()),
            "notes": list(self.notes),
            "discrepancies": list(self.discrepancies),
        }


@dataclass(frozen=True)
class Limits:
    """Enumeration budget and matrix order bound for the group handles a builder creates."""

    enumeration_budget: Optional[int] = None
    order_bound: Optional[int] = None

    def handle_kwargs(self) -> Dict[str, Optional[int]]:
        return {"enumeration_budget": self.enumeration_budget, "order_bound": self.order_bound}


NO_LIMITS = Limits()

Builder = Callable[[FamilyRequest, Limits], Construction]

_REGISTRY: Dict[str, Builder] = {}


def register_family(name: str) -> Callable[[Builder], Builder]:
    """Decorator adding a builder under ``name``."""

    def wrap(fn: Builder) -> Builder:
        if name in _REGISTRY:
            raise ValueError(f"family '{name}' registered twice")
        _REGISTRY[name] = fn
        return fn

    return wrap


def families() -> List[str]:
    return sorted(_REGISTRY)


def build(request: FamilyRequest, limits: Optional[Limits] = None) -> Construction:
    """Run the family builder without verification."""
    builder = _REGISTRY.get(request.family)
    if builder is None:
        raise ConstructionError(
            f"unknown family; choose one of {', '.join(families())}", family=request.family
        )
    return builder(request, limits or NO_LIMITS)


def with_reading(
    request: FamilyRequest,
    s: BeauvilleStructure,
    literal: StronglyRealWitness,
    expected: Optional[StructureType] = None,
    notes: Sequence[str] = (),
) -> Construction:
    """Attach the printed witness, or a derived one under the curated reading."""
    out = list(notes)
    witness = literal
    if request.reading == "curated":
        witness = derive_witness(s)
        out.append("witness derived from inverting permutations of both pairs")
    return Construction(request, s, witness, expected_type=expected, notes=tuple(out))


def check_construction(c: Construction) -> Construction:
    """Verify structure and witness; record every disagreement as a discrepancy."""
    s = c.structure
    report = verify_structure(s)
    found: List[str] = list(c.discrepancies)
    if not report.overall.is_pass:
        for label, st in (
            ("generation of pair 1", report.generation[0]),
            ("generation of pair 2", report.generation[1]),
            ("condition dagger", report.dagger),
        ):
            if not st.is_pass:
                found.append(f"{label}: {st}")
    if c.expected_type is not None and report.type != c.expected_type:
        found.append(f"type {report.type} differs from the promised {c.expected_type}")

    witness_report = None
    if c.witness is not None:
        witness_report = inspect_witness(s, c.witness, report=report)
        if not witness_report.verdict.is_pass:
            found.append(f"witness: {witness_report.verdict}")

    for d in found[len(c.discrepancies):]:
        logger.warning(f"{c.request}: {d}")
    return replace(c, discrepancies=tuple(found), report=report, witness_report=witness_report)


def construct(
    request: FamilyRequest,
    *,
    strict: bool = False,
    verify: bool = True,
    limits: Optional[Limits] = None,
) -> Construction:
    """
    Build a family instance and (by default) verify it.

    ``limits`` reaches every group handle the family creates.

    Raises:
        ConstructionError: parameters outside the family hypothesis.
        ConstructionDiscrepancyError: ``strict`` and verification disagreed
            with the source formulas.
    """
    c = build(request, limits)
    logger.info(f"Constructed {request} ({request.reading} reading), type {c.structure.type()}")
    if not verify:
        return c
    c = check_construction(c)
    if strict and c.discrepancies:
        raise ConstructionDiscrepancyError(
            "construction did not verify",
            family=request.family,
            params=list(request.params),
            discrepancies=c.discrepancies,
        )
    return c


# ---- helpers shared by the permutation families -----------------------------------


def cycle(points: Sequence[int], degree: int) -> Permutation:
    return Permutation.cycle(list(points), degree)


def span(a: int, b: int) -> List[int]:
    """a, a+1, ..., b when a <= b, else a, a-1, ..., b."""
    step = 1 if a <= b else -1
    return list(range(a, b + step, step))


def involution(pairs: Sequence[Tuple[int, int]], degree: int) -> Permutation:
    """Product of transpositions; duplicates and degenerate pairs (i, i) are dropped."""
    unique = sorted({(min(a, b), max(a, b)) for a, b in pairs if a != b})
    return Permutation.from_cycles(unique, degree)


def mirror(points: Sequence[int], c: int) -> List[Tuple[int, int]]:
    """
    Transpositions of the reflection i <-> c - i (indices mod the cycle length)
    of the cycle through ``points``; conjugation by it inverts that cycle.
    """
    L = len(points)
    pairs = []
    for i in range(L):
        j = (c - i) % L
        if i < j:
            pairs.append((points[i], points[j]))
    return pairs


def reflection(points: Sequence[int], fixed: int) -> List[Tuple[int, int]]:
    """The mirror of the cycle through ``points`` that fixes ``points[fixed]``."""
    return mirror(points, 2 * fixed)


def alternating_generators(points: Sequence[int], degree: int) -> List[Permutation]:
    """(p1,p2,p3) and a long cycle generating Alt on ``points`` (at least 3 points)."""
    pts = list(points)
    three = cycle(pts[:3], degree)
    long_cycle = pts if len(pts) % 2 == 1 else pts[1:]
    return [three, cycle(long_cycle, degree)]


def symmetric_generators(points: Sequence[int], degree: int) -> List[Permutation]:
    pts = list(points)
    return [cycle(pts[:2], degree), cycle(pts, degree)]


def pair_conjugators(a: Permutation, b: Permutation) -> StronglyRealWitness:
    """
    Witness with tau = a for pair 1 and conjugator g2 = b^-1 a for pair 2,
    given involutions a, b inverting pair 1 and pair 2 respectively.
    """
    g2 = b.inverse() * a
    return StronglyRealWitness(OvergroupConjugation(a), None, None if g2.is_identity() else g2)


__all__ = [
    "Reading",
    "READINGS",
    "FamilyRequest",
    "Construction",
    "Limits",
    "NO_LIMITS",
    "register_family",
    "families",
    "build",
    "check_construction",
    "construct",
    "with_reading",
]

# beauville_forge/core/structures/search.py
"""
Exhaustive searches for Beauville and strongly-real Beauville structures.

Both searches scan x over conjugacy-class representatives and y over all
elements in enumeration order. Sigma sets are unions of cached per-element
power class sets. A Sigma set containing one already recorded for a
generating pair is skipped before the (expensive) generation test, since
anything disjoint from it is disjoint from the recorded one too. The first
pair whose Sigma set misses a recorded one completes the structure.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

from tqdm import tqdm

from ..exceptions import EnumerationUnavailableError, WitnessError
from ..groups import ClassKey, GroupHandle, conjugacy_classes, power_class_set
from .structure import (
    AbelianInversion,
    Automorphism,
    BeauvilleStructure,
    OvergroupConjugation,
    StronglyRealWitness,
)

logger = logging.getLogger(__name__)

Pair = Tuple[Any, Any]
Sigma = FrozenSet[ClassKey]


@dataclass(frozen=True)
class SearchOutcome:
    structure: Optional[BeauvilleStructure]
    witness: Optional[StronglyRealWitness] = None
    exhaustive: bool = True
    pairs_examined: int = 0
    generating_sigmas: int = 0
    candidates: Tuple[str, ...] = field(default=())

    @property
    def found(self) -> bool:
        return self.structure is not None

    def describe(self) -> str:
        if self.found:
            kind = "strongly real Beauville structure" if self.witness is not None else "Beauville structure"
            return f"found {kind} of type {self.structure.type()}"
        if self.candidates:
            return f"no strongly real Beauville structure (exhaustive relative to {len(self.candidates)} automorphism candidates)"
        return "no Beauville structure (exhaustive)"


def _require_enumeration(G: GroupHandle) -> List[Any]:
    if G.exact_tier() is None or not G.is_enumerable():
        raise EnumerationUnavailableError(
            "search needs the full element list and exact classes", context={"group": G.name}
        )
    return G.enumerate()


class _Scanner:
    """Shared pair scan with per-element power-class caching."""

    def __init__(self, G: GroupHandle, progress: bool, label: str):
        self.G = G
        self.elements = _require_enumeration(G)
        self.order = len(self.elements)
        self.abelian = G.is_abelian()
        self.progress = progress
        self.label = label
        self._pc: Dict[Any, Sigma] = {}
        self.examined = 0

    def power_classes(self, z: Any) -> Sigma:
        cached = self._pc.get(z)
        if cached is None:
            cached = power_class_set(self.G, z)
            self._pc[z] = cached
        return cached

    def generates(self, x: Any, y: Any) -> bool:
        if self.abelian:
            if self.G.element_order(x) * self.G.element_order(y) < self.order:
                return False
        elif x.commutes_with(y):
            return False
        G = self.G
        if G.kind == "permutation":
            return G.subgroup([x, y]).order() == self.order
        return len(G.subgroup([x, y]).enumerate(budget=self.order)) == self.order

    def scan(self, accept: Callable[[Any, Any], Optional[Any]]) -> Optional[Tuple[Pair, Any, Pair, Any]]:
        """
        Return (pair_a, data_a, pair_b, data_b) for the first two accepted
        generating pairs with disjoint Sigma sets, or None.

        ``accept`` returns auxiliary data for acceptable pairs (None rejects).
        """
        recorded: List[Tuple[Sigma, Pair, Any]] = []
        recorded_set = set()
        reps = [c.representative for c in conjugacy_classes(self.G)]
        itr = reps
        if self.progress:
            itr = tqdm(reps, desc=self.label, total=len(reps))
        for x in itr:
            for y in self.elements:
                self.examined += 1
                S = self.power_classes(x) | self.power_classes(y) | self.power_classes(x * y)
                if S in recorded_set or any(r <= S for r, _, _ in recorded):
                    continue
                if not self.generates(x, y):
                    continue
                data = accept(x, y)
                if data is None:
                    continue
                for r, pair, rdata in recorded:
                    if r.isdisjoint(S):
                        return pair, rdata, (x, y), data
                recorded.append((S, (x, y), data))
                recorded_set.add(S)
                if logger.isEnabledFor(logging.DEBUG):
                    logger.debug(f"{self.label}: recorded Sigma #{len(recorded)} of size {len(S)} after {self.examined} pairs")
        self.recorded = len(recorded)
        return None


def search_beauville(G: GroupHandle, *, progress: bool = False) -> SearchOutcome:
    """
    First Beauville structure in deterministic scan order, or NONE (exhaustive).

    Raises:
        EnumerationUnavailableError: G is not enumerable with exact classes.
    """
    scanner = _Scanner(G, progress, "beauville search")
    hit = scanner.scan(lambda x, y: True)
    if hit is None:
        logger.info(f"Search on {G.describe()}: no Beauville structure after {scanner.examined} pairs")
        return SearchOutcome(None, None, True, scanner.examined, scanner.recorded)
    pair1, _, pair2, _ = hit
    s = BeauvilleStructure(G, pair1, pair2, name=f"search:{G.name or 'G'}")
    logger.info(f"Search on {G.describe()}: structure of type {s.type()} after {scanner.examined} pairs")
    return SearchOutcome(s, None, True, scanner.examined, 0)


def _validate_candidate(G: GroupHandle, phi: Automorphism) -> None:
    if isinstance(phi, AbelianInversion):
        if not G.is_abelian():
            raise WitnessError("inversion candidate on a non-abelian group", context={"group": G.name})
        return
    G.check_element(phi.tau)
    for gen in G.generators:
        if not G.contains(phi.apply(gen)):
            raise WitnessError("candidate tau does not normalize G", context={"tau": phi.tau})


def _describe_candidate(phi: Automorphism) -> str:
    if isinstance(phi, AbelianInversion):
        return "inversion"
    return "identity" if phi.tau.is_identity() else f"conjugation by {phi.tau}"


def search_strongly_real(
    G: GroupHandle,
    autos: Sequence[Automorphism] = (),
    *,
    progress: bool = False,
) -> SearchOutcome:
    """
    Search pairs inverted by one candidate automorphism (up to conjugators in G).

    The identity is always appended, so with the conjugators every inner
    automorphism is covered. A NONE result is exhaustive only relative to
    the candidates.

    Raises:
        EnumerationUnavailableError: G is not enumerable with exact classes.
        WitnessError: a candidate is not an automorphism of G.
    """
    candidates: List[Automorphism] = list(autos) + [OvergroupConjugation(G.identity())]
    for phi in candidates:
        _validate_candidate(G, phi)
    labels = tuple(_describe_candidate(phi) for phi in candidates)

    examined = 0
    for phi, label in zip(candidates, labels):
        scanner = _Scanner(G, progress, f"strongly real search ({label})")
        elements = scanner.elements
        inverses = {g: g.inverse() for g in elements}

        def inverter(x: Any, y: Any, phi: Automorphism = phi) -> Optional[Any]:
            px, py = phi.apply(x), phi.apply(y)
            x_inv, y_inv = x.inverse(), y.inverse()
            for g in elements:
                gi = inverses[g]
                if g * px * gi == x_inv and g * py * gi == y_inv:
                    return g
            return None

        hit = scanner.scan(inverter)
        examined += scanner.examined
        if hit is not None:
            pair1, g1, pair2, g2 = hit
            s = BeauvilleStructure(G, pair1, pair2, name=f"search:{G.name or 'G'}")
            w = StronglyRealWitness(
                phi,
                None if g1.is_identity() else g1,
                None if g2.is_identity() else g2,
            )
            logger.info(f"Strongly real search on {G.describe()}: found with {label} after {examined} pairs")
            return SearchOutcome(s, w, True, examined, 0, labels)
        logger.debug(f"Candidate {label}: no structure")

    logger.info(f"Strongly real search on {G.describe()}: none within {len(candidates)} candidates")
    return SearchOutcome(None, None, True, examined, 0, labels)


__all__ = ["SearchOutcome", "search_beauville", "search_strongly_real"]

# beauville_forge/core/structures/sigma.py
"""
Sigma sets and the disjointness condition.

Sigma(x, y) is the union of the conjugacy classes of all nontrivial powers of
x, y and xy. It is kept at class level: a set of ClassKeys.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, FrozenSet, Iterator, Set, Tuple

from ..groups import ClassKey, GroupHandle, TriState, power_class_set
from .structure import BeauvilleStructure

logger = logging.getLogger(__name__)

Fingerprint = Tuple[int, Tuple[Any, ...]]


@dataclass(frozen=True)
class SigmaSet:
    """Class keys of Sigma(x, y), identity excluded; ``exact`` when every key carries a class id."""

    keys: FrozenSet[ClassKey]
    exact: bool

    def fingerprints(self) -> Set[Fingerprint]:
        return {k.fingerprint for k in self.keys}

    def exact_ids(self) -> Set[Any]:
        return {k.exact_id for k in self.keys}

    def orders(self) -> Set[int]:
        return {k.order for k in self.keys}

    def __len__(self) -> int:
        return len(self.keys)

    def __iter__(self) -> Iterator[ClassKey]:
        return iter(sorted(self.keys, key=lambda k: (k.order, str(k.shape))))


def sigma(G: GroupHandle, x: Any, y: Any, *, exact: bool = True) -> SigmaSet:
    """Union of the power class sets of x, y and xy."""
    resolve = exact and G.exact_tier() is not None
    keys = (
        power_class_set(G, x, exact=resolve)
        | power_class_set(G, y, exact=resolve)
        | power_class_set(G, x * y, exact=resolve)
    )
    return SigmaSet(frozenset(keys), resolve and all(k.is_exact for k in keys))


def sigma_disjoint(G: GroupHandle, first: SigmaSet, second: SigmaSet) -> TriState:
    """
    Disjointness of two Sigma sets of G.

    Distinct fingerprints certify distinct classes, so fingerprint
    disjointness is enough for PASS. On a fingerprint collision the exact ids
    decide; without them the answer is UNDETERMINED.
    """
    shared = first.fingerprints() & second.fingerprints()
    if not shared:
        return TriState.passed("fingerprints disjoint", "fingerprint")
    if not (first.exact and second.exact):
        tier = G.exact_tier() or "enumeration"
        orders = sorted({f[0] for f in shared})
        return TriState.undetermined(
            tier, f"fingerprints of element orders {orders} collide and no exact class ids are available"
        )
    common = first.exact_ids() & second.exact_ids()
    if common:
        example = sorted(common, key=str)[0]
        return TriState.failed(f"{len(common)} shared classes, e.g. {example}", G.exact_tier())
    return TriState.passed(f"{len(shared)} fingerprint collisions separated by class ids", G.exact_tier())


def check_dagger(G: GroupHandle, s: BeauvilleStructure) -> TriState:
    """Sigma(x1, y1) and Sigma(x2, y2) meet only in the identity."""
    (x1, y1), (x2, y2) = s.pairs()
    cheap = sigma_disjoint(G, sigma(G, x1, y1, exact=False), sigma(G, x2, y2, exact=False))
    if cheap.is_pass or G.exact_tier() is None:
        return cheap
    logger.debug("Fingerprints collide; resolving exact class ids")
    return sigma_disjoint(G, sigma(G, x1, y1), sigma(G, x2, y2))


__all__ = ["SigmaSet", "sigma", "sigma_disjoint", "check_dagger"]

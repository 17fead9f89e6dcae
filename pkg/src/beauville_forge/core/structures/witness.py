# beauville_forge/core/structures/witness.py
"""
Finding inverting permutations and assembling strongly-real witnesses.

A permutation s inverts the pair (x, y) when ``x.conjugate(s) == x^-1`` and
``y.conjugate(s) == y^-1``. Pointwise this reads ``s(x(i)) = x^-1(s(i))``
(and the same for y), so once s(i) is chosen the whole orbit of i under
<x, y> is forced. The solver picks images for one orbit root at a time and
backtracks on conflicts.
"""

from __future__ import annotations

import logging
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from ..exceptions import WitnessError
from ..perm import Permutation
from .structure import BeauvilleStructure, OvergroupConjugation, StronglyRealWitness

logger = logging.getLogger(__name__)

DEFAULT_CANDIDATE_LIMIT = 100_000


def _orbits(gens: Sequence[Tuple[int, ...]], n: int) -> List[List[int]]:
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        orbit = [start]
        seen[start] = True
        head = 0
        while head < len(orbit):
            i = orbit[head]
            head += 1
            for g in gens:
                j = g[i]
                if not seen[j]:
                    seen[j] = True
                    orbit.append(j)
        out.append(orbit)
    return out


def inverters(x: Permutation, y: Permutation) -> Iterator[Permutation]:
    """
    Every permutation inverting both x and y, lazily.

    Orbit roots are taken in increasing order and candidate images in
    increasing order, so the sequence is deterministic.

    Example:
        >>> x = Permutation.cycle([1, 2, 3], 3)
        >>> [str(s) for s in inverters(x, x)]
        ['(2,3)', '(1,2)', '(1,3)']
    """
    n = x.degree
    xi, yi = x.images, y.images
    xv, yv = x.inverse().images, y.inverse().images
    # rule: s(g(i)) = h(s(i)) for (g, h) in these pairs
    rules = ((xi, xv), (yi, yv), (xv, xi), (yv, yi))
    orbits = _orbits((xi, yi), n)
    size_of = {}
    for orb in orbits:
        for p in orb:
            size_of[p] = len(orb)

    sigma: List[Optional[int]] = [None] * n
    used: Set[int] = set()

    def propagate(root: int, target: int) -> Optional[Dict[int, int]]:
        assigned = {root: target}
        taken = {target}
        queue = [root]
        while queue:
            i = queue.pop()
            v = assigned[i]
            for g, h in rules:
                j, w = g[i], h[v]
                if j in assigned:
                    if assigned[j] != w:
                        return None
                    continue
                if w in used or w in taken:
                    return None
                assigned[j] = w
                taken.add(w)
                queue.append(j)
        return assigned

    def solve(k: int) -> Iterator[Permutation]:
        if k == len(orbits):
            yield Permutation(sigma)  # type: ignore[arg-type]
            return
        root = orbits[k][0]
        for target in range(n):
            if target in used or size_of[target] != len(orbits[k]):
                continue
            assigned = propagate(root, target)
            if assigned is None:
                continue
            for i, v in assigned.items():
                sigma[i] = v
                used.add(v)
            yield from solve(k + 1)
            for i, v in assigned.items():
                sigma[i] = None
                used.discard(v)

    yield from solve(0)


def first_inverter(x: Permutation, y: Permutation) -> Optional[Permutation]:
    return next(inverters(x, y), None)


def derive_witness(
    s: BeauvilleStructure,
    *,
    candidate_limit: int = DEFAULT_CANDIDATE_LIMIT,
) -> StronglyRealWitness:
    """
    Witness with tau inverting pair 1, g1 = e and g2 = s2^-1 tau in G.

    ``s2`` runs over the inverters of pair 2 until the quotient lands in G;
    any inverter of pair 1 works for tau because inverters differ by the
    centralizer of G.

    Raises:
        WitnessError: not a permutation structure, a pair with no inverter,
            or no candidate within ``candidate_limit``.
    """
    G = s.group
    if G.kind != "permutation":
        raise WitnessError("witness derivation needs a permutation structure", context={"kind": G.kind})
    (x1, y1), (x2, y2) = s.pairs()
    tau = first_inverter(x1, y1)
    if tau is None:
        raise WitnessError("no permutation inverts the first pair", context={"structure": s.name})
    for count, sigma2 in enumerate(inverters(x2, y2), start=1):
        if count > candidate_limit:
            break
        g2 = sigma2.inverse() * tau
        if G.contains(g2):
            logger.debug(f"Derived witness tau={tau} g2={g2} after {count} candidates")
            return StronglyRealWitness(OvergroupConjugation(tau), None, None if g2.is_identity() else g2)
    raise WitnessError(
        "no inverter of the second pair differs from tau by an element of G",
        context={"structure": s.name, "limit": candidate_limit},
    )


__all__ = ["inverters", "first_inverter", "derive_witness", "DEFAULT_CANDIDATE_LIMIT"]

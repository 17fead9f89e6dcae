# beauville_forge/core/constructions/products.py
"""
Structures on direct products.

``product_double`` lifts a coprime structure {{x1, y1}, {x2, y2}} on G with
an inverting witness to G x G through the pairs ((x1, x2), (y1, y2)) and
((x2, x1), (y2, y1)); the witness acts diagonally. ``coprime_direct_product``
pairs coordinates of two structures on groups of coprime order.

Permutation factors are placed on disjoint point blocks; any other factor
kind yields a product-kind group of ProductElement tuples.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any, Callable, List, Optional, Tuple

from ..exceptions import ConstructionError
from ..groups import GroupHandle, ProductElement
from ..perm import direct_sum
from ..structures import (
    AbelianInversion,
    BeauvilleStructure,
    OvergroupConjugation,
    StronglyRealWitness,
    StructureType,
)
from .base import NO_LIMITS, Construction, FamilyRequest, Limits, construct, register_family

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Embedding:
    """G1 x G2 as a group handle, with the map (a, b) -> element of the product."""

    group: GroupHandle
    join: Callable[[Any, Any], Any]


def embed_product(G1: GroupHandle, G2: GroupHandle, *, name: Optional[str] = None) -> Embedding:
    e1, e2 = G1.identity(), G2.identity()
    label = name or f"{G1.name or 'G1'}x{G2.name or 'G2'}"
    if G1.kind == "permutation" and G2.kind == "permutation":

        def join(a: Any, b: Any) -> Any:
            return direct_sum(a, b)

        shift = G1.degree or 0
        blocks = [list(b) for b in G1.blocks()] + [[p + shift for p in b] for b in G2.blocks()]
        gens = [join(g, e2) for g in G1.generators] + [join(e1, g) for g in G2.generators]
        handle = GroupHandle(
            gens,
            orbit_blocks=blocks,
            name=label,
            enumeration_budget=G1.enumeration_budget,
            order_bound=G1.order_bound,
        )
        return Embedding(handle, join)

    def pair(a: Any, b: Any) -> Any:
        return ProductElement([a, b])

    gens = [pair(g, e2) for g in G1.generators] + [pair(e1, g) for g in G2.generators]
    handle = GroupHandle(
        gens,
        factors=[G1, G2],
        name=label,
        enumeration_budget=G1.enumeration_budget,
        order_bound=G1.order_bound,
    )
    return Embedding(handle, pair)


def _lift_witness(
    emb: Embedding,
    w1: Optional[StronglyRealWitness],
    w2: Optional[StronglyRealWitness],
    identities: Tuple[Any, Any],
) -> Optional[StronglyRealWitness]:
    """Block-diagonal witness; None when the two automorphisms cannot be combined."""
    if w1 is None or w2 is None:
        return None
    phi1, phi2 = w1.automorphism, w2.automorphism
    if isinstance(phi1, AbelianInversion) and isinstance(phi2, AbelianInversion):
        return StronglyRealWitness(AbelianInversion())
    if not (isinstance(phi1, OvergroupConjugation) and isinstance(phi2, OvergroupConjugation)):
        return None
    a1, b1 = w1.conjugators(identities[0])
    a2, b2 = w2.conjugators(identities[1])
    g1 = emb.join(a1, a2)
    g2 = emb.join(b1, b2)
    return StronglyRealWitness(
        OvergroupConjugation(emb.join(phi1.tau, phi2.tau)),
        None if g1.is_identity() else g1,
        None if g2.is_identity() else g2,
    )


def _combined_type(t1: StructureType, t2: StructureType) -> Tuple[int, int, int]:
    return tuple(math.lcm(a, b) for a, b in zip(t1.first, t2.first))  # type: ignore[return-value]


@register_family("product_double")
def product_double_structure(request: FamilyRequest, limits: Limits = NO_LIMITS) -> Construction:
    if not request.params or not isinstance(request.params[0], str):
        raise ConstructionError(
            "expected a base family followed by its parameters, e.g. alt_coprime,6",
            family=request.family,
            params=list(request.params),
        )
    base_request = FamilyRequest(request.params[0], tuple(request.params[1:]), request.reading)
    base = construct(base_request, limits=limits)
    return product_double(base, request=request)


def product_double(base: Construction, *, request: Optional[FamilyRequest] = None) -> Construction:
    """
    Lift a verified coprime construction on G to G x G.

    Raises:
        ConstructionError: the base type is not coprime, the base did not
            verify, it has no passing witness, or (literal reading) its witness
            needs nontrivial conjugators.
    """
    if request is None:
        origin = base.request
        request = FamilyRequest("product_double", (origin.family, *origin.params), origin.reading)
    params = list(request.params)
    report = base.report
    if report is None:
        raise ConstructionError("base construction was not verified", family=request.family, params=params)
    if not report.coprime:
        raise ConstructionError(f"base type {report.type} is not coprime", family=request.family, params=params)
    if not report.overall.is_pass:
        raise ConstructionError(
            f"base structure did not verify: {report.overall}", family=request.family, params=params
        )
    w = base.witness
    if w is None or base.witness_report is None or not base.witness_report.verdict.is_pass:
        raise ConstructionError("base structure has no passing witness", family=request.family, params=params)
    notes: List[str] = [f"base {base.request}"]
    if not w.uses_trivial_conjugators:
        if request.reading == "literal":
            raise ConstructionError(
                "base witness uses nontrivial conjugators; the curated reading lifts them",
                family=request.family,
                params=params,
            )
        notes.append("conjugators lifted as (g1, g2) on the first pair and (g2, g1) on the second")

    s = base.structure
    G = s.group
    emb = embed_product(G, G, name=f"{G.name or 'G'}^2")
    (x1, y1), (x2, y2) = s.pairs()
    join = emb.join
    pair1 = (join(x1, x2), join(y1, y2))
    pair2 = (join(x2, x1), join(y2, y1))
    lifted = BeauvilleStructure(emb.group, pair1, pair2, name=f"product_double({base.request})")

    e = G.identity()
    witness: Optional[StronglyRealWitness]
    phi = w.automorphism
    if isinstance(phi, AbelianInversion):
        witness = StronglyRealWitness(AbelianInversion())
    else:
        g1, g2 = w.conjugators(e)
        k1, k2 = join(g1, g2), join(g2, g1)
        witness = StronglyRealWitness(
            OvergroupConjugation(join(phi.tau, phi.tau)),
            None if k1.is_identity() else k1,
            None if k2.is_identity() else k2,
        )

    triple = _combined_type(report.type, report.type.swapped())
    expected = StructureType(triple, triple)
    logger.debug(f"product_double: lifted {base.request} to {emb.group.describe()}")
    return Construction(request, lifted, witness, expected_type=expected, notes=tuple(notes))


def coprime_direct_product(c1: Construction, c2: Construction) -> Construction:
    """
    Coordinatewise structure on G1 x G2 for |G1| and |G2| coprime.

    Each entry of the type is the product of the coordinate orders. The
    witness is block-diagonal when both witnesses are conjugations or both
    are inversions; otherwise the result carries no witness.

    Raises:
        ConstructionError: the orders are not coprime.
    """
    s1, s2 = c1.structure, c2.structure
    G1, G2 = s1.group, s2.group
    request = FamilyRequest("coprime_product", (str(c1.request), str(c2.request)), c1.request.reading)
    o1, o2 = G1.order(), G2.order()
    if math.gcd(o1, o2) != 1:
        raise ConstructionError(
            f"group orders {o1} and {o2} are not coprime", family=request.family, params=list(request.params)
        )
    emb = embed_product(G1, G2)
    join = emb.join
    pairs = [
        (join(a[0], b[0]), join(a[1], b[1]))
        for a, b in zip(s1.pairs(), s2.pairs())
    ]
    s = BeauvilleStructure(emb.group, pairs[0], pairs[1], name=f"{s1.name}x{s2.name}")
    witness = _lift_witness(emb, c1.witness, c2.witness, (G1.identity(), G2.identity()))
    notes: List[str] = []
    if witness is None and (c1.witness is not None or c2.witness is not None):
        notes.append("witnesses of different kinds do not combine; no witness attached")
    t1, t2 = s1.type(), s2.type()
    expected = StructureType(
        tuple(a * b for a, b in zip(t1.first, t2.first)),  # type: ignore[arg-type]
        tuple(a * b for a, b in zip(t1.second, t2.second)),  # type: ignore[arg-type]
    )
    return Construction(request, s, witness, expected_type=expected, notes=tuple(notes))


__all__ = [
    "Embedding",
    "embed_product",
    "product_double",
    "product_double_structure",
    "coprime_direct_product",
]

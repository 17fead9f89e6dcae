# beauville_forge/core/structures/verify.py
"""
Verification of generation, condition dagger, and strongly-real witnesses.

Generation is decided per element kind:

- permutation: stabilizer-chain order of <x, y> against |G|;
- matrix: closure enumeration within the budget, or the Suzuki structural
  certificate when the group carries it;
- product: closure when it fits, otherwise the coprime-projection rule
  (each coordinate generates its factor, and suitable powers isolate each
  factor).
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..exceptions import (
    BudgetExceededError,
    EnumerationUnavailableError,
    MembershipError,
    WitnessError,
)
from ..field import share_eigenvector
from ..groups import GroupHandle, TriState, combine
from .sigma import check_dagger
from .structure import (
    AbelianInversion,
    BeauvilleStructure,
    OvergroupConjugation,
    StronglyRealWitness,
    StructureType,
)

logger = logging.getLogger(__name__)

Pair = Tuple[Any, Any]

_LABELS = ("x1", "y1", "x2", "y2")


# ---- generation -------------------------------------------------------------------


def _membership(G: GroupHandle, g: Any) -> Optional[bool]:
    try:
        return G.contains(g)
    except EnumerationUnavailableError:
        return None


def suzuki_certificate(G: GroupHandle, x: Any, y: Any) -> TriState:
    """
    Structural generation test for Sz(q) in its natural representation.

    Either all of x, y, xy have order q - 1 while x and y neither commute nor
    share an eigenvector, or x and y have orders dividing q +/- 2^(n+1) + 1
    (other than 1, 2, 4), xy is an involution, and the trace of x or y lies
    outside every proper subfield.
    """
    spec = G.spec
    q, s = spec.q, spec.twist
    ox, oy, oxy = G.element_order(x), G.element_order(y), G.element_order(x * y)
    if ox == oy == oxy == q - 1:
        if x.commutes_with(y):
            return TriState.undetermined("structural certificate", "elements of order q-1 commute")
        if share_eigenvector(x, y):
            return TriState.undetermined("structural certificate", "common eigenvector")
        return TriState.passed(
            f"structural certificate: x, y, xy of order {q - 1} with no common eigenvector",
            "structural certificate",
        )

    def torus_order(o: int) -> bool:
        return o not in (1, 2, 4) and ((q + s + 1) % o == 0 or (q - s + 1) % o == 0)

    if torus_order(ox) and torus_order(oy) and oxy == 2:
        if not spec.in_proper_subfield(x.trace()) or not spec.in_proper_subfield(y.trace()):
            return TriState.passed(
                f"structural certificate: orders {ox}, {oy} divide q+/-2^(n+1)+1, o(xy)=2, trace outside subfields",
                "structural certificate",
            )
        return TriState.undetermined("structural certificate", "both traces lie in a proper subfield")
    return TriState.undetermined("structural certificate", f"orders ({ox},{oy},{oxy}) match no criterion")


def _closure_generation(G: GroupHandle, x: Any, y: Any) -> TriState:
    order = G.order()
    if order > G.enumeration_budget:
        raise BudgetExceededError(f"group order {order} exceeds enumeration budget", budget=G.enumeration_budget)
    H = G.subgroup([x, y])
    size = len(H.enumerate(budget=order))
    return TriState.of(size == order, f"|<x,y>| = {size}, |G| = {order}", "closure")


def _coprime_projection(G: GroupHandle, x: Any, y: Any) -> TriState:
    factors = G.factors
    for i, f in enumerate(factors):
        st = verify_generation(f, (x[i], y[i]))
        if st.is_fail:
            return TriState.failed(f"coordinate {i + 1} does not generate its factor: {st.reason}", "coprime projection")
        if st.is_undetermined:
            return st
    for i, f in enumerate(factors):
        others = [j for j in range(len(factors)) if j != i]
        ex = math.lcm(*(f.element_order(x[j]) for j in others)) if others else 1
        ey = math.lcm(*(f.element_order(y[j]) for j in others)) if others else 1
        if math.gcd(ex, f.element_order(x[i])) == 1 and math.gcd(ey, f.element_order(y[i])) == 1:
            continue
        st = verify_generation(f, (x[i] ** ex, y[i] ** ey))
        if not st.is_pass:
            return TriState.undetermined(
                "coprime projection", f"powers x^{ex}, y^{ey} do not isolate factor {i + 1}"
            )
    return TriState.passed("each factor isolated by coprime powers", "coprime projection")


def verify_generation(G: GroupHandle, pair: Pair) -> TriState:
    """PASS iff <x, y> = G; UNDETERMINED when no tier can decide."""
    x, y = pair
    cache: Dict[Pair, TriState] = G._cached("generation", dict)
    if (x, y) in cache:
        return cache[(x, y)]

    for label, e in (("x", x), ("y", y)):
        if _membership(G, e) is False:
            result = TriState.failed(f"{label} is not an element of G", "membership")
            cache[(x, y)] = result
            return result

    if G.kind == "permutation":
        order = G.order()
        sub = G.subgroup([x, y]).order()
        result = TriState.of(sub == order, f"|<x,y>| = {sub}, |G| = {order}", "stabilizer chain")
    else:
        try:
            result = _closure_generation(G, x, y)
        except BudgetExceededError as e:
            if G.kind == "matrix" and G.certificate == "suzuki":
                result = suzuki_certificate(G, x, y)
            elif G.kind == "product" and G.factors is not None:
                result = _coprime_projection(G, x, y)
            else:
                result = TriState.undetermined("closure", f"enumeration budget {e.budget} exceeded")
    cache[(x, y)] = result
    return result


# ---- structures -------------------------------------------------------------------


@dataclass(frozen=True)
class VerificationReport:
    generation: Tuple[TriState, TriState]
    dagger: TriState
    type: StructureType
    coprime: bool
    overall: TriState
    group_order: Optional[int] = None
    notes: Tuple[str, ...] = ()

    def as_dict(self) -> Dict[str, Any]:
        return {
            "generation": [_state(s) for s in self.generation],
            "dagger": _state(self.dagger),
            "type": [list(self.type.first), list(self.type.second)],
            "coprime": self.coprime,
            "overall": _state(self.overall),
            "group_order": None if self.group_order is None else str(self.group_order),
            "notes": list(self.notes),
        }


def _state(s: TriState) -> Dict[str, Any]:
    return {"verdict": s.verdict.value, "reason": s.reason, "tier": s.tier}


def _known_order(G: GroupHandle) -> Optional[int]:
    try:
        return G.order()
    except BudgetExceededError:
        return None


def verify_structure(s: BeauvilleStructure) -> VerificationReport:
    """
    Both generation checks, condition dagger, type and coprimality.

    Raises:
        MembershipError: an element is known to lie outside the group.
    """
    G = s.group
    for label, e in zip(_LABELS, s.elements()):
        if _membership(G, e) is False:
            raise MembershipError(f"{label} is not an element of the group", context={"group": G.name, "element": e})

    gen1 = verify_generation(G, s.pair1)
    gen2 = verify_generation(G, s.pair2)
    dagger = check_dagger(G, s)
    t = s.type()
    coprime = t.is_coprime()
    overall = combine([gen1, gen2, dagger])

    notes: List[str] = []
    if coprime and gen1.is_pass and gen2.is_pass and not dagger.is_pass:
        notes.append(f"coprime type {t} but dagger is {dagger.verdict.value}")
        logger.error(f"Consistency check failed for {s.name or 'structure'}: {notes[-1]}")

    logger.info(f"Verified {s.name or 'structure'}: {overall.verdict.value}, type {t}, coprime={coprime}")
    return VerificationReport((gen1, gen2), dagger, t, coprime, overall, _known_order(G), tuple(notes))


# ---- strongly real ----------------------------------------------------------------


@dataclass(frozen=True)
class WitnessReport:
    verdict: TriState
    equations: Tuple[bool, bool, bool, bool]
    structure_verified: bool
    phi_squared_inner: Optional[bool] = None
    notes: Tuple[str, ...] = field(default=())

    def as_dict(self) -> Dict[str, Any]:
        return {
            "verdict": _state(self.verdict),
            "equations": dict(zip(_LABELS, self.equations)),
            "structure_verified": self.structure_verified,
            "phi_squared_inner": self.phi_squared_inner,
            "notes": list(self.notes),
        }


def inspect_witness(
    s: BeauvilleStructure,
    w: StronglyRealWitness,
    *,
    report: Optional[VerificationReport] = None,
) -> WitnessReport:
    """
    Check ``g_i phi(x_i) g_i^-1 == x_i^-1`` and the same for y_i, literally.

    Also reports whether phi squared is inner (conjugation witnesses: tau^2 in G).

    Raises:
        WitnessError: inversion on a non-abelian group, tau not normalizing G,
            or a conjugator outside G.
    """
    G = s.group
    phi = w.automorphism
    notes: List[str] = []
    if isinstance(phi, AbelianInversion) and not G.is_abelian():
        raise WitnessError("inversion is an automorphism only of abelian groups", context={"group": G.name})

    g1, g2 = w.conjugators(G.identity())
    for label, g in (("g1", g1), ("g2", g2)):
        G.check_element(g)
        if _membership(G, g) is False:
            raise WitnessError(f"conjugator {label} is not an element of G", context={"element": g})

    equations: List[bool] = []
    for g, (x, y) in ((g1, s.pair1), (g2, s.pair2)):
        g_inv = g.inverse()
        for z in (x, y):
            equations.append(g * phi.apply(z) * g_inv == z.inverse())
    failing = [label for label, ok in zip(_LABELS, equations) if not ok]
    if failing:
        verdict = TriState.failed(f"inversion fails for {', '.join(failing)}", "witness")
    else:
        verdict = TriState.passed("all four inversion equations hold", "witness")

    if report is None:
        report = verify_structure(s)
    structure_verified = report.overall.is_pass

    phi_squared: Optional[bool] = True
    if isinstance(phi, OvergroupConjugation):
        G.check_element(phi.tau)
        unknown = False
        for gen in G.generators:
            inside = _membership(G, phi.apply(gen))
            if inside is False:
                raise WitnessError("tau does not normalize G", context={"generator": gen})
            unknown = unknown or inside is None
        if unknown:
            if all(equations) and report.generation[0].is_pass:
                notes.append("normalization follows from the inverted generating pair")
            elif verdict.is_pass:
                verdict = TriState.undetermined("membership", "cannot confirm that tau normalizes G")
        phi_squared = _membership(G, phi.tau * phi.tau)

    if verdict.is_pass and not structure_verified:
        verdict = TriState.passed(
            f"witness equations only; structure verdict {report.overall.verdict.value}", "witness"
        )
        notes.append("structure did not verify; verdict covers the witness equations only")

    logger.info(f"Witness for {s.name or 'structure'}: {verdict.verdict.value}")
    return WitnessReport(verdict, tuple(equations), structure_verified, phi_squared, tuple(notes))  # type: ignore[arg-type]


def verify_strongly_real(
    s: BeauvilleStructure,
    w: StronglyRealWitness,
    *,
    report: Optional[VerificationReport] = None,
) -> TriState:
    """Verdict of ``inspect_witness``."""
    return inspect_witness(s, w, report=report).verdict


__all__ = [
    "suzuki_certificate",
    "verify_generation",
    "VerificationReport",
    "verify_structure",
    "WitnessReport",
    "inspect_witness",
    "verify_strongly_real",
]

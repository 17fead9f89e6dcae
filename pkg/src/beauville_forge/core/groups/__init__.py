"""
Finite-group services over permutations, Suzuki matrices and direct products.

Main exports:
    - GroupHandle: generators plus lazily computed order, membership and enumeration
    - StabilizerChain: deterministic Schreier-Sims
    - are_conjugate / power_class_set: the tiered conjugacy oracle
    - TriState: PASS / FAIL / UNDETERMINED verdicts
"""

from .conjugacy import (
    ClassKey,
    ConjugacyClass,
    aligning_conjugator,
    are_conjugate,
    class_id,
    class_key,
    conjugacy_classes,
    fingerprint,
    power_class_set,
)
from .handle import DEFAULT_ENUMERATION_BUDGET, ElementKind, GroupHandle, kind_of, restrict
from .product import ProductElement, element_order
from .stabilizer_chain import StabilizerChain
from .tristate import TriState, Verdict, combine

__all__ = [
    "ClassKey",
    "ConjugacyClass",
    "aligning_conjugator",
    "are_conjugate",
    "class_id",
    "class_key",
    "conjugacy_classes",
    "fingerprint",
    "power_class_set",
    "DEFAULT_ENUMERATION_BUDGET",
    "ElementKind",
    "GroupHandle",
    "kind_of",
    "restrict",
    "ProductElement",
    "element_order",
    "StabilizerChain",
    "TriState",
    "Verdict",
    "combine",
]

"""
Beauville structures: definitions, verification, witnesses and searches.

Main exports:
    - BeauvilleStructure / StructureType: two generating pairs and their type
    - verify_structure: generation, condition dagger, type and coprimality
    - verify_strongly_real / inspect_witness: the four inversion equations
    - surface_invariants: genera, Euler number and chi in exact arithmetic
    - search_beauville / search_strongly_real: exhaustive scans for small groups
"""

from .invariants import SurfaceInvariants, genus, surface_invariants
from .search import SearchOutcome, search_beauville, search_strongly_real
from .sigma import SigmaSet, check_dagger, sigma, sigma_disjoint
from .structure import (
    AbelianInversion,
    Automorphism,
    BeauvilleStructure,
    OvergroupConjugation,
    StronglyRealWitness,
    StructureType,
    Triple,
)
from .verify import (
    VerificationReport,
    WitnessReport,
    inspect_witness,
    suzuki_certificate,
    verify_generation,
    verify_strongly_real,
    verify_structure,
)
from .witness import DEFAULT_CANDIDATE_LIMIT, derive_witness, first_inverter, inverters

__all__ = [
    "SurfaceInvariants",
    "genus",
    "surface_invariants",
    "SearchOutcome",
    "search_beauville",
    "search_strongly_real",
    "SigmaSet",
    "check_dagger",
    "sigma",
    "sigma_disjoint",
    "AbelianInversion",
    "Automorphism",
    "BeauvilleStructure",
    "OvergroupConjugation",
    "StronglyRealWitness",
    "StructureType",
    "Triple",
    "VerificationReport",
    "WitnessReport",
    "inspect_witness",
    "suzuki_certificate",
    "verify_generation",
    "verify_strongly_real",
    "verify_structure",
    "DEFAULT_CANDIDATE_LIMIT",
    "derive_witness",
    "first_inverter",
    "inverters",
]

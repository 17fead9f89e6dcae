"""
Beauville Forge - constructions, verification and search for Beauville structures.

Main exports:
    - Permutation, GroupHandle: permutation, matrix and product groups
    - BeauvilleStructure, StructureType: two generating pairs and their type
    - verify_structure / verify_strongly_real: tri-state verification
    - construct / FamilyRequest: the explicit families
    - search_beauville / search_strongly_real: exhaustive search on small groups
    - surface_invariants: genera, Euler number and chi of the surface
    - create_workspace / create_engine: persistence and the engine façade

Example usage:
    >>> from beauville_forge import FamilyRequest, construct
    >>> c = construct(FamilyRequest.parse("mathieu_double", "A5xA5"))
    >>> str(c.structure.type())
    '((5,6,5),(15,10,15))'
"""

from beauville_forge._version import __version__

from beauville_forge.core.exceptions import BeauvilleError
from beauville_forge.core.perm import Permutation, format_cycles, parse_cycles
from beauville_forge.core.groups import GroupHandle, TriState, Verdict
from beauville_forge.core.structures import (
    BeauvilleStructure,
    StronglyRealWitness,
    StructureType,
    derive_witness,
    search_beauville,
    search_strongly_real,
    surface_invariants,
    verify_strongly_real,
    verify_structure,
)
from beauville_forge.core.constructions import Construction, FamilyRequest, construct, families
from beauville_forge.core.workspace import (
    BeauvilleEngine,
    EngineConfig,
    create_engine,
    create_workspace,
)

__all__ = [
    # Core types
    "BeauvilleError",
    "Permutation",
    "format_cycles",
    "parse_cycles",
    "GroupHandle",
    "TriState",
    "Verdict",
    # Structures
    "BeauvilleStructure",
    "StronglyRealWitness",
    "StructureType",
    "derive_witness",
    "search_beauville",
    "search_strongly_real",
    "surface_invariants",
    "verify_strongly_real",
    "verify_structure",
    # Constructions
    "Construction",
    "FamilyRequest",
    "construct",
    "families",
    # Workspace
    "BeauvilleEngine",
    "EngineConfig",
    "create_engine",
    "create_workspace",
    # Version
    "__version__",
]

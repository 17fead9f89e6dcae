# beauville_forge/core/__init__.py
from .exceptions import (
    BeauvilleError,
    BudgetExceededError,
    ConstructionDiscrepancyError,
    ConstructionError,
    DegreeMismatchError,
    EnumerationUnavailableError,
    FieldArithmeticError,
    GeneratorFileError,
    MembershipError,
    OrderBoundExceededError,
    PermutationParseError,
    StructureFileError,
    UnboundAtomError,
    WitnessError,
    WordSyntaxError,
)

__all__ = [
    "BeauvilleError",
    "BudgetExceededError",
    "ConstructionDiscrepancyError",
    "ConstructionError",
    "DegreeMismatchError",
    "EnumerationUnavailableError",
    "FieldArithmeticError",
    "GeneratorFileError",
    "MembershipError",
    "OrderBoundExceededError",
    "PermutationParseError",
    "StructureFileError",
    "UnboundAtomError",
    "WitnessError",
    "WordSyntaxError",
]

# beauville_forge/core/exceptions.py
"""
Exception hierarchy for beauville_forge.

All exceptions inherit from BeauvilleError for easy catching. Subclasses that
describe bad input also inherit from the matching builtin (ValueError,
ArithmeticError, KeyError) so generic callers keep working.
"""

from __future__ import annotations

from typing import Any, Mapping, Optional, Sequence


class BeauvilleError(Exception):
    """Base exception for all beauville_forge errors."""

    def __init__(self, message: str, *, context: Optional[Mapping[str, Any]] = None):
        self.message = message
        self.context = dict(context or {})
        super().__init__(self._format_message())

    def _format_message(self) -> str:
        parts = [self.message]
        for key, value in self.context.items():
            if value is not None:
                parts.append(f"{key}={value}")
        return " | ".join(parts)


# ---- permutations ---------------------------------------------------------------


class PermutationParseError(BeauvilleError, ValueError):
    """Malformed cycle notation, out-of-range or repeated point."""

    def __init__(self, message: str, *, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(message, context={"position": position})

    def _format_message(self) -> str:
        base = super()._format_message()
        preview = self.text if len(self.text) <= 60 else self.text[:60] + "..."
        return f"{base} | text={preview!r}"


class DegreeMismatchError(BeauvilleError, ValueError):
    """Operands live on different point sets (or over different fields)."""

    def __init__(self, message: str, *, left: Any, right: Any):
        self.left = left
        self.right = right
        super().__init__(message, context={"left": left, "right": right})


# ---- finite fields --------------------------------------------------------------


class FieldArithmeticError(BeauvilleError, ArithmeticError):
    """Zero inversion, singular matrix, reducible modulus or field mismatch."""


class OrderBoundExceededError(FieldArithmeticError):
    """A matrix order search gave up at its bound."""

    def __init__(self, message: str, *, bound: int):
        self.bound = bound
        super().__init__(message, context={"bound": bound})


# ---- group engine ---------------------------------------------------------------


class BudgetExceededError(BeauvilleError):
    """Closure enumeration refused to grow past its budget (soft error)."""

    def __init__(self, message: str, *, budget: int):
        self.budget = budget
        super().__init__(message, context={"budget": budget})


class EnumerationUnavailableError(BeauvilleError):
    """An operation needs the full element list, which is not available."""


# ---- structures and witnesses ---------------------------------------------------


class MembershipError(BeauvilleError, ValueError):
    """A structure element lies outside its group."""


class WitnessError(BeauvilleError, ValueError):
    """A strongly-real witness violates its own invariants."""


class ConstructionError(BeauvilleError, ValueError):
    """A family was asked for parameters outside its hypothesis."""

    def __init__(self, message: str, *, family: str, params: Any = None):
        self.family = family
        self.params = params
        super().__init__(message, context={"family": family, "params": params})


class ConstructionDiscrepancyError(ConstructionError):
    """Strict mode: the printed formulas did not survive verification."""

    def __init__(
        self,
        message: str,
        *,
        family: str,
        params: Any = None,
        discrepancies: Sequence[str] = (),
    ):
        self.discrepancies = list(discrepancies)
        super().__init__(message, family=family, params=params)

    def _format_message(self) -> str:
        base = super()._format_message()
        if self.discrepancies:
            return f"{base} | discrepancies={'; '.join(self.discrepancies)}"
        return base


# ---- words and files ------------------------------------------------------------


class WordSyntaxError(BeauvilleError, ValueError):
    """A word in the standard generators could not be parsed."""

    def __init__(self, message: str, *, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(message, context={"position": position, "text": repr(text)})


class UnboundAtomError(BeauvilleError, KeyError):
    """A word mentions an identifier missing from the environment."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Unbound identifier '{name}'")

    def __str__(self) -> str:  # KeyError would quote the message otherwise
        return self.message


class _FileError(BeauvilleError):
    def __init__(
        self,
        message: str,
        *,
        path: Optional[str] = None,
        line: Optional[int] = None,
        original_error: Optional[Exception] = None,
    ):
        self.path = path
        self.line = line
        self.original_error = original_error
        super().__init__(message, context={"path": path, "line": line})

    def _format_message(self) -> str:
        base = super()._format_message()
        if self.original_error:
            return f"{base} | cause={type(self.original_error).__name__}: {self.original_error}"
        return base


class GeneratorFileError(_FileError):
    """A standard-generator file is missing, malformed, or has the wrong shape."""


class StructureFileError(_FileError):
    """A structure file could not be read, written or decoded."""


__all__ = [
    "BeauvilleError",
    "PermutationParseError",
    "DegreeMismatchError",
    "FieldArithmeticError",
    "OrderBoundExceededError",
    "BudgetExceededError",
    "EnumerationUnavailableError",
    "MembershipError",
    "WitnessError",
    "ConstructionError",
    "ConstructionDiscrepancyError",
    "WordSyntaxError",
    "UnboundAtomError",
    "GeneratorFileError",
    "StructureFileError",
]

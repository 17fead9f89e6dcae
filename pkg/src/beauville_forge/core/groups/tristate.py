# beauville_forge/core/groups/tristate.py
"""Three-valued verdicts: PASS, FAIL, or UNDETERMINED with the tier that gave up."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional


class Verdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    UNDETERMINED = "UNDETERMINED"


@dataclass(frozen=True)
class TriState:
    """
    A verdict plus a human-readable reason.

    UNDETERMINED always names the oracle tier that could not decide.

    Example:
        >>> TriState.passed("orders agree") & TriState.undetermined("enumeration", "budget")
        TriState(verdict=<Verdict.UNDETERMINED: 'UNDETERMINED'>, reason='enumeration: budget', tier='enumeration')
    """

    verdict: Verdict
    reason: str = ""
    tier: Optional[str] = None

    def __post_init__(self) -> None:
        if self.verdict is Verdict.UNDETERMINED and not self.tier:
            raise ValueError("UNDETERMINED verdicts must name the tier that gave up")

    @classmethod
    def passed(cls, reason: str = "", tier: Optional[str] = None) -> "TriState":
        return cls(Verdict.PASS, reason, tier)

    @classmethod
    def failed(cls, reason: str = "", tier: Optional[str] = None) -> "TriState":
        return cls(Verdict.FAIL, reason, tier)

    @classmethod
    def undetermined(cls, tier: str, reason: str = "") -> "TriState":
        return cls(Verdict.UNDETERMINED, f"{tier}: {reason}" if reason else tier, tier)

    @classmethod
    def of(cls, condition: bool, reason: str = "", tier: Optional[str] = None) -> "TriState":
        return cls.passed(reason, tier) if condition else cls.failed(reason, tier)

    @property
    def is_pass(self) -> bool:
        return self.verdict is Verdict.PASS

    @property
    def is_fail(self) -> bool:
        return self.verdict is Verdict.FAIL

    @property
    def is_undetermined(self) -> bool:
        return self.verdict is Verdict.UNDETERMINED

    def __and__(self, other: "TriState") -> "TriState":
        return combine([self, other])

    def __str__(self) -> str:
        return f"{self.verdict.value} ({self.reason})" if self.reason else self.verdict.value


def combine(states: Iterable[TriState]) -> TriState:
    """
    Conjunction: any FAIL wins, then any UNDETERMINED, else PASS.

    The first FAIL (or first UNDETERMINED) supplies the reason.
    """
    states = list(states)
    for s in states:
        if s.is_fail:
            return s
    for s in states:
        if s.is_undetermined:
            return s
    reasons = "; ".join(s.reason for s in states if s.reason)
    return TriState.passed(reasons)


__all__ = ["Verdict", "TriState", "combine"]

# beauville_forge/core/workspace/config.py
import os
from dataclasses import dataclass, field
from typing import Optional

from ..field import DEFAULT_ORDER_BOUND
from ..groups import DEFAULT_ENUMERATION_BUDGET

_TRUTHY = ("1", "true", "yes", "on")


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError as e:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from e


@dataclass
class EngineConfig:
    """Engine defaults; every field falls back to a BEAUVILLE_* environment variable."""

    enumeration_budget: int = field(
        default_factory=lambda: _env_int("BEAUVILLE_ENUMERATION_BUDGET", DEFAULT_ENUMERATION_BUDGET)
    )
    order_bound: int = field(default_factory=lambda: _env_int("BEAUVILLE_ORDER_BOUND", DEFAULT_ORDER_BOUND))
    atlas_dir: Optional[str] = field(default_factory=lambda: os.getenv("BEAUVILLE_ATLAS_DIR") or None)
    progress: bool = field(default_factory=lambda: os.getenv("BEAUVILLE_PROGRESS", "").lower() in _TRUTHY)
    workspace_root: str = field(default_factory=lambda: os.getenv("BEAUVILLE_WORKSPACE", "beauville_workspace"))

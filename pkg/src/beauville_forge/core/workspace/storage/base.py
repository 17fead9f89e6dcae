# beauville_forge/core/workspace/storage/base.py
from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict, Literal, Mapping, Tuple, TypedDict, cast

# ---- Typed keys for path registry -------------------------------------------------

PathKey = Literal["structures", "reports", "generators"]

PATH_KEYS: Tuple[PathKey, ...] = ("structures", "reports", "generators")


class PathMap(TypedDict):
    structures: str
    reports: str
    generators: str


@dataclass(frozen=True)
class PathRegistry:
    """Directories of one workspace run."""

    structures: str
    reports: str
    generators: str

    def as_dict(self) -> PathMap:
        return cast(PathMap, {k: getattr(self, k) for k in PATH_KEYS})


# ---- Base class: identity + validated paths; I/O lives in subclasses ----------------


class WorkspaceBase(ABC):
    """
    Abstract workspace: a run folder with one directory per path key.

    Subclasses create the directories and implement the JSON I/O.
    """

    def __init__(self, *, base_root: str, root_dir: str, run_id: str, paths: Mapping[str, str]) -> None:
        self.base_root = base_root
        self.root_dir = root_dir
        self.run_id = run_id
        self._paths = self._validate_and_freeze_paths(paths)

    @property
    def paths(self) -> PathRegistry:
        return PathRegistry(**{k: self._paths[k] for k in PATH_KEYS})

    def directory(self, key: PathKey) -> str:
        return self._paths[key]

    # ---- abstract I/O API ---------------------------------------------------------

    @abstractmethod
    def save_json(self, key: PathKey, name: str, data: Mapping[str, Any]) -> str:
        """Write ``name``.json under ``key``; return the full path."""
        raise NotImplementedError

    @abstractmethod
    def load_json(self, key: PathKey, name: str) -> Dict[str, Any]:
        raise NotImplementedError

    @abstractmethod
    def delete_all(self) -> None:
        """Empty every registered directory, keeping the directories."""
        raise NotImplementedError

    # ---- helpers -----------------------------------------------------------------

    @staticmethod
    def _validate_and_freeze_paths(paths: Mapping[str, str]) -> Dict[PathKey, str]:
        missing = [k for k in PATH_KEYS if k not in paths]
        extra = [k for k in paths if k not in PATH_KEYS]
        if missing:
            raise ValueError(f"Path mapping missing required keys: {missing}")
        if extra:
            raise ValueError(f"Path mapping has unsupported keys: {extra}")
        return {cast(PathKey, k): str(paths[k]) for k in PATH_KEYS}

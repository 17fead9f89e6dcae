# beauville_forge/core/workspace/bootstrap.py
"""
Factories for the filesystem workspace and the engine façade.

Usage:
    from beauville_forge.core.workspace import create_workspace, create_engine
    ws = create_workspace(use_uuid=True)
    engine = create_engine(ws)
"""

from __future__ import annotations

from typing import Dict, Optional

from .config import EngineConfig
from .runtime.engine import BeauvilleEngine
from .storage.base import WorkspaceBase
from .storage.fs import FilesystemWorkspace


class WorkspaceFactory:
    @staticmethod
    def create(
        root_dir: Optional[str] = None,
        use_uuid: bool = False,
        custom_paths: Optional[Dict[str, str]] = None,
        cfg: Optional[EngineConfig] = None,
    ) -> WorkspaceBase:
        cfg = cfg or EngineConfig()
        return FilesystemWorkspace(root_dir=root_dir or cfg.workspace_root, use_uuid=use_uuid, custom_paths=custom_paths)


class EngineFactory:
    @staticmethod
    def create(workspace: Optional[WorkspaceBase] = None, cfg: Optional[EngineConfig] = None) -> BeauvilleEngine:
        return BeauvilleEngine(workspace, cfg or EngineConfig())


def create_workspace(
    *,
    root_dir: Optional[str] = None,
    use_uuid: bool = False,
    custom_paths: Optional[Dict[str, str]] = None,
    config: Optional[EngineConfig] = None,
) -> WorkspaceBase:
    """
    Filesystem workspace under ``root_dir``, else under ``config.workspace_root``
    (BEAUVILLE_WORKSPACE).

    Equivalent to: WorkspaceFactory.create(...)
    """
    return WorkspaceFactory.create(root_dir=root_dir, use_uuid=use_uuid, custom_paths=custom_paths, cfg=config)


def create_engine(
    workspace: Optional[WorkspaceBase] = None,
    config: Optional[EngineConfig] = None,
) -> BeauvilleEngine:
    """Equivalent to: EngineFactory.create(workspace, config)"""
    return EngineFactory.create(workspace, cfg=config)


__all__ = [
    "WorkspaceFactory",
    "EngineFactory",
    "create_workspace",
    "create_engine",
]

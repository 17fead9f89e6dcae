# beauville_forge/core/workspace/__init__.py
from .bootstrap import EngineFactory, WorkspaceFactory, create_engine, create_workspace
from .config import EngineConfig
from .runtime import BeauvilleEngine, RunItem, RunReport
from .storage import FilesystemWorkspace, StructureFile, load_structure, save_structure

__all__ = [
    "create_workspace",
    "create_engine",
    "WorkspaceFactory",
    "EngineFactory",
    "EngineConfig",
    "BeauvilleEngine",
    "RunItem",
    "RunReport",
    "FilesystemWorkspace",
    "StructureFile",
    "load_structure",
    "save_structure",
]

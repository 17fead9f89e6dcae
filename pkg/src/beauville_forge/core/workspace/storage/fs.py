# beauville_forge/core/workspace/storage/fs.py
from __future__ import annotations

import logging
import os
import shutil
import uuid
from datetime import datetime
from typing import Any, Dict, Mapping, Optional

from ...exceptions import StructureFileError
from .base import PathKey, WorkspaceBase
from .codec import read_json, write_json

logger = logging.getLogger(__name__)


class FilesystemWorkspace(WorkspaceBase):
    """
    Workspace on disk: ``<root>/<run_id>/{structures,reports,generators}``.

    ``run_id`` is "default" unless ``use_uuid`` asks for a timestamped run.
    """

    def __init__(
        self,
        root_dir: Optional[str] = None,
        use_uuid: bool = False,
        custom_paths: Optional[Dict[str, str]] = None,
    ):
        base_root = root_dir or os.path.join(os.getcwd(), "beauville_workspace")
        os.makedirs(base_root, exist_ok=True)

        run_id = (
            datetime.now().strftime("%Y%m%dT%H%M%S") + "_" + str(uuid.uuid4())[:8]
            if use_uuid
            else "default"
        )
        run_dir = os.path.join(base_root, run_id)
        os.makedirs(run_dir, exist_ok=True)

        paths = {key: os.path.join(run_dir, key) for key in ("structures", "reports", "generators")}
        if custom_paths:
            paths.update(custom_paths)

        super().__init__(base_root=base_root, root_dir=run_dir, run_id=run_id, paths=paths)

        for path in self._paths.values():
            os.makedirs(path, exist_ok=True)

    def _file(self, key: PathKey, name: str) -> str:
        return os.path.join(self._paths[key], f"{name}.json")

    def save_json(self, key: PathKey, name: str, data: Mapping[str, Any]) -> str:
        path = self._file(key, name)
        write_json(path, data)
        logger.info(f"Saved {path}")
        return path

    def load_json(self, key: PathKey, name: str) -> Dict[str, Any]:
        path = self._file(key, name)
        if not os.path.exists(path):
            raise StructureFileError("file not found in workspace", path=path)
        return read_json(path)

    def delete_all(self) -> None:
        for path in self._paths.values():
            if os.path.exists(path):
                shutil.rmtree(path)
                os.makedirs(path, exist_ok=True)

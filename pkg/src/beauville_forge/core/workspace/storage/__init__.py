from .base import PATH_KEYS, PathKey, PathRegistry, WorkspaceBase
from .codec import (
    FORMAT,
    StructureFile,
    decode_group,
    decode_structure,
    decode_witness,
    encode_group,
    encode_report,
    encode_structure,
    encode_witness,
    load_automorphisms,
    load_group,
    load_structure,
    save_structure,
)
from .fs import FilesystemWorkspace

__all__ = [
    "PATH_KEYS",
    "PathKey",
    "PathRegistry",
    "WorkspaceBase",
    "FORMAT",
    "StructureFile",
    "decode_group",
    "decode_structure",
    "decode_witness",
    "encode_group",
    "encode_report",
    "encode_structure",
    "encode_witness",
    "load_automorphisms",
    "load_group",
    "load_structure",
    "save_structure",
    "FilesystemWorkspace",
]

# beauville_forge/core/atlas/generators.py
"""
Standard-generator files.

A file holds exactly two permutations, c then d, one per line. Each line is
either cycle notation ``(1,2)(3,4,5)`` or a whitespace-separated image list
``2 1 3 5 4``. Blank lines and ``#`` comments are skipped, except that a
header ``degree N`` (optionally commented, as in ``# degree: 24``) fixes the
degree. Without a header, cycle notation takes the largest point mentioned
in either line as the degree.
"""

from __future__ import annotations

import logging
import re
from pathlib import Path
from typing import IO, List, Optional, Tuple, Union

from ..exceptions import BeauvilleError, GeneratorFileError
from ..perm import Permutation, parse_cycles, parse_image_list

logger = logging.getLogger(__name__)

_DEGREE_RE = re.compile(r"^#?\s*degree\s*[:=]?\s*(\d+)\s*$", re.IGNORECASE)
_POINT_RE = re.compile(r"\d+")

Source = Union[str, Path, IO[str]]


def _read(source: Source) -> Tuple[str, Optional[str]]:
    if hasattr(source, "read"):
        return source.read(), getattr(source, "name", None)  # type: ignore[union-attr]
    path = Path(source)  # type: ignore[arg-type]
    try:
        return path.read_text(encoding="utf-8"), str(path)
    except OSError as e:
        raise GeneratorFileError("cannot read generator file", path=str(path), original_error=e) from e


def parse_generators(text: str, *, path: Optional[str] = None) -> Tuple[Permutation, Permutation]:
    """
    Parse the contents of a generator file.

    Raises:
        GeneratorFileError: wrong number of permutations, a malformed line,
            or a degree conflict.
    """
    degree: Optional[int] = None
    lines: List[Tuple[int, str]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        header = _DEGREE_RE.match(line)
        if header:
            if degree is not None:
                raise GeneratorFileError("degree declared twice", path=path, line=number)
            degree = int(header.group(1))
            continue
        if line.startswith("#"):
            continue
        lines.append((number, line))

    if len(lines) != 2:
        raise GeneratorFileError(
            f"expected exactly two permutations, found {len(lines)}",
            path=path,
            line=lines[2][0] if len(lines) > 2 else None,
        )

    cyclic = ["(" in line for _, line in lines]
    if degree is None and any(cyclic):
        points = [int(p) for _, line in lines for p in _POINT_RE.findall(line)]
        degree = max(points, default=1)

    perms: List[Permutation] = []
    for (number, line), is_cycles in zip(lines, cyclic):
        try:
            if is_cycles:
                p = parse_cycles(line, degree)  # type: ignore[arg-type]
            else:
                p = parse_image_list(line)
        except BeauvilleError as e:
            raise GeneratorFileError("malformed permutation", path=path, line=number, original_error=e) from e
        if degree is not None and p.degree != degree:
            raise GeneratorFileError(
                f"permutation has degree {p.degree}, expected {degree}", path=path, line=number
            )
        degree = p.degree
        perms.append(p)

    logger.debug(f"Loaded standard generators of degree {degree} from {path or 'stream'}")
    return perms[0], perms[1]


def load_generators(source: Source) -> Tuple[Permutation, Permutation]:
    """Read (c, d) from a path or an open text stream."""
    text, path = _read(source)
    return parse_generators(text, path=path)


__all__ = ["parse_generators", "load_generators"]

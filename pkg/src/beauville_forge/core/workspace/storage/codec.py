# beauville_forge/core/workspace/storage/codec.py
"""
JSON codec for groups, witnesses, structures and run reports.

Structure files carry the tag ``beauville-structure/1``. Permutations are
stored in 1-based cycle notation, matrices as 16 hex bit masks, product
elements as lists with one entry per factor. JSON is written with sorted
keys and indent 2 so identical inputs give byte-identical files.

Example group files::

    {"kind": "permutation", "degree": 5, "generators": ["(1,2,3)", "(1,2,3,4,5)"]}
    {"kind": "matrix", "field": {"m": 3, "modulus": "0xb"}, "generators": [["0x0", ...], ...]}
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional, Tuple

from ...exceptions import BeauvilleError, StructureFileError
from ...field import FieldSpec, SuzukiMatrix
from ...groups import GroupHandle, ProductElement
from ...perm import Permutation, format_cycles, parse_cycles
from ...structures import (
    AbelianInversion,
    Automorphism,
    BeauvilleStructure,
    OvergroupConjugation,
    StronglyRealWitness,
    StructureType,
)

FORMAT = "beauville-structure/1"
REPORT_FORMAT = "beauville-report/1"


# ---- plain JSON --------------------------------------------------------------------


def dumps(data: Any) -> str:
    return json.dumps(data, ensure_ascii=False, indent=2, sort_keys=True) + "\n"


def write_json(path: str, data: Any) -> None:
    try:
        with open(path, "w", encoding="utf-8") as f:
            f.write(dumps(data))
    except OSError as e:
        raise StructureFileError("cannot write file", path=path, original_error=e) from e


def read_json(path: str) -> Dict[str, Any]:
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except OSError as e:
        raise StructureFileError("cannot read file", path=path, original_error=e) from e
    except json.JSONDecodeError as e:
        raise StructureFileError("invalid JSON", path=path, line=e.lineno, original_error=e) from e
    if not isinstance(data, dict):
        raise StructureFileError("expected a JSON object at the top level", path=path)
    return data


# ---- elements ----------------------------------------------------------------------


def encode_element(x: Any) -> Any:
    if isinstance(x, Permutation):
        return format_cycles(x)
    if isinstance(x, SuzukiMatrix):
        return x.hex_entries()
    if isinstance(x, ProductElement):
        return [encode_element(c) for c in x.components]
    raise TypeError(f"cannot encode {type(x).__name__}")


def decode_element(data: Any, G: GroupHandle) -> Any:
    """Decode an element of the same kind (and degree or field) as G."""
    if G.kind == "permutation":
        return parse_cycles(str(data), G.degree)  # type: ignore[arg-type]
    if G.kind == "matrix":
        return SuzukiMatrix(G.spec, tuple(int(v, 16) for v in data))  # type: ignore[arg-type]
    if G.factors is None or len(data) != len(G.factors):
        raise ValueError("product element does not match the group's factors")
    return ProductElement([decode_element(d, f) for d, f in zip(data, G.factors)])


# ---- groups ------------------------------------------------------------------------


def encode_group(G: GroupHandle) -> Dict[str, Any]:
    out: Dict[str, Any] = {
        "kind": G.kind,
        "name": G.name,
        "generators": [encode_element(g) for g in G.generators],
    }
    if G.declared_order is not None:
        out["declared_order"] = G.declared_order
    if G.certificate is not None:
        out["certificate"] = G.certificate
    if G.kind == "permutation":
        out["degree"] = G.degree
        if G.orbit_blocks is not None:
            out["orbit_blocks"] = [list(b) for b in G.orbit_blocks]
    elif G.kind == "matrix":
        out["field"] = {"m": G.spec.m, "modulus": f"{G.spec.modulus:#x}"}  # type: ignore[union-attr]
    else:
        out["factors"] = [encode_group(f) for f in G.factors or ()]
    return out


def decode_group(data: Mapping[str, Any], **limits: Any) -> GroupHandle:
    """
    Rebuild a GroupHandle; ``limits`` (enumeration_budget, order_bound) pass through.

    Raises:
        KeyError / ValueError: malformed data (wrapped by the file-level readers).
    """
    kind = data["kind"]
    common = dict(
        declared_order=data.get("declared_order"),
        certificate=data.get("certificate"),
        name=data.get("name"),
        **limits,
    )
    if kind == "permutation":
        degree = int(data["degree"])
        gens = [parse_cycles(g, degree) for g in data["generators"]]
        return GroupHandle(gens, orbit_blocks=data.get("orbit_blocks"), **common)
    if kind == "matrix":
        spec = FieldSpec.for_degree(int(data["field"]["m"]), int(data["field"]["modulus"], 16))
        gens = [SuzukiMatrix(spec, tuple(int(v, 16) for v in g)) for g in data["generators"]]
        return GroupHandle(gens, **common)
    if kind == "product":
        factors = [decode_group(f, **limits) for f in data["factors"]]
        gens = [ProductElement([decode_element(c, f) for c, f in zip(g, factors)]) for g in data["generators"]]
        return GroupHandle(gens, factors=factors, **common)
    raise ValueError(f"unknown group kind {kind!r}")


# ---- witnesses ---------------------------------------------------------------------


def encode_automorphism(phi: Automorphism) -> Dict[str, Any]:
    if isinstance(phi, AbelianInversion):
        return {"automorphism": "inversion"}
    return {"automorphism": "conjugation", "tau": encode_element(phi.tau)}


def decode_automorphism(data: Mapping[str, Any], G: GroupHandle) -> Automorphism:
    kind = data["automorphism"]
    if kind == "inversion":
        return AbelianInversion()
    if kind == "conjugation":
        return OvergroupConjugation(decode_element(data["tau"], G))
    raise ValueError(f"unknown automorphism kind {kind!r}")


def encode_witness(w: StronglyRealWitness) -> Dict[str, Any]:
    out = encode_automorphism(w.automorphism)
    out["g1"] = None if w.g1 is None else encode_element(w.g1)
    out["g2"] = None if w.g2 is None else encode_element(w.g2)
    return out


def decode_witness(data: Mapping[str, Any], G: GroupHandle) -> StronglyRealWitness:
    def conjugator(key: str) -> Optional[Any]:
        value = data.get(key)
        return None if value is None else decode_element(value, G)

    return StronglyRealWitness(decode_automorphism(data, G), conjugator("g1"), conjugator("g2"))


# ---- structure files ---------------------------------------------------------------


@dataclass(frozen=True)
class StructureFile:
    """Decoded contents of a structure file."""

    structure: BeauvilleStructure
    witness: Optional[StronglyRealWitness] = None
    expected_type: Optional[StructureType] = None
    notes: Tuple[str, ...] = ()


def encode_structure(
    s: BeauvilleStructure,
    witness: Optional[StronglyRealWitness] = None,
    *,
    expected_type: Optional[StructureType] = None,
    notes: Tuple[str, ...] = (),
) -> Dict[str, Any]:
    return {
        "format": FORMAT,
        "name": s.name,
        "group": encode_group(s.group),
        "pairs": [[encode_element(x) for x in pair] for pair in s.pairs()],
        "witness": None if witness is None else encode_witness(witness),
        "expected_type": None if expected_type is None else str(expected_type),
        "notes": list(notes),
    }


def decode_structure(data: Mapping[str, Any], *, path: Optional[str] = None, **limits: Any) -> StructureFile:
    """
    Raises:
        StructureFileError: wrong format tag or malformed content.
    """
    if data.get("format") != FORMAT:
        raise StructureFileError(f"expected format {FORMAT!r}, found {data.get('format')!r}", path=path)
    try:
        G = decode_group(data["group"], **limits)
        pairs: List[Tuple[Any, Any]] = []
        for pair in data["pairs"]:
            x, y = (decode_element(e, G) for e in pair)
            pairs.append((x, y))
        s = BeauvilleStructure(G, pairs[0], pairs[1], name=data.get("name"))
        witness = None if data.get("witness") is None else decode_witness(data["witness"], G)
        expected = data.get("expected_type")
        return StructureFile(
            s,
            witness,
            None if expected is None else StructureType.parse(expected),
            tuple(data.get("notes", ())),
        )
    except StructureFileError:
        raise
    except (KeyError, IndexError, TypeError, ValueError, BeauvilleError) as e:
        raise StructureFileError("malformed structure file", path=path, original_error=e) from e


def load_structure(path: str, **limits: Any) -> StructureFile:
    return decode_structure(read_json(path), path=path, **limits)


def save_structure(
    path: str, s: BeauvilleStructure, witness: Optional[StronglyRealWitness] = None, **kwargs: Any
) -> str:
    write_json(path, encode_structure(s, witness, **kwargs))
    return path


def load_group(path: str, **limits: Any) -> GroupHandle:
    """A group file, or the group inside a structure file."""
    data = read_json(path)
    try:
        return decode_group(data["group"] if "group" in data else data, **limits)
    except (KeyError, IndexError, TypeError, ValueError, BeauvilleError) as e:
        raise StructureFileError("malformed group file", path=path, original_error=e) from e


def load_automorphisms(path: str, G: GroupHandle) -> List[Automorphism]:
    """``{"automorphisms": [{"automorphism": "conjugation", "tau": "(1,2)"}, ...]}``."""
    data = read_json(path)
    try:
        return [decode_automorphism(a, G) for a in data["automorphisms"]]
    except (KeyError, TypeError, ValueError, BeauvilleError) as e:
        raise StructureFileError("malformed automorphism file", path=path, original_error=e) from e


def encode_report(report: Any) -> Dict[str, Any]:
    """Tagged dict of a run report (anything with ``as_dict``)."""
    out = dict(report.as_dict())
    out["format"] = REPORT_FORMAT
    return out


__all__ = [
    "FORMAT",
    "REPORT_FORMAT",
    "dumps",
    "write_json",
    "read_json",
    "encode_element",
    "decode_element",
    "encode_group",
    "decode_group",
    "encode_automorphism",
    "decode_automorphism",
    "encode_witness",
    "decode_witness",
    "StructureFile",
    "encode_structure",
    "decode_structure",
    "load_structure",
    "save_structure",
    "load_group",
    "load_automorphisms",
    "encode_report",
]

# beauville_forge/core/workspace/runtime/engine.py
from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from ...atlas import AtlasOutcome, HNBracket, load_generators, lookup_row, verify_sporadic
from ...constructions import Construction, FamilyRequest, Limits, construct
from ...exceptions import GeneratorFileError, StructureFileError
from ...groups import GroupHandle, TriState, combine
from ...structures import (
    Automorphism,
    BeauvilleStructure,
    SearchOutcome,
    StronglyRealWitness,
    StructureType,
    SurfaceInvariants,
    inspect_witness,
    search_beauville,
    search_strongly_real,
    surface_invariants,
    verify_structure,
)
from ..config import EngineConfig
from ..storage import WorkspaceBase, encode_report, encode_structure, load_automorphisms, load_group, load_structure
from ..storage.codec import write_json

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 2
EXIT_UNDETERMINED = 3
EXIT_USAGE = 4


def _ensure_file_exists(path: Optional[str], label: str, error: type = StructureFileError) -> None:
    if path is None:
        return
    if not os.path.exists(path):
        raise error(f"{label} not found", path=path)


@dataclass(frozen=True)
class RunItem:
    """One verdict of a run, keyed for canonical ordering."""

    key: str
    verdict: TriState
    type: Optional[StructureType] = None
    invariants: Optional[SurfaceInvariants] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "key": self.key,
            "verdict": self.verdict.verdict.value,
            "reason": self.verdict.reason,
            "tier": self.verdict.tier,
            "type": None if self.type is None else str(self.type),
            "invariants": None if self.invariants is None else self.invariants.as_dict(),
            "details": self.details,
        }

    def summary(self) -> str:
        line = f"{self.key}: {self.verdict}"
        if self.type is not None:
            line += f" type {self.type}"
        if self.invariants is not None:
            line += f" {self.invariants}"
        return line


@dataclass
class RunReport:
    """
    Verdicts of one command. ``exit_code`` is 0 only when every verdict is
    PASS; any FAIL gives 2, otherwise any UNDETERMINED gives 3.
    """

    command: List[str]
    items: List[RunItem] = field(default_factory=list)

    def add(self, item: RunItem) -> RunItem:
        self.items.append(item)
        return item

    def sorted_items(self) -> List[RunItem]:
        return sorted(self.items, key=lambda i: i.key)

    @property
    def overall(self) -> TriState:
        if not self.items:
            return TriState.undetermined("run", "no items")
        return combine(i.verdict for i in self.sorted_items())

    @property
    def exit_code(self) -> int:
        overall = self.overall
        if overall.is_pass:
            return EXIT_OK
        return EXIT_FAIL if overall.is_fail else EXIT_UNDETERMINED

    def as_dict(self) -> Dict[str, Any]:
        return {
            "command": list(self.command),
            "items": [i.as_dict() for i in self.sorted_items()],
            "overall": self.overall.verdict.value,
            "exit_code": self.exit_code,
        }

    def summary(self) -> str:
        lines = [i.summary() for i in self.sorted_items()]
        lines.append(f"overall: {self.overall.verdict.value}")
        return "\n".join(lines)


class BeauvilleEngine:
    """
    One entry point for verification, construction, search, invariants and
    the sporadic table. Every method is keyword-only and deterministic.
    """

    def __init__(self, workspace: Optional[WorkspaceBase] = None, config: Optional[EngineConfig] = None):
        self.workspace = workspace
        self.config = config or EngineConfig()

    @property
    def limits(self) -> Dict[str, int]:
        return {
            "enumeration_budget": self.config.enumeration_budget,
            "order_bound": self.config.order_bound,
        }

    # -------------------------
    # verification
    # -------------------------

    def verify(
        self,
        *,
        structure: BeauvilleStructure,
        witness: Optional[StronglyRealWitness] = None,
        expected_type: Optional[StructureType] = None,
        key: Optional[str] = None,
    ) -> RunItem:
        report = verify_structure(structure)
        states = [report.overall]
        details: Dict[str, Any] = {"report": report.as_dict()}
        if witness is not None:
            wr = inspect_witness(structure, witness, report=report)
            states.append(wr.verdict)
            details["witness"] = wr.as_dict()
        if expected_type is not None and report.type != expected_type:
            states.append(TriState.failed(f"type {report.type} differs from expected {expected_type}", "type"))
        inv = surface_invariants(report.group_order, report.type) if report.group_order else None
        return RunItem(key or structure.name or "structure", combine(states), report.type, inv, details)

    def verify_file(self, *, path: str) -> RunItem:
        _ensure_file_exists(path, "Structure file")
        sf = load_structure(path, **self.limits)
        return self.verify(
            structure=sf.structure,
            witness=sf.witness,
            expected_type=sf.expected_type,
            key=sf.structure.name or os.path.basename(path),
        )

    # -------------------------
    # construction
    # -------------------------

    def construct(self, *, request: FamilyRequest, strict: bool = False) -> Construction:
        return construct(request, strict=strict, limits=Limits(**self.limits))

    def construction_item(self, c: Construction) -> RunItem:
        states: List[TriState] = []
        if c.report is not None:
            states.append(c.report.overall)
        if c.witness_report is not None:
            states.append(c.witness_report.verdict)
        if c.discrepancies:
            states.append(TriState.failed(f"{len(c.discrepancies)} discrepancies", "construction"))
        verdict = combine(states) if states else TriState.undetermined("construction", "not verified")
        order = c.report.group_order if c.report is not None else None
        inv = surface_invariants(order, c.structure.type()) if order else None
        return RunItem(str(c.request), verdict, c.structure.type(), inv, c.as_dict())

    def save_construction(self, c: Construction, *, path: Optional[str] = None) -> str:
        """Write the structure file to ``path`` or to the workspace's structures directory."""
        data = encode_structure(c.structure, c.witness, expected_type=c.expected_type, notes=c.notes)
        if path is not None:
            write_json(path, data)
            logger.info(f"Saved {path}")
            return path
        if self.workspace is None:
            raise StructureFileError("no output path and no workspace configured")
        name = str(c.request).replace("(", "_").replace(")", "").replace(",", "_")
        return self.workspace.save_json("structures", name, data)

    # -------------------------
    # search and invariants
    # -------------------------

    def load_group(self, *, path: str) -> GroupHandle:
        _ensure_file_exists(path, "Group file")
        return load_group(path, **self.limits)

    def search(
        self,
        *,
        group: GroupHandle,
        strongly_real: bool = False,
        autos: Sequence[Automorphism] = (),
    ) -> SearchOutcome:
        progress = self.config.progress
        if strongly_real:
            return search_strongly_real(group, autos, progress=progress)
        return search_beauville(group, progress=progress)

    def search_file(self, *, path: str, strongly_real: bool = False, autos_path: Optional[str] = None) -> RunItem:
        G = self.load_group(path=path)
        autos: List[Automorphism] = []
        if autos_path is not None:
            _ensure_file_exists(autos_path, "Automorphism file")
            autos = load_automorphisms(autos_path, G)
        outcome = self.search(group=G, strongly_real=strongly_real, autos=autos)
        details = {
            "result": outcome.describe(),
            "exhaustive": outcome.exhaustive,
            "pairs_examined": outcome.pairs_examined,
            "candidates": list(outcome.candidates),
        }
        if outcome.found:
            details["structure"] = encode_structure(outcome.structure, outcome.witness)  # type: ignore[arg-type]
            verdict = TriState.passed(outcome.describe(), "search")
            found_type: Optional[StructureType] = outcome.structure.type()  # type: ignore[union-attr]
        else:
            verdict = TriState.failed(outcome.describe(), "search")
            found_type = None
        return RunItem(G.name or os.path.basename(path), verdict, found_type, None, details)

    def invariants(self, *, order: int, type: StructureType) -> SurfaceInvariants:
        return surface_invariants(order, type)

    def invariants_item(self, *, order: int, type: StructureType) -> RunItem:
        inv = self.invariants(order=order, type=type)
        verdict = TriState.of(inv.integral, "integral genera and Euler number" if inv.integral else "non-integral values", "invariants")
        return RunItem(f"|G|={order}", verdict, type, inv, {})

    # -------------------------
    # sporadic table
    # -------------------------

    def generator_path(self, *, name: str, path: Optional[str] = None) -> str:
        """Explicit path, else ``<atlas_dir>/<file name of the row>``."""
        if path is not None:
            return path
        if not self.config.atlas_dir:
            raise GeneratorFileError(f"no generator file given for {name} and BEAUVILLE_ATLAS_DIR is not set")
        return os.path.join(self.config.atlas_dir, lookup_row(name).filename)

    def atlas_verify(self, *, name: str, path: Optional[str] = None, hn_bracket: Optional[HNBracket] = None) -> AtlasOutcome:
        gens = self.generator_path(name=name, path=path)
        _ensure_file_exists(gens, "Generator file", GeneratorFileError)
        c, d = load_generators(gens)
        return verify_sporadic(name, c, d, hn_bracket=hn_bracket)

    def atlas_item(self, outcome: AtlasOutcome) -> RunItem:
        states: List[TriState] = []
        if outcome.report is not None:
            states.append(outcome.report.overall)
        if outcome.witness_report is not None:
            states.append(outcome.witness_report.verdict)
        if outcome.discrepancies:
            # generation or dagger may be merely undetermined; keep those as they are
            hard = [d for d in outcome.discrepancies if "UNDETERMINED" not in d]
            if hard:
                states.append(TriState.failed(f"{len(hard)} discrepancies", "table"))
        verdict = combine(states) if states else TriState.undetermined("table", "not verified")
        order = outcome.report.group_order if outcome.report is not None else None
        inv = surface_invariants(order, outcome.structure.type()) if order else None
        return RunItem(outcome.row.name, verdict, outcome.structure.type(), inv, outcome.as_dict())

    # -------------------------
    # reports
    # -------------------------

    def save_report(self, report: RunReport, *, path: Optional[str] = None, name: str = "report") -> Optional[str]:
        data = encode_report(report)
        if path is not None:
            write_json(path, data)
            return path
        if self.workspace is not None:
            return self.workspace.save_json("reports", name, data)
        return None


__all__ = [
    "EXIT_OK",
    "EXIT_FAIL",
    "EXIT_UNDETERMINED",
    "EXIT_USAGE",
    "RunItem",
    "RunReport",
    "BeauvilleEngine",
]

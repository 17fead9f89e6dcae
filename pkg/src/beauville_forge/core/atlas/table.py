# beauville_forge/core/atlas/table.py
"""
Strongly real structures on the almost simple sporadic groups G:2.

For each group the rows below give words in the standard generators c, d
for two involutions t1, t2, for x1, x2 (products of t1 with a conjugate of
t2) and for elements u1, u2 centralizing t1, plus exponents j1, j2. Then
y_i = (x_i^j_i)^u_i, and conjugation by t1 inverts x_i and y_i.

Two rows need a reading decision. In the HN:2 row u1 is printed with a
bracket holding a single argument; ``hn_bracket`` selects either the
commutator ``[c,d^2]`` or the plain group ``(cd^2)``, and without a choice
both are tried and the one whose type matches is kept. The Fi24 row's
exponent 33 is taken as printed.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Literal, Optional, Tuple

from ..exceptions import BeauvilleError, WitnessError
from ..groups import GroupHandle
from ..perm import Permutation
from ..structures import (
    BeauvilleStructure,
    OvergroupConjugation,
    StronglyRealWitness,
    StructureType,
    VerificationReport,
    WitnessReport,
    inspect_witness,
    verify_structure,
)
from .words import evaluate_word

logger = logging.getLogger(__name__)

HNBracket = Literal["commutator", "group"]
HN_BRACKETS: Tuple[str, ...] = ("commutator", "group")


@dataclass(frozen=True)
class SporadicRow:
    """One row: the words, the exponents, the promised type and |G:2|."""

    name: str
    t1: str
    t2: str
    x1: str
    x2: str
    u1: str
    u2: str
    j1: int
    j2: int
    expected: StructureType
    order: int
    large: bool = False

    @property
    def filename(self) -> str:
        """Default generator file name, e.g. ``M12.2.txt``."""
        return f"{self.name.replace(':', '.')}.txt"


def _row(name: str, words: Tuple[str, ...], j: Tuple[int, int], expected: str, order: int, **kw: bool) -> SporadicRow:
    return SporadicRow(name, *words, j[0], j[1], StructureType.parse(expected), order, **kw)


_HN_U1 = {"commutator": "d^2[c,d^2]^10", "group": "d^2(cd^2)^10"}

SPORADIC_ROWS: Dict[str, SporadicRow] = {
    row.name: row
    for row in (
        _row(
            "M12:2",
            ("c", "(cd)^6", "t1t2", "t1t2^d", "[c,(dc)^2d^2]^3", "(dc)^2d[c,(dc)^2d]^2"),
            (1, 1),
            "4,4,5,6,6,3",
            190080,
        ),
        _row(
            "M22:2",
            ("((cd)^2d)^5", "d^2", "t1t2", "t1t2^c", "cd^2cd[t1,cd^2cd]^5", "[t1,c]^2"),
            (5, 9),
            "12,12,4,10,10,5",
            887040,
        ),
        _row(
            "J2:2",
            ("c", "(cd^2(cd)^2)^6", "t1t2", "t1t2^(d^4)", "d[c,d]^3", "d[c,d]^3"),
            (1, 9),
            "24,24,15,14,14,7",
            1209600,
        ),
        _row(
            "HS:2",
            ("c", "((cd)^3cd^2)^5", "t1t2", "t1t2^d", "d[c,d]", "d[c,d]"),
            (1, 1),
            "8,8,8,6,6,15",
            88704000,
        ),
        _row(
            "J3:2",
            ("c", "(cd)^12", "t1t2", "t1t2^d", "d[c,d]^4", "d[c,d]^4"),
            (21, 1),
            "34,34,17,24,24,4",
            100465920,
        ),
        _row(
            "McL:2",
            ("c", "((cd)^2(cd^2)^2(cd)^2d)^2", "t1t2", "t1t2^((dcd)^2)", "d^2[c,d^2]^7", "dcd[c,dcd]^7"),
            (1, 7),
            "8,8,3,10,10,5",
            1796256000,
        ),
        _row(
            "He:2",
            ("c", "d^3", "t1t2", "t1t2^(cd(cd^2)^2c)", "d[c,d]^7", "d[c,d]^7"),
            (15, 19),
            "16,16,7,30,30,5",
            8060774400,
        ),
        _row(
            "Suz:2",
            ("c", "(cd)^14", "t1t2", "t1t2^((dc)^2(d^2c)^2d^2)", "d[c,d]^3", "d[c,d]^3"),
            (9, 3),
            "10,10,3,8,8,13",
            896690995200,
        ),
        _row(
            "ON:2",
            ("c", "d^2", "t1t2", "t1t2^(cd)", "[c,d]^5", "[c,d]^5"),
            (7, 1),
            "38,38,19,56,56,28",
            921631011840,
        ),
        _row(
            "Fi22:2",
            ("(cd^4)^10", "(cd^3)^15", "t1t2^(dcd^6)", "t1t2^(dcd)", "[t1,d^3]^3", "[t1,d]^3"),
            (3, 1),
            "10,10,11,12,12,4",
            129123503308800,
            large=True,
        ),
        _row(
            "HN:2",
            ("c", "(cd^3(cd)^2)^12", "t1t2^((dcd)^2d^2)", "t1t2^(dcd^4cd^2)", _HN_U1["commutator"], "d[c,d]^4"),
            (1, 39),
            "18,18,25,44,44,22",
            546061824000000,
            large=True,
        ),
        _row(
            "Fi24",
            ("d^4", "((cd)^2d^3)^33", "t1t2^(d^4c)", "t1t2^(dcd^2c)", "c[t1,c]", "c[t1,c]"),
            (7, 25),
            "66,66,33,84,84,26",
            2510411418381323442585600,
            large=True,
        ),
    )
}


def _key(name: str) -> str:
    return name.replace(".", ":").replace("'", "").replace(" ", "").lower()


def lookup_row(name: str) -> SporadicRow:
    """Accepts ``M12:2``, ``M12.2``, ``O'N:2`` and similar spellings."""
    wanted = _key(name)
    for row in SPORADIC_ROWS.values():
        if _key(row.name) == wanted:
            return row
    raise BeauvilleError(f"no table row for '{name}'; known groups: {', '.join(SPORADIC_ROWS)}", context={"group": name})


@dataclass(frozen=True)
class AtlasOutcome:
    """Evaluated row with its structure, witness and every disagreement found."""

    row: SporadicRow
    structure: BeauvilleStructure
    witness: StronglyRealWitness
    hn_bracket: Optional[str] = None
    notes: Tuple[str, ...] = ()
    discrepancies: Tuple[str, ...] = ()
    report: Optional[VerificationReport] = field(default=None, compare=False)
    witness_report: Optional[WitnessReport] = field(default=None, compare=False)

    @property
    def expected_type(self) -> StructureType:
        return self.row.expected

    def as_dict(self) -> dict:
        return {
            "group": self.row.name,
            "hn_bracket": self.hn_bracket,
            "expected_type": str(self.row.expected),
            "type": str(self.structure.type()),
            "notes": list(self.notes),
            "discrepancies": list(self.discrepancies),
        }


def _assemble(
    row: SporadicRow, c: Permutation, d: Permutation, u1_word: str
) -> Tuple[BeauvilleStructure, StronglyRealWitness, List[str]]:
    """Structure, witness, and the involution-order problems found on the way."""
    env: Dict[str, Permutation] = {"c": c, "d": d}
    env["t1"] = evaluate_word(row.t1, env)
    env["t2"] = evaluate_word(row.t2, env)
    t1 = env["t1"]
    issues: List[str] = []
    for label in ("t1", "t2"):
        o = env[label].order()
        if o != 2:
            issues.append(f"{label} has order {o}, not 2")

    elements = []
    for x_word, u_word, j, i in ((row.x1, u1_word, row.j1, 1), (row.x2, row.u2, row.j2, 2)):
        x = evaluate_word(x_word, env)
        u = evaluate_word(u_word, env)
        if not u.commutes_with(t1):
            raise WitnessError(f"u{i} does not centralize t1", context={"group": row.name, "word": u_word})
        elements.append((x, (x ** j).conjugate(u)))

    G = GroupHandle([c, d], declared_order=row.order, name=row.name)
    s = BeauvilleStructure(G, elements[0], elements[1], name=row.name)
    return s, StronglyRealWitness(OvergroupConjugation(t1)), issues


def sporadic_structure(
    name: str,
    c: Permutation,
    d: Permutation,
    *,
    hn_bracket: Optional[HNBracket] = None,
) -> AtlasOutcome:
    """
    Evaluate a table row on standard generators (c, d), without verification.

    For HN:2 with no ``hn_bracket`` both readings are evaluated and the one
    whose type matches the table is returned.

    Raises:
        BeauvilleError: unknown group name.
        WitnessError: u1 or u2 does not commute with t1.
    """
    row = lookup_row(name)
    if hn_bracket is not None and hn_bracket not in HN_BRACKETS:
        raise ValueError(f"hn_bracket must be one of {HN_BRACKETS}")
    if row.name != "HN:2":
        s, w, issues = _assemble(row, c, d, row.u1)
        return AtlasOutcome(row, s, w, None, (), tuple(issues))

    readings = [hn_bracket] if hn_bracket is not None else list(HN_BRACKETS)
    first: Optional[AtlasOutcome] = None
    for reading in readings:
        s, w, issues = _assemble(row, c, d, _HN_U1[reading])
        outcome = AtlasOutcome(row, s, w, reading, (f"u1 read as {_HN_U1[reading]}",), tuple(issues))
        if s.type() == row.expected:
            return outcome
        first = first or outcome
    return first  # type: ignore[return-value]


def verify_sporadic(
    name: str,
    c: Permutation,
    d: Permutation,
    *,
    hn_bracket: Optional[HNBracket] = None,
) -> AtlasOutcome:
    """
    Evaluate a row, then verify structure and witness against the table.

    Disagreements (group order, type, generation, condition dagger, witness,
    involution orders) become discrepancies; they are logged at WARNING.
    """
    outcome = sporadic_structure(name, c, d, hn_bracket=hn_bracket)
    row, s = outcome.row, outcome.structure
    found = list(outcome.discrepancies)
    notes = list(outcome.notes)

    order = s.group.order()
    if order != row.order:
        found.append(f"<c,d> has order {order}, expected {row.order}")
    if row.large:
        notes.append("large group: conjugacy checks may stay undetermined")

    report = verify_structure(s)
    if report.type != row.expected:
        found.append(f"type {report.type} differs from the table's {row.expected}")
    for label, st in (
        ("generation of pair 1", report.generation[0]),
        ("generation of pair 2", report.generation[1]),
        ("condition dagger", report.dagger),
    ):
        if not st.is_pass:
            found.append(f"{label}: {st}")

    try:
        witness_report: Optional[WitnessReport] = inspect_witness(s, outcome.witness, report=report)
    except BeauvilleError as e:
        witness_report = None
        found.append(f"witness: {e}")
    if witness_report is not None and not witness_report.verdict.is_pass:
        found.append(f"witness: {witness_report.verdict}")

    for d_ in found:
        logger.warning(f"{row.name}: {d_}")
    logger.info(f"Table row {row.name}: type {report.type}, {len(found)} discrepancies")
    return AtlasOutcome(
        row,
        s,
        outcome.witness,
        outcome.hn_bracket,
        tuple(notes),
        tuple(found),
        report,
        witness_report,
    )


__all__ = [
    "HNBracket",
    "HN_BRACKETS",
    "SporadicRow",
    "SPORADIC_ROWS",
    "lookup_row",
    "AtlasOutcome",
    "sporadic_structure",
    "verify_sporadic",
]

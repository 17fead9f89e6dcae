"""
Standard-generator words and the sporadic G:2 table.

Main exports:
    - parse_word / format_word / evaluate_word: the word language
    - load_generators: read (c, d) from a generator file
    - sporadic_structure / verify_sporadic: build and check a table row
"""

from .generators import load_generators, parse_generators
from .table import (
    HN_BRACKETS,
    SPORADIC_ROWS,
    AtlasOutcome,
    HNBracket,
    SporadicRow,
    lookup_row,
    sporadic_structure,
    verify_sporadic,
)
from .words import Atom, Commutator, Conjugate, Power, Product, WordExpr, atoms, evaluate_word, format_word, parse_word

__all__ = [
    "load_generators",
    "parse_generators",
    "HN_BRACKETS",
    "SPORADIC_ROWS",
    "AtlasOutcome",
    "HNBracket",
    "SporadicRow",
    "lookup_row",
    "sporadic_structure",
    "verify_sporadic",
    "Atom",
    "Commutator",
    "Conjugate",
    "Power",
    "Product",
    "WordExpr",
    "atoms",
    "evaluate_word",
    "format_word",
    "parse_word",
]

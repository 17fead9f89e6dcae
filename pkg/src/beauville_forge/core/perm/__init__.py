"""Permutation algebra on {1..n} with cycle-notation parsing and printing."""

from .permutation import (
    CycleType,
    Parity,
    Permutation,
    PermutationInvariants,
    compose,
    direct_sum,
    format_cycles,
    invariants,
    parse_cycles,
    parse_image_list,
    power,
)

__all__ = [
    "CycleType",
    "Parity",
    "Permutation",
    "PermutationInvariants",
    "compose",
    "direct_sum",
    "format_cycles",
    "invariants",
    "parse_cycles",
    "parse_image_list",
    "power",
]

"""
Explicit families of strongly real Beauville structures.

Main exports:
    - FamilyRequest / Construction: what to build and what came out
    - construct: build one family instance and verify it
    - families: names accepted by ``construct``
    - coprime_direct_product / product_double: structures on direct products

Importing this package registers every family.
"""

from . import abelian, alternating, mathieu, products, suzuki, symmetric  # noqa: F401
from .abelian import abelian_structure, cyclic_square
from .alternating import alt_4r_structure, alt_coprime_structure, alt_power_structure, alternating_group, power_group
from .base import (
    NO_LIMITS,
    READINGS,
    Construction,
    FamilyRequest,
    Limits,
    Reading,
    build,
    check_construction,
    construct,
    families,
    register_family,
    with_reading,
)
from .mathieu import NAMES as MATHIEU_NAMES
from .mathieu import mathieu_double_structure, printed_elements
from .products import Embedding, coprime_direct_product, embed_product, product_double, product_double_structure
from .suzuki import (
    SuzukiParameters,
    choose_alpha_beta,
    first_triple,
    gamma_of,
    second_pair,
    suzuki_group,
    suzuki_order,
    suzuki_parameters,
    suzuki_structure,
)
from .symmetric import second_prime, sym_double_structure, symmetric_square

__all__ = [
    "NO_LIMITS",
    "READINGS",
    "Construction",
    "FamilyRequest",
    "Limits",
    "Reading",
    "build",
    "check_construction",
    "construct",
    "families",
    "register_family",
    "with_reading",
    "abelian_structure",
    "cyclic_square",
    "alt_4r_structure",
    "alt_coprime_structure",
    "alt_power_structure",
    "alternating_group",
    "power_group",
    "MATHIEU_NAMES",
    "mathieu_double_structure",
    "printed_elements",
    "Embedding",
    "coprime_direct_product",
    "embed_product",
    "product_double",
    "product_double_structure",
    "SuzukiParameters",
    "choose_alpha_beta",
    "first_triple",
    "gamma_of",
    "second_pair",
    "suzuki_group",
    "suzuki_order",
    "suzuki_parameters",
    "suzuki_structure",
    "second_prime",
    "sym_double_structure",
    "symmetric_square",
]

"""GF(2^m) arithmetic and the 4x4 matrices realizing the Suzuki groups."""

from .gf2m import (
    DEFAULT_MODULI,
    FieldElement,
    FieldSpec,
    ff_arith,
    format_poly,
    is_irreducible,
    least_irreducible,
)
from .matrix import (
    DEFAULT_ORDER_BOUND,
    CharPoly,
    SuzukiMatrix,
    candidate_orders,
    char_poly,
    eigenvalues,
    element_order_matrix,
    mat_ops,
    share_eigenvector,
)

__all__ = [
    "DEFAULT_MODULI",
    "DEFAULT_ORDER_BOUND",
    "FieldElement",
    "FieldSpec",
    "ff_arith",
    "format_poly",
    "is_irreducible",
    "least_irreducible",
    "CharPoly",
    "SuzukiMatrix",
    "candidate_orders",
    "char_poly",
    "eigenvalues",
    "element_order_matrix",
    "mat_ops",
    "share_eigenvector",
]

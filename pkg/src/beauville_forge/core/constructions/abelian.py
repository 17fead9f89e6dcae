# beauville_forge/core/constructions/abelian.py
"""Z_n x Z_n for gcd(n, 6) = 1, found by search and made strongly real by inversion."""

from __future__ import annotations

import logging
import math

from ..exceptions import ConstructionError
from ..groups import GroupHandle
from ..structures import AbelianInversion, StronglyRealWitness, search_beauville
from .base import NO_LIMITS, Construction, FamilyRequest, Limits, cycle, register_family, span

logger = logging.getLogger(__name__)


def cyclic_square(n: int, limits: Limits = NO_LIMITS) -> GroupHandle:
    """Z_n x Z_n acting on n + n points, one regular cycle per block."""
    degree = 2 * n
    return GroupHandle(
        [cycle(span(1, n), degree), cycle(span(n + 1, degree), degree)],
        orbit_blocks=[span(1, n), span(n + 1, degree)],
        name=f"Z{n}xZ{n}",
        **limits.handle_kwargs(),
    )


@register_family("abelian")
def abelian_structure(request: FamilyRequest, limits: Limits = NO_LIMITS) -> Construction:
    (n,) = request.ints(1)
    if n <= 1 or math.gcd(n, 6) != 1:
        raise ConstructionError(
            f"Z_n x Z_n is a Beauville group only when gcd(n, 6) = 1 (got n={n})",
            family=request.family,
            params=[n],
        )
    G = cyclic_square(n, limits)
    outcome = search_beauville(G)
    if outcome.structure is None:
        raise ConstructionError("search found no structure", family=request.family, params=[n])
    s = outcome.structure
    logger.debug(f"abelian({n}): first structure after {outcome.pairs_examined} pairs")
    return Construction(
        request,
        s,
        StronglyRealWitness(AbelianInversion()),
        notes=(f"pairs found by exhaustive search over {outcome.pairs_examined} candidates",),
    )


__all__ = ["cyclic_square", "abelian_structure"]

"""Milnor approximations ``B_nG = G^{⋈(n+1)} / G`` of classifying spaces."""

import logging

from lens_topology.core.dset import DeltaMap, DeltaSet
from lens_topology.errors import PreconditionError
from lens_topology.groups.action import GroupAction, iterated_join_action, quotient, translation_action
from lens_topology.groups.group import FiniteGroup, cyclic
from lens_topology.homology.homology import homology

logger = logging.getLogger(__name__)


def milnor_total(G: FiniteGroup, n: int) -> GroupAction:
    """``E_nG``: the (n+1)-fold join of G with the diagonal left translation action.

    The action is always free, since translation is free on vertices and every
    simplex of the join has a vertex in some copy of G.
    """
    if n < 0:
        raise PreconditionError(f"milnor_total() needs n >= 0, got {n}", n=n)
    return iterated_join_action(translation_action(G), n + 1)


def milnor_base(G: FiniteGroup, n: int) -> tuple[DeltaSet, DeltaMap]:
    """``B_nG = E_nG / G`` and its covering projection."""
    B, projection = quotient(milnor_total(G, n))
    logger.debug("B_%d(%r): f-vector %s", n, G, list(B.counts))
    return B, projection


def real_projective(n: int) -> tuple[DeltaSet, DeltaMap]:
    """``RP^n`` as the quotient of the join of n+1 copies of S^0 by the antipodal swap."""
    return milnor_base(cyclic(2), n)


def stability_check(G: FiniteGroup, k: int, n1: int, n2: int) -> bool:
    """Whether ``H_k(B_{n1}G) = H_k(B_{n2}G)``; only asked in the stable range.

    Raises:
        PreconditionError: If k > min(n1, n2) - 1
    """
    if k < 0 or k > min(n1, n2) - 1:
        raise PreconditionError(
            f"Degree {k} is outside the stable range of B_{n1} and B_{n2}",
            k=k,
            n1=n1,
            n2=n2,
        )
    first, _ = milnor_base(G, n1)
    second, _ = milnor_base(G, n2)
    return homology(first, k) == homology(second, k)

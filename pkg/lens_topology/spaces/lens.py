"""Lens spaces as quotients of joins of rotated polygons, and their minimal chain complex."""

from dataclasses import dataclass
import logging
import math

import numpy as np

from lens_topology.core.dset import DeltaMap, DeltaSet, checked_map
from lens_topology.errors import NonPrimeParameterError, PreconditionError
from lens_topology.groups.action import GroupAction, join_actions, quotient, rotation_action
from lens_topology.homology.chain import ChainComplex
from lens_topology.homology.matrix import IntMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LensParams:
    """Modulus m and rotation parameters l_1..l_n (stored mod m)."""
    m: int
    ls: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.m < 2:
            raise PreconditionError(f"Lens modulus must be >= 2, got {self.m}", m=self.m)
        if len(self.ls) == 0:
            raise PreconditionError("Lens space needs at least one parameter")
        object.__setattr__(self, "ls", tuple(int(l) % self.m for l in self.ls))

    @property
    def n(self) -> int:
        return len(self.ls)

    def extended(self, l_next: int) -> "LensParams":
        return LensParams(self.m, self.ls + (l_next,))

    def check_coprime(self) -> None:
        """Raise NonPrimeParameterError for the first l_i sharing a factor with m (1-based)."""
        for i, l in enumerate(self.ls, start=1):
            g = math.gcd(l, self.m)
            if g != 1:
                raise NonPrimeParameterError(i, g)


def lens_action(p: LensParams) -> GroupAction:
    """``Z_m`` acting diagonally on ``S^{2n-1}`` = join of n m-gons, rotating the i-th by l_i."""
    action = rotation_action(p.m, p.ls[0])
    for l in p.ls[1:]:
        action = join_actions(action, rotation_action(p.m, l))
    return action


def lens_space(p: LensParams) -> tuple[DeltaSet, DeltaMap]:
    """``L(m; l_1..l_n)`` and its covering projection from ``S^{2n-1}``.

    Raises:
        NonPrimeParameterError: If some l_i is not prime to m
    """
    p.check_coprime()
    L, projection = quotient(lens_action(p))
    logger.debug("lens space m=%d ls=%s: f-vector %s", p.m, list(p.ls), list(L.counts))
    return L, projection


def lens_inclusion(p: LensParams, l_next: int) -> DeltaMap:
    """The map ``L(l_1..l_n) → L(l_1..l_n, l_{n+1})`` induced by the join inclusion."""
    small, small_proj = lens_space(p)
    big, big_proj = lens_space(p.extended(l_next))
    comp = []
    for k, proj in enumerate(small_proj.comp):
        _, preimage = np.unique(proj, return_index=True)
        # pure simplices of the first join factor keep their index in the bigger join
        comp.append(big_proj.comp[k][preimage])
    return checked_map(DeltaMap(small, big, tuple(comp)))


def cyclic_cellular_chain(m: int, top: int) -> ChainComplex:
    """One cell per degree ``0..top``; ``∂_k`` is 0 for k odd and ``m`` for k even."""
    if top < 0:
        raise PreconditionError(f"Top degree must be >= 0, got {top}", top=top)
    boundaries = [IntMatrix(1, 1, {(0, 0): m if k % 2 == 0 else 0}) for k in range(1, top + 1)]
    return ChainComplex.from_boundaries([1] * (top + 1), boundaries)


def lens_minimal_chain(m: int, n: int) -> ChainComplex:
    """The one-cell-per-dimension complex of an n-parameter lens space, truncated at 2n-1."""
    if m < 2 or n < 1:
        raise PreconditionError(f"lens_minimal_chain() needs m >= 2 and n >= 1, got m={m}, n={n}", m=m, n=n)
    return cyclic_cellular_chain(m, 2 * n - 1)

"""Simplicial group actions, freeness and quotients by free actions."""

from dataclasses import dataclass
import logging
from typing import Optional

import numpy as np

from lens_topology.core.dset import (
    DeltaMap,
    DeltaSet,
    ValidationReport,
    checked,
    checked_map,
    discrete,
    join,
    join_offsets,
    polygon_circle,
)
from lens_topology.errors import GroupMismatchError, NotFreeError, PreconditionError
from lens_topology.groups.group import FiniteGroup, cyclic

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GroupAction:
    """A group acting on a Δ-set by simplicial automorphisms.

    ``act[k]`` has shape ``(order, counts[k])``; row g is the permutation of
    k-simplices induced by group element g.
    """
    group: FiniteGroup
    space: DeltaSet
    act: tuple[np.ndarray, ...]

    def __post_init__(self) -> None:
        frozen = []
        for k, perms in enumerate(self.act):
            arr = np.array(perms, dtype=np.int64).reshape(self.group.order, self.space.count(k))
            arr.flags.writeable = False
            frozen.append(arr)
        object.__setattr__(self, "act", tuple(frozen))

    def permutation(self, g: int, k: int) -> np.ndarray:
        return self.act[k][g]


def validate_action(a: GroupAction) -> ValidationReport:
    """Check identity, the homomorphism law and compatibility with faces.

    Violations are ``(dimension, simplex, description)``.
    """
    G, D = a.group, a.space
    violations = []
    if len(a.act) != len(D.counts):
        return ValidationReport([(-1, -1, "one permutation table per dimension")])
    idx_g = np.arange(G.order)
    for k, perms in enumerate(a.act):
        n = D.counts[k]
        if not np.array_equal(np.sort(perms, axis=1), np.broadcast_to(np.arange(n), perms.shape)):
            violations.append((k, -1, "each element permutes the simplices"))
            continue
        for s in np.nonzero(perms[0] != np.arange(n))[0]:
            violations.append((k, int(s), "identity acts trivially"))
        lhs = perms[G.mult]
        rhs = perms[idx_g[:, None, None], perms[None, :, :]]
        for s in np.unique(np.nonzero(lhs != rhs)[2]):
            violations.append((k, int(s), "act(gh) = act(g)∘act(h)"))
        if k == 0:
            continue
        for i in range(k + 1):
            face = D.face(k, i)
            for s in np.unique(np.nonzero(a.act[k - 1][:, face] != face[perms])[1]):
                violations.append((k, int(s), f"g∘d_{i} = d_{i}∘g"))
    return ValidationReport(violations)


def rotation_action(m: int, l: int) -> GroupAction:
    """``Z_m`` acting on the m-gon; the generator rotates by ``l`` steps."""
    if m < 1:
        raise PreconditionError(f"rotation_action() needs m >= 1, got {m}", m=m)
    circle = polygon_circle(m)
    g = np.arange(m)
    j = np.arange(m)
    perms = (j[None, :] + (g[:, None] * l)) % m
    return GroupAction(cyclic(m), circle, (perms, perms))


def translation_action(G: FiniteGroup) -> GroupAction:
    """``G`` acting on its own elements (as points) by left translation."""
    return GroupAction(G, discrete(G.order), (G.mult,))


def join_actions(a: GroupAction, b: GroupAction) -> GroupAction:
    """The diagonal action on ``a.space ⋈ b.space``.

    Raises:
        GroupMismatchError: If the two actions are by different groups
    """
    if not a.group.same_as(b.group):
        raise GroupMismatchError(
            "join_actions needs the same group on both sides",
            left=a.group.order,
            right=b.group.order,
        )
    A, B = a.space, b.space
    J = join(A, B)
    order = a.group.order
    perms = []
    for n in range(J.dimension + 1):
        offsets, _ = join_offsets(A, B, n)
        parts = []
        if n <= A.dimension:
            parts.append(a.act[n])
        if n <= B.dimension:
            parts.append(A.count(n) + b.act[n])
        for p in range(n):
            q = n - 1 - p
            a_p, b_q = A.count(p), B.count(q)
            if a_p * b_q == 0:
                continue
            sigma = np.repeat(np.arange(a_p), b_q)
            tau = np.tile(np.arange(b_q), a_p)
            parts.append(offsets[p] + a.act[p][:, sigma] * b_q + b.act[q][:, tau])
        perms.append(np.concatenate(parts, axis=1) if parts else np.zeros((order, 0), dtype=np.int64))
    return GroupAction(a.group, J, tuple(perms))


def iterated_join_action(a: GroupAction, copies: int) -> GroupAction:
    """The diagonal action on the join of ``copies`` copies of ``a.space``."""
    if copies < 1:
        raise PreconditionError(f"Need at least one copy, got {copies}", copies=copies)
    result = a
    for _ in range(copies - 1):
        result = join_actions(result, a)
    return result


def fixed_point(a: GroupAction) -> Optional[tuple[int, int, int]]:
    """First ``(element, dimension, simplex)`` with a non-identity element fixing a simplex."""
    for g in range(1, a.group.order):
        for k, perms in enumerate(a.act):
            fixed = np.nonzero(perms[g] == np.arange(perms.shape[1]))[0]
            if len(fixed):
                return g, k, int(fixed[0])
    return None


def is_free(a: GroupAction) -> bool:
    return fixed_point(a) is None


def action_map(a: GroupAction, g: int) -> DeltaMap:
    """The automorphism of ``a.space`` induced by element g."""
    return DeltaMap(a.space, a.space, tuple(perms[g] for perms in a.act))


def quotient(a: GroupAction) -> tuple[DeltaSet, DeltaMap]:
    """Orbit Δ-set of a free action together with the covering projection.

    Each orbit is represented by its smallest simplex index; quotient
    simplices are ordered by representative.

    Raises:
        NotFreeError: With a witness element and simplex if the action is not free
    """
    witness = fixed_point(a)
    if witness is not None:
        raise NotFreeError(*witness)

    D = a.space
    reps = []
    projection = []
    for perms in a.act:
        orbit_min = perms.min(axis=0)
        rep, inverse = np.unique(orbit_min, return_inverse=True)
        reps.append(rep)
        projection.append(inverse.reshape(-1))

    faces: list[tuple[np.ndarray, ...]] = [()]
    for k in range(1, D.dimension + 1):
        faces.append(tuple(projection[k - 1][D.face(k, i)[reps[k]]] for i in range(k + 1)))
    Q = checked(DeltaSet(counts=tuple(len(r) for r in reps), faces=tuple(faces)))
    logger.debug("quotient by order %d: %s -> %s", a.group.order, list(D.counts), list(Q.counts))
    return Q, checked_map(DeltaMap(D, Q, tuple(projection)))

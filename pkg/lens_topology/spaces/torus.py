"""Mapping tori of Δ-set automorphisms and the classical two-triangle torus.

Each k-simplex σ of D contributes one bottom copy ``B(σ)`` and the interior
slices ``S_1(σ) .. S_k(σ)`` of its prism; each (k-1)-simplex σ contributes
the top-dimensional prism pieces ``τ_0(σ) .. τ_{k-1}(σ)``. Writing the prism
vertices as ``v_0..v_p`` (bottom) and ``w_0..w_p`` (top), the slice ``S_j``
is ``[v_0..v_{j-1}, w_j..w_p]`` and ``τ_j`` is ``[v_0..v_j, w_j..w_p]``. The
top end ``S_0(σ)`` is glued to ``B(f(σ))`` and ``S_{p+1}(σ)`` is ``B(σ)``.

Layout of dimension k: ``B`` block, then slice blocks ``j = 1..k``, then
prism blocks ``j = 0..k-1``.
"""

import logging

import numpy as np

from lens_topology.core.dset import DeltaMap, DeltaSet, checked, validate_map
from lens_topology.errors import NotAutomorphismError
from lens_topology.groups.action import action_map, rotation_action

logger = logging.getLogger(__name__)


def _require_automorphism(D: DeltaSet, f: DeltaMap) -> None:
    if f.source != D or f.target != D:
        raise NotAutomorphismError("Monodromy must be a self-map of the fibre", counts=list(D.counts))
    if not f.is_bijective():
        raise NotAutomorphismError("Monodromy is not bijective", counts=list(D.counts))
    report = validate_map(f)
    if not report.ok:
        raise NotAutomorphismError(
            "Monodromy does not commute with faces",
            first_violation=list(report.violations[0]),
        )


def mapping_torus(D: DeltaSet, f: DeltaMap) -> DeltaSet:
    """``D × [0, 1]`` with ``(x, 1)`` glued to ``(f(x), 0)``.

    Raises:
        NotAutomorphismError: If f is not a bijective Δ-map from D to itself
    """
    _require_automorphism(D, f)
    c = D.count

    def slice_index(k: int, j: int, sigma: np.ndarray) -> np.ndarray:
        if j == 0:
            return f.comp[k][sigma]
        if j == k + 1:
            return sigma
        return j * c(k) + sigma

    def prism_index(k: int, j: int, sigma: np.ndarray) -> np.ndarray:
        return (k + 1) * c(k) + j * c(k - 1) + sigma

    top = D.dimension + 1
    counts = [(k + 1) * c(k) + k * c(k - 1) for k in range(top + 1)]
    faces: list[tuple[np.ndarray, ...]] = [()]
    for k in range(1, top + 1):
        own = np.arange(c(k), dtype=np.int64)
        lower = np.arange(c(k - 1), dtype=np.int64)
        per_face = []
        for i in range(k + 1):
            parts = []
            if k <= D.dimension:
                d_i = D.face(k, i)
                parts.append(d_i)
                for j in range(1, k + 1):
                    parts.append(slice_index(k - 1, j - 1 if i < j else j, d_i))
            for j in range(k):
                if i < j:
                    parts.append(prism_index(k - 1, j - 1, D.face(k - 1, i)))
                elif i == j:
                    parts.append(slice_index(k - 1, j, lower))
                elif i == j + 1:
                    parts.append(slice_index(k - 1, j + 1, lower))
                else:
                    parts.append(prism_index(k - 1, j, D.face(k - 1, i - 1)))
            per_face.append(np.concatenate(parts) if parts else own[:0])
        faces.append(tuple(per_face))

    logger.debug("mapping torus of %s: %s", list(D.counts), counts)
    return checked(DeltaSet(counts=tuple(counts), faces=tuple(faces)))


def circle_rotation(m: int, l: int = 1) -> DeltaMap:
    """Rotation of the m-gon by l steps."""
    return action_map(rotation_action(m, l), 1 % m)


def two_triangle_torus() -> DeltaSet:
    """One vertex, edges a, b, c and triangles L = (b, c, a), U = (a, c, b) as (d0, d1, d2)."""
    a, b, c = 0, 1, 2
    zeros = np.zeros(3, dtype=np.int64)
    return checked(
        DeltaSet(
            counts=(1, 3, 2),
            faces=((), (zeros, zeros), (np.array([b, a]), np.array([c, c]), np.array([a, b]))),
            labels=(("v",), ("a", "b", "c"), ("L", "U")),
        )
    )

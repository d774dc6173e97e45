"""Chain complexes of free abelian groups and the simplicial boundary."""

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from lens_topology.core.dset import DeltaSet, ValidationReport
from lens_topology.errors import PreconditionError
from lens_topology.homology.matrix import IntMatrix
from lens_topology.homology.snf import SmithForm, smith_normal_form


@dataclass(frozen=True, eq=False)
class ChainComplex:
    """Free chain groups ``Z^{ranks[k]}`` with boundaries ``∂_k: C_k → C_{k-1}``.

    ``boundaries[k]`` has shape ``ranks[k-1] × ranks[k]``; ``boundaries[0]``
    is the zero map out of ``C_0``. Smith forms are computed once per degree.
    """
    ranks: tuple[int, ...]
    boundaries: tuple[IntMatrix, ...]
    _smith: dict[int, SmithForm] = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "ranks", tuple(int(r) for r in self.ranks))
        if len(self.boundaries) != len(self.ranks):
            raise PreconditionError(
                f"Need one boundary per degree: {len(self.ranks)} ranks, {len(self.boundaries)} boundaries"
            )
        for k, d in enumerate(self.boundaries):
            expected = (self.rank(k - 1), self.rank(k)) if k > 0 else (0, self.rank(0))
            if d.shape != expected:
                raise PreconditionError(f"∂_{k} has shape {d.shape}, expected {expected}")

    @classmethod
    def from_boundaries(cls, ranks: Sequence[int], boundaries: Sequence[IntMatrix]) -> "ChainComplex":
        """Build from ``∂_1 .. ∂_top`` (the zero ``∂_0`` is added)."""
        ranks = tuple(ranks)
        zero = IntMatrix.zeros(0, ranks[0] if ranks else 0)
        return cls(ranks, (zero,) + tuple(boundaries) if ranks else ())

    @property
    def top_degree(self) -> int:
        return len(self.ranks) - 1

    def rank(self, k: int) -> int:
        if 0 <= k < len(self.ranks):
            return self.ranks[k]
        return 0

    def boundary(self, k: int) -> IntMatrix:
        if 1 <= k < len(self.ranks):
            return self.boundaries[k]
        return IntMatrix.zeros(self.rank(k - 1), self.rank(k))

    def smith(self, k: int) -> SmithForm:
        if k not in self._smith:
            self._smith[k] = smith_normal_form(self.boundary(k))
        return self._smith[k]

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * r for k, r in enumerate(self.ranks))


def validate_complex(C: ChainComplex) -> ValidationReport:
    """Check ``∂_{k-1} ∘ ∂_k = 0``; violations are ``(k, -1, "∂∘∂ = 0")``."""
    violations = []
    for k in range(2, C.top_degree + 1):
        if not (C.boundary(k - 1) @ C.boundary(k)).is_zero():
            violations.append((k, -1, "∂∘∂ = 0"))
    return ValidationReport(violations)


def boundary_matrix(D: DeltaSet, k: int) -> IntMatrix:
    """``∂_k = Σ (-1)^i d_i`` as a ``|D_{k-1}| × |D_k|`` matrix.

    Coinciding faces are summed, so entries may cancel to zero.
    """
    if k < 1:
        raise PreconditionError(f"boundary_matrix() needs k >= 1, got {k}", k=k)
    rows, cols = D.count(k - 1), D.count(k)
    if k > D.dimension or cols == 0:
        return IntMatrix.zeros(rows, cols)
    simplices = np.arange(cols, dtype=np.int64)
    keys = np.concatenate([D.face(k, i) * cols + simplices for i in range(k + 1)])
    signs = np.concatenate([np.full(cols, (-1) ** i, dtype=np.int64) for i in range(k + 1)])
    uniq, inverse = np.unique(keys, return_inverse=True)
    sums = np.zeros(len(uniq), dtype=np.int64)
    np.add.at(sums, inverse.reshape(-1), signs)
    nonzero = np.nonzero(sums)[0]
    return IntMatrix(
        rows,
        cols,
        {(int(uniq[t] // cols), int(uniq[t] % cols)): int(sums[t]) for t in nonzero},
    )


def chain_complex(D: DeltaSet) -> ChainComplex:
    """The simplicial chain complex of a Δ-set."""
    return ChainComplex.from_boundaries(
        D.counts, [boundary_matrix(D, k) for k in range(1, D.dimension + 1)]
    )

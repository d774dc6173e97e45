"""Finite semi-simplicial sets, their maps, validation and constructions."""

from dataclasses import dataclass, field
from itertools import combinations
import logging
from typing import Any, Iterable, Optional, Sequence

import numpy as np

from lens_topology.config import current_settings
from lens_topology.errors import (
    InvalidDeltaSetError,
    InvalidMapError,
    PreconditionError,
    SimplexLimitExceededError,
)

logger = logging.getLogger(__name__)

Violation = tuple[int, int, str]


def _frozen_array(values: Any) -> np.ndarray:
    arr = np.array(values, dtype=np.int64).reshape(-1)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class DeltaSet:
    """A finite semi-simplicial set.

    Simplices are identified by ``(dimension, index)``. ``faces[k][i]`` maps
    each k-simplex to the index of its i-th face; ``faces[0]`` is empty.
    Trailing empty dimensions are dropped, so ``dimension`` is always the top
    dimension that actually has simplices (-1 for the empty Δ-set).
    """
    counts: tuple[int, ...]
    faces: tuple[tuple[np.ndarray, ...], ...]
    labels: Optional[tuple[tuple[Any, ...], ...]] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        counts = [int(c) for c in self.counts]
        faces = [tuple(_frozen_array(f) for f in per_dim) for per_dim in self.faces]
        while faces and len(faces) < len(counts):
            faces.append(())
        while counts and counts[-1] == 0:
            counts.pop()
        faces = faces[: len(counts)]
        if faces:
            faces[0] = ()
        object.__setattr__(self, "counts", tuple(counts))
        object.__setattr__(self, "faces", tuple(faces))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(tuple(l) for l in self.labels[: len(counts)]))

    @property
    def dimension(self) -> int:
        return len(self.counts) - 1

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def is_empty(self) -> bool:
        return not self.counts

    def count(self, k: int) -> int:
        if 0 <= k < len(self.counts):
            return self.counts[k]
        return 0

    def face(self, k: int, i: int) -> np.ndarray:
        """Index array of the i-th face map on k-simplices."""
        return self.faces[k][i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DeltaSet):
            return NotImplemented
        if self.counts != other.counts:
            return False
        return all(
            len(fa) == len(fb) and all(np.array_equal(x, y) for x, y in zip(fa, fb))
            for fa, fb in zip(self.faces, other.faces)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"DeltaSet(counts={list(self.counts)})"


@dataclass(frozen=True, eq=False)
class DeltaMap:
    """A simplicial map: ``comp[k]`` sends source k-simplices to target k-simplices."""
    source: DeltaSet
    target: DeltaSet
    comp: tuple[np.ndarray, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "comp", tuple(_frozen_array(c) for c in self.comp))

    def __call__(self, k: int, simplex: int) -> int:
        return int(self.comp[k][simplex])

    def is_bijective(self) -> bool:
        if self.source.counts != self.target.counts:
            return False
        return all(
            np.array_equal(np.sort(c), np.arange(n)) for c, n in zip(self.comp, self.source.counts)
        )


@dataclass
class ValidationReport:
    """Result of checking Δ-set (or map, group, action) invariants."""
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return len(self.violations) == 0


def validate(D: DeltaSet) -> ValidationReport:
    """Check face-table shapes, index ranges and the simplicial identities.

    Args:
        D: The Δ-set to check

    Returns:
        ValidationReport listing every ``(dimension, simplex, identity)`` that fails
    """
    violations: list[Violation] = []
    if len(D.faces) != len(D.counts):
        violations.append((-1, -1, "one face table per dimension"))
        return ValidationReport(violations)
    for k, c in enumerate(D.counts):
        if c < 0:
            violations.append((k, -1, "simplex count is non-negative"))
    if violations:
        return ValidationReport(violations)

    in_range = [True] * len(D.counts)
    for k in range(1, D.dimension + 1):
        if len(D.faces[k]) != k + 1:
            violations.append((k, -1, f"{k + 1} face maps"))
            in_range[k] = False
            continue
        for i, f in enumerate(D.faces[k]):
            if len(f) != D.counts[k]:
                violations.append((k, -1, f"d_{i} has one entry per simplex"))
                in_range[k] = False
                continue
            bad = np.nonzero((f < 0) | (f >= D.counts[k - 1]))[0]
            for s in bad:
                violations.append((k, int(s), f"d_{i} in range"))
            if len(bad):
                in_range[k] = False

    for k in range(2, D.dimension + 1):
        if not (in_range[k] and in_range[k - 1]):
            continue
        lower = D.faces[k - 1]
        for j in range(1, k + 1):
            for i in range(j):
                lhs = lower[i][D.faces[k][j]]
                rhs = lower[j - 1][D.faces[k][i]]
                for s in np.nonzero(lhs != rhs)[0]:
                    violations.append((k, int(s), f"d_{i}∘d_{j} = d_{j - 1}∘d_{i}"))
    return ValidationReport(violations)


def checked(D: DeltaSet) -> DeltaSet:
    """Validate ``D`` when eager validation is configured; pass it through otherwise."""
    if current_settings().eager_validation:
        report = validate(D)
        if not report.ok:
            raise InvalidDeltaSetError(report)
    return D


def validate_map(f: DeltaMap) -> ValidationReport:
    """Check that ``f`` is defined in every dimension and commutes with faces."""
    violations: list[Violation] = []
    src, tgt = f.source, f.target
    if len(f.comp) != len(src.counts):
        return ValidationReport([(-1, -1, "one component per source dimension")])
    if src.dimension > tgt.dimension:
        return ValidationReport([(src.dimension, -1, "target has the source dimensions")])
    for k, c in enumerate(f.comp):
        if len(c) != src.counts[k]:
            violations.append((k, -1, "one entry per simplex"))
            return ValidationReport(violations)
        for s in np.nonzero((c < 0) | (c >= tgt.count(k)))[0]:
            violations.append((k, int(s), "component in range"))
    if violations:
        return ValidationReport(violations)
    for k in range(1, src.dimension + 1):
        for i in range(k + 1):
            lhs = f.comp[k - 1][src.face(k, i)]
            rhs = tgt.face(k, i)[f.comp[k]]
            for s in np.nonzero(lhs != rhs)[0]:
                violations.append((k, int(s), f"f∘d_{i} = d_{i}∘f"))
    return ValidationReport(violations)


def identity_map(D: DeltaSet) -> DeltaMap:
    return DeltaMap(D, D, tuple(np.arange(n) for n in D.counts))


def checked_map(f: DeltaMap, force: bool = False) -> DeltaMap:
    """Validate ``f`` when eager validation is configured or ``force`` is set."""
    if force or current_settings().eager_validation:
        report = validate_map(f)
        if not report.ok:
            raise InvalidMapError(
                f"Simplicial map fails validation ({len(report.violations)} violations)",
                first_violation=list(report.violations[0]),
            )
    return f


def compose(g: DeltaMap, f: DeltaMap) -> DeltaMap:
    """Return ``g ∘ f``.

    Raises:
        InvalidMapError: If either map is not simplicial or they do not compose
    """
    if f.target.counts != g.source.counts:
        raise InvalidMapError("Maps are not composable", left=list(g.source.counts), right=list(f.target.counts))
    checked_map(f, force=True)
    checked_map(g, force=True)
    return DeltaMap(f.source, g.target, tuple(g.comp[k][c] for k, c in enumerate(f.comp)))


def empty() -> DeltaSet:
    """The empty Δ-set (dimension -1)."""
    return DeltaSet(counts=(), faces=())


def discrete(k: int) -> DeltaSet:
    """``k`` vertices and nothing else."""
    if k < 1:
        raise PreconditionError(f"discrete() needs k >= 1, got {k}", k=k)
    return DeltaSet(counts=(k,), faces=((),), labels=(tuple(range(k)),))


def point() -> DeltaSet:
    return discrete(1)


def polygon_circle(m: int) -> DeltaSet:
    """The directed m-gon: edge e_j runs from v_j to v_{j+1 mod m}."""
    if m < 1:
        raise PreconditionError(f"polygon_circle() needs m >= 1, got {m}", m=m)
    j = np.arange(m)
    return checked(
        DeltaSet(
            counts=(m, m),
            faces=((), ((j + 1) % m, j)),
            labels=(tuple(f"v{i}" for i in range(m)), tuple(f"e{i}" for i in range(m))),
        )
    )


def total_simplices(D: DeltaSet) -> int:
    return D.total


def predicted_join_size(A: DeltaSet, B: DeltaSet) -> int:
    return (A.total + 1) * (B.total + 1) - 1


def join_offsets(A: DeltaSet, B: DeltaSet, n: int) -> tuple[dict[int, int], int]:
    """Start index of each mixed block ``p + q = n - 1`` inside ``(A⋈B)_n``."""
    start = A.count(n) + B.count(n)
    offsets = {}
    for p in range(n):
        offsets[p] = start
        start += A.count(p) * B.count(n - 1 - p)
    return offsets, start


def join(A: DeltaSet, B: DeltaSet) -> DeltaSet:
    """The join ``A ⋈ B``.

    ``(A⋈B)_n`` is laid out as ``A_n``, then ``B_n``, then the mixed blocks
    ``A_p × B_q`` (p + q = n - 1) by increasing p, each indexed row-major.
    In a mixed simplex all A-vertices precede all B-vertices.
    """
    predicted = predicted_join_size(A, B)
    limit = current_settings().max_simplices
    if predicted > limit:
        raise SimplexLimitExceededError(predicted, limit)

    if A.is_empty:
        return B
    if B.is_empty:
        return A

    top = A.dimension + B.dimension + 1
    counts = []
    offsets = []
    for n in range(top + 1):
        off, total = join_offsets(A, B, n)
        offsets.append(off)
        counts.append(total)

    faces: list[tuple[np.ndarray, ...]] = [()]
    for n in range(1, top + 1):
        lower_a = A.count(n - 1)
        per_face = []
        for i in range(n + 1):
            parts = []
            if n <= A.dimension:
                parts.append(A.face(n, i))
            if n <= B.dimension:
                parts.append(lower_a + B.face(n, i))
            for p in range(n):
                q = n - 1 - p
                a_p, b_q = A.count(p), B.count(q)
                if a_p * b_q == 0:
                    continue
                sigma = np.repeat(np.arange(a_p), b_q)
                tau = np.tile(np.arange(b_q), a_p)
                if i <= p:
                    if p == 0:
                        parts.append(lower_a + tau)
                    else:
                        parts.append(offsets[n - 1][p - 1] + A.face(p, i)[sigma] * b_q + tau)
                else:
                    j = i - p - 1
                    if q == 0:
                        parts.append(sigma)
                    else:
                        parts.append(offsets[n - 1][p] + sigma * B.count(q - 1) + B.face(q, j)[tau])
            per_face.append(np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64))
        faces.append(tuple(per_face))

    logger.debug("join %s ⋈ %s -> %s", list(A.counts), list(B.counts), counts)
    return checked(DeltaSet(counts=tuple(counts), faces=tuple(faces)))


def join_inclusion(A: DeltaSet, B: DeltaSet) -> tuple[DeltaMap, DeltaMap]:
    """The two canonical inclusions ``A → A⋈B`` and ``B → A⋈B``."""
    J = join(A, B)
    left = DeltaMap(A, J, tuple(np.arange(n) for n in A.counts))
    right = DeltaMap(B, J, tuple(A.count(k) + np.arange(n) for k, n in enumerate(B.counts)))
    return left, right


def disjoint_union(A: DeltaSet, B: DeltaSet) -> DeltaSet:
    """``A ⊔ B`` with the simplices of B placed after those of A."""
    top = max(A.dimension, B.dimension)
    counts = tuple(A.count(k) + B.count(k) for k in range(top + 1))
    faces: list[tuple[np.ndarray, ...]] = [()]
    for k in range(1, top + 1):
        per_face = []
        for i in range(k + 1):
            left = A.face(k, i) if k <= A.dimension else np.zeros(0, dtype=np.int64)
            right = B.face(k, i) + A.count(k - 1) if k <= B.dimension else np.zeros(0, dtype=np.int64)
            per_face.append(np.concatenate([left, right]))
        faces.append(tuple(per_face))
    return checked(DeltaSet(counts=counts, faces=tuple(faces)))


def sphere(n: int) -> DeltaSet:
    """``S^n`` as the join of ``n + 1`` copies of ``S^0``; ``sphere(-1)`` is empty."""
    if n < -1:
        raise PreconditionError(f"sphere() needs n >= -1, got {n}", n=n)
    result = empty()
    for _ in range(n + 1):
        result = join(result, discrete(2))
    return result


def from_simplicial_complex(facets: Iterable[Sequence[int]]) -> DeltaSet:
    """Δ-set of an ordered simplicial complex given by its facets.

    Vertices are ordered by value, so d_i deletes the i-th smallest vertex.
    """
    by_dim: dict[int, set[tuple[int, ...]]] = {}
    for facet in facets:
        verts = tuple(sorted(set(int(v) for v in facet)))
        for size in range(1, len(verts) + 1):
            for sub in combinations(verts, size):
                by_dim.setdefault(size - 1, set()).add(sub)
    if not by_dim:
        return empty()

    top = max(by_dim)
    simplices = [sorted(by_dim.get(k, ())) for k in range(top + 1)]
    index = [{s: idx for idx, s in enumerate(level)} for level in simplices]
    faces: list[tuple[np.ndarray, ...]] = [()]
    for k in range(1, top + 1):
        faces.append(tuple(
            np.array([index[k - 1][s[:i] + s[i + 1:]] for s in simplices[k]], dtype=np.int64)
            for i in range(k + 1)
        ))
    return checked(
        DeltaSet(
            counts=tuple(len(level) for level in simplices),
            faces=tuple(faces),
            labels=tuple(tuple(level) for level in simplices),
        )
    )


def f_vector(D: DeltaSet) -> list[int]:
    return list(D.counts)


def euler_characteristic(D: DeltaSet) -> int:
    return sum((-1) ** k * c for k, c in enumerate(D.counts))


def connected_components(D: DeltaSet) -> int:
    """Number of path components (union-find over vertices and edges)."""
    n = D.count(0)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    if D.dimension >= 1:
        for u, v in zip(D.face(1, 0).tolist(), D.face(1, 1).tolist()):
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
    return sum(1 for x in range(n) if find(x) == x)

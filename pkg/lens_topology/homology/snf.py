"""Smith normal form over the integers.

Only the invariant factors are computed; no transformation matrices are
kept. Pivots follow one rule in every code path: the entry of smallest
absolute value, ties broken by ``(row, col)``. If clearing a pivot's row and
column leaves remainders, elimination continues from the smallest remainder
in that row or column.

Three eliminators share that rule. Small matrices use Python lists and mid
sized ones a numpy int64 array; both hold exact values. The array path gives
up as soon as an entry reaches ``2**31`` and the sparse eliminator, which
works on Python ints, starts over.
"""

from dataclasses import dataclass
import heapq
import logging
from typing import Optional

import numpy as np

from lens_topology.config import current_settings
from lens_topology.core.abelian import canonical_invariant_factors
from lens_topology.homology.matrix import IntMatrix

logger = logging.getLogger(__name__)

# |x - q*y| stays below 2**63 while every stored entry is below this
ARRAY_ENTRY_BOUND = 1 << 31
_EMPTY = np.iinfo(np.int64).max


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors ``d1 | d2 | ...`` (all positive) and the rank."""
    diagonal: tuple[int, ...]
    rank: int

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d > 1)


class _SparseEliminator:
    """Row-dict matrix with a column index and a lazy min-heap of entries."""

    def __init__(self, M: IntMatrix):
        self.rows: dict[int, dict[int, int]] = M.row_map()
        self.cols: dict[int, set[int]] = {}
        for (r, c) in M.entries:
            self.cols.setdefault(c, set()).add(r)
        self.live = M.nnz
        self._rebuild_heap()

    def _rebuild_heap(self) -> None:
        self.heap = [(abs(v), r, c, v) for r, row in self.rows.items() for c, v in row.items()]
        heapq.heapify(self.heap)

    def _set(self, r: int, c: int, v: int) -> None:
        row = self.rows.setdefault(r, {})
        if v == 0:
            if c in row:
                del row[c]
                self.cols[c].discard(r)
                self.live -= 1
            return
        if c not in row:
            self.live += 1
        row[c] = v
        self.cols.setdefault(c, set()).add(r)
        heapq.heappush(self.heap, (abs(v), r, c, v))

    def add_row(self, target: int, source: int, factor: int) -> None:
        """row_target += factor * row_source"""
        if factor == 0:
            return
        row = self.rows[target]
        for c, v in list(self.rows[source].items()):
            self._set(target, c, row.get(c, 0) + factor * v)

    def add_col(self, target: int, source: int, factor: int) -> None:
        """col_target += factor * col_source"""
        if factor == 0:
            return
        for r in list(self.cols.get(source, ())):
            v = self.rows[r][source]
            self._set(r, target, self.rows[r].get(target, 0) + factor * v)

    def pop_pivot(self) -> Optional[tuple[int, int]]:
        if len(self.heap) > 4 * self.live + 1024:
            self._rebuild_heap()
        while self.heap:
            _, r, c, v = heapq.heappop(self.heap)
            if self.rows.get(r, {}).get(c) == v:
                return r, c
        return None

    def clear(self, r: int, c: int) -> int:
        """Clear row r and column c around the pivot; return |pivot|."""
        while True:
            p = self.rows[r][c]
            for i in sorted(self.cols[c] - {r}):
                self.add_row(i, r, -(self.rows[i][c] // p))
            if len(self.cols[c]) == 1:
                # column c holds only the pivot, so column operations touch row r alone
                for j in sorted(set(self.rows[r]) - {c}):
                    self._set(r, j, self.rows[r][j] % p)
            else:
                for j in sorted(set(self.rows[r]) - {c}):
                    self.add_col(j, c, -(self.rows[r][j] // p))
            leftovers = [(abs(self.rows[i][c]), i, c) for i in self.cols[c] if i != r]
            leftovers += [(abs(v), r, j) for j, v in self.rows[r].items() if j != c]
            if not leftovers:
                break
            _, r, c = min(leftovers)
        self.live -= len(self.rows.pop(r))
        del self.cols[c]
        return abs(p)


def _diagonalize_sparse(M: IntMatrix) -> list[int]:
    elim = _SparseEliminator(M)
    pivots = []
    while True:
        pivot = elim.pop_pivot()
        if pivot is None:
            return pivots
        pivots.append(elim.clear(*pivot))


def _row_minima(a: np.ndarray, rows: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Smallest non-zero |entry| of each row (``_EMPTY`` if none) and its first column."""
    mags = np.abs(a[rows])
    mags[mags == 0] = _EMPTY
    cols = mags.argmin(axis=1)
    return mags[np.arange(rows.size), cols], cols


def _too_large(block: np.ndarray) -> bool:
    return block.size > 0 and int(np.abs(block).max()) >= ARRAY_ENTRY_BOUND


def _diagonalize_array(M: IntMatrix) -> Optional[list[int]]:
    """Eliminate in an int64 array; None once an entry reaches the bound."""
    if any(abs(v) >= ARRAY_ENTRY_BOUND for v in M.entries.values()):
        return None
    a = np.zeros(M.shape, dtype=np.int64)
    keys = np.array(list(M.entries.keys()), dtype=np.int64).reshape(-1, 2)
    a[keys[:, 0], keys[:, 1]] = np.fromiter(M.entries.values(), dtype=np.int64, count=M.nnz)

    # per-row minimum keeps the global (|v|, row, col) choice to one argmin
    best, best_col = _row_minima(a, np.arange(M.rows))
    pivots = []
    while True:
        r = int(best.argmin())
        if best[r] == _EMPTY:
            return pivots
        c = int(best_col[r])
        touched = [np.array([r])]
        while True:
            p = a[r, c]
            below = np.flatnonzero(a[:, c])
            below = below[below != r]
            if below.size:
                a[below] -= np.outer(a[below, c] // p, a[r])
                if _too_large(a[below]):
                    return None
                touched.append(below)
            across = np.flatnonzero(a[r])
            across = across[across != c]
            if across.size:
                holders = np.flatnonzero(a[:, c])
                block = np.ix_(holders, across)
                a[block] -= np.outer(a[holders, c], a[r, across] // p)
                if _too_large(a[block]):
                    return None
                touched.append(holders)

            col_left = np.flatnonzero(a[:, c])
            col_left = col_left[col_left != r]
            row_left = np.flatnonzero(a[r])
            row_left = row_left[row_left != c]
            if not col_left.size and not row_left.size:
                break
            leftovers = []
            if col_left.size:
                k = int(np.abs(a[col_left, c]).argmin())
                leftovers.append((abs(int(a[col_left[k], c])), int(col_left[k]), c))
            if row_left.size:
                k = int(np.abs(a[r, row_left]).argmin())
                leftovers.append((abs(int(a[r, row_left[k]])), r, int(row_left[k])))
            _, r, c = min(leftovers)

        pivots.append(abs(int(a[r, c])))
        a[r, c] = 0
        rows = np.unique(np.concatenate(touched))
        best[rows], best_col[rows] = _row_minima(a, rows)


def _diagonalize_dense(M: IntMatrix) -> list[int]:
    a = M.to_dense()
    live_rows = list(range(M.rows))
    live_cols = list(range(M.cols))
    pivots = []
    while True:
        best = None
        for i in live_rows:
            row = a[i]
            for j in live_cols:
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            return pivots
        _, r, c = best
        while True:
            p = a[r][c]
            for i in live_rows:
                if i != r and a[i][c]:
                    q = a[i][c] // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
            for j in live_cols:
                if j != c and a[r][j]:
                    q = a[r][j] // p
                    for i in live_rows:
                        if a[i][c]:
                            a[i][j] -= q * a[i][c]
            leftovers = [(abs(a[i][c]), i, c) for i in live_rows if i != r and a[i][c]]
            leftovers += [(abs(a[r][j]), r, j) for j in live_cols if j != c and a[r][j]]
            if not leftovers:
                break
            _, r, c = min(leftovers)
        pivots.append(abs(a[r][c]))
        live_rows.remove(r)
        live_cols.remove(c)


def smith_normal_form(
    M: IntMatrix,
    dense_threshold: Optional[int] = None,
    array_cells: Optional[int] = None,
) -> SmithForm:
    """Invariant factors and rank of an integer matrix.

    Args:
        M: The matrix
        dense_threshold: Use Python lists when both sides are at most this
            size (defaults to the configured threshold)
        array_cells: Use an int64 array when ``rows * cols`` is at most this
            (defaults to the configured limit); 0 forces the sparse path

    Returns:
        SmithForm with ``diagonal`` ascending under divisibility
    """
    if M.is_zero():
        return SmithForm((), 0)
    settings = current_settings()
    threshold = settings.dense_threshold if dense_threshold is None else dense_threshold
    cells = settings.array_cells if array_cells is None else array_cells
    if M.rows <= threshold and M.cols <= threshold:
        pivots = _diagonalize_dense(M)
    else:
        pivots = _diagonalize_array(M) if M.rows * M.cols <= cells else None
        if pivots is None:
            pivots = _diagonalize_sparse(M)
    factors = canonical_invariant_factors(d for d in pivots if d > 1)
    rank = len(pivots)
    logger.debug("SNF %dx%d: rank %d, torsion %s", M.rows, M.cols, rank, factors)
    return SmithForm(tuple([1] * (rank - len(factors)) + factors), rank)

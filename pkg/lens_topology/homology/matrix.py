"""Sparse integer matrices with arbitrary-precision entries."""

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from lens_topology.errors import PreconditionError


@dataclass(frozen=True, eq=False)
class IntMatrix:
    """A ``rows × cols`` integer matrix stored as ``(row, col) -> value``.

    Zero entries are never stored.
    """
    rows: int
    cols: int
    entries: Mapping[tuple[int, int], int]

    def __post_init__(self) -> None:
        clean = {}
        for (r, c), v in self.entries.items():
            v = int(v)
            if v == 0:
                continue
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise PreconditionError(
                    f"Entry ({r}, {c}) outside a {self.rows}x{self.cols} matrix"
                )
            clean[(int(r), int(c))] = v
        object.__setattr__(self, "entries", MappingProxyType(clean))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, {})

    @classmethod
    def from_dense(cls, values: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = len(values)
        if cols is None:
            cols = len(values[0]) if rows else 0
        return cls(
            rows,
            cols,
            {(i, j): v for i, row in enumerate(values) for j, v in enumerate(row) if v},
        )

    @classmethod
    def diagonal(cls, values: Iterable[int]) -> "IntMatrix":
        values = list(values)
        return cls(len(values), len(values), {(i, i): v for i, v in enumerate(values)})

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def to_dense(self) -> list[list[int]]:
        dense = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            dense[r][c] = v
        return dense

    def row_map(self) -> dict[int, dict[int, int]]:
        rows: dict[int, dict[int, int]] = {}
        for (r, c), v in self.entries.items():
            rows.setdefault(r, {})[c] = v
        return rows

    def matmul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise PreconditionError(f"Cannot multiply {self.shape} by {other.shape}")
        right = other.row_map()
        out: dict[tuple[int, int], int] = {}
        for (r, k), v in self.entries.items():
            for c, w in right.get(k, {}).items():
                out[(r, c)] = out.get((r, c), 0) + v * w
        return IntMatrix(self.rows, other.cols, out)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        return self.matmul(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and dict(self.entries) == dict(other.entries)

    __hash__ = None  # type: ignore[assignment]

    def to_triplets(self) -> str:
        """Debug dump: one ``row col value`` line per stored entry, sorted."""
        return "".join(f"{r} {c} {v}\n" for (r, c), v in sorted(self.entries.items()))

    @classmethod
    def from_triplets(cls, text: str, rows: int, cols: int) -> "IntMatrix":
        entries = {}
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 3:
                raise PreconditionError(f"Line {lineno}: expected 'row col value'")
            r, c, v = (int(x) for x in parts)
            entries[(r, c)] = entries.get((r, c), 0) + v
        return cls(rows, cols, entries)

"""Space reports and the cell-count comparison of the three lens models."""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
import json
import math
from typing import Any, Optional

from lens_topology.core.dset import DeltaSet, euler_characteristic, f_vector
from lens_topology.errors import PreconditionError
from lens_topology.groups.group import cyclic
from lens_topology.homology.homology import (
    HomologyGroup,
    all_homology,
    all_homology_of_complex,
    homological_connectivity,
    reduced_homology,
)
from lens_topology.spaces.lens import LensParams, lens_minimal_chain, lens_space
from lens_topology.spaces.milnor import milnor_base, milnor_total


@dataclass
class SpaceReport:
    """Summary of one constructed space, serialised as a stable JSON object."""
    name: str
    expression: str
    f_vector: list[int]
    euler: int
    connectivity: int | float
    homology: list[HomologyGroup] = field(default_factory=list)
    reduced: bool = False

    @property
    def consistent(self) -> bool:
        """Euler characteristic agrees with the Betti numbers (when all degrees are present)."""
        if len(self.homology) < len(self.f_vector):
            return True
        betti_sum = sum((-1) ** k * h.betti for k, h in enumerate(self.homology))
        if self.reduced and self.f_vector:
            betti_sum += 1
        return betti_sum == self.euler

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "expression": self.expression,
            "f_vector": list(self.f_vector),
            "euler": self.euler,
            "connectivity": None if math.isinf(self.connectivity) else self.connectivity,
            "homology": [h.to_dict(k) for k, h in enumerate(self.homology)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    def f_vector_csv(self) -> str:
        lines = ["dim,count"] + [f"{k},{n}" for k, n in enumerate(self.f_vector)]
        return "\n".join(lines) + "\n"


def space_report(
    name: str,
    expression: str,
    D: DeltaSet,
    with_homology: bool = True,
    up_to: Optional[int] = None,
    reduced: bool = False,
) -> SpaceReport:
    """Build the report for ``D``; homology runs through ``up_to`` (default: dimension)."""
    homology = all_homology(D, up_to, reduced) if with_homology else []
    return SpaceReport(
        name=name,
        expression=expression,
        f_vector=f_vector(D),
        euler=euler_characteristic(D),
        connectivity=homological_connectivity(D),
        homology=homology,
        reduced=reduced,
    )


@dataclass(frozen=True)
class CellCountRow:
    dim: int
    minimal: int
    lens: int
    milnor: int


@dataclass
class CellCountReport:
    """Per-dimension sizes of the minimal complex, the lens Δ-set and the Milnor model."""
    m: int
    n: int
    rows: list[CellCountRow]
    minimal_homology: list[HomologyGroup]
    lens_homology: list[HomologyGroup]
    milnor_homology: list[HomologyGroup]
    wedge_rank: int

    @property
    def ordered(self) -> bool:
        return all(r.minimal <= r.lens <= r.milnor for r in self.rows)

    @property
    def expected_wedge_rank(self) -> int:
        return (self.m - 1) ** (2 * self.n)

    @property
    def wedge_ok(self) -> bool:
        return self.wedge_rank == self.expected_wedge_rank

    @property
    def homology_agrees(self) -> bool:
        """The three models agree below the top degree ``2n - 1``."""
        top = 2 * self.n - 1
        return (
            self.minimal_homology[:top]
            == self.lens_homology[:top]
            == self.milnor_homology[:top]
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "m": self.m,
            "n": self.n,
            "rows": [vars(r) for r in self.rows],
            "ordered": self.ordered,
            "wedge_rank": self.wedge_rank,
            "expected_wedge_rank": self.expected_wedge_rank,
            "homology": {
                "minimal": [str(h) for h in self.minimal_homology],
                "lens": [str(h) for h in self.lens_homology],
                "milnor": [str(h) for h in self.milnor_homology],
            },
        }


def _lens_model(m: int, n: int) -> tuple[list[int], list[HomologyGroup]]:
    L, _ = lens_space(LensParams(m, (1,) * n))
    return f_vector(L), all_homology(L, 2 * n - 1)


def _milnor_model(m: int, n: int) -> tuple[list[int], list[HomologyGroup], int]:
    top = 2 * n - 1
    B, _ = milnor_base(cyclic(m), top)
    wedge = reduced_homology(milnor_total(cyclic(m), top).space, top).betti
    return f_vector(B), all_homology(B, top), wedge


def cell_count_report(m: int, n: int) -> CellCountReport:
    """Compare the three models of ``L(m; 1..1)`` dimension by dimension."""
    if m < 2 or n < 1:
        raise PreconditionError(f"cell_count_report() needs m >= 2 and n >= 1, got m={m}, n={n}", m=m, n=n)
    minimal = lens_minimal_chain(m, n)
    with ThreadPoolExecutor(max_workers=2) as pool:
        lens_future = pool.submit(_lens_model, m, n)
        milnor_future = pool.submit(_milnor_model, m, n)
        lens_counts, lens_homology = lens_future.result()
        milnor_counts, milnor_homology, wedge = milnor_future.result()

    rows = [
        CellCountRow(k, minimal.rank(k), lens_counts[k], milnor_counts[k])
        for k in range(2 * n)
    ]
    return CellCountReport(
        m=m,
        n=n,
        rows=rows,
        minimal_homology=all_homology_of_complex(minimal),
        lens_homology=lens_homology,
        milnor_homology=milnor_homology,
        wedge_rank=wedge,
    )

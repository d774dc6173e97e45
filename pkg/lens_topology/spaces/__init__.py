"""Named constructions: lens spaces, Milnor models, mapping tori and reports."""

from lens_topology.spaces.lens import (
    LensParams,
    cyclic_cellular_chain,
    lens_action,
    lens_inclusion,
    lens_minimal_chain,
    lens_space,
)
from lens_topology.spaces.milnor import milnor_base, milnor_total, real_projective, stability_check
from lens_topology.spaces.report import (
    CellCountReport,
    CellCountRow,
    SpaceReport,
    cell_count_report,
    space_report,
)
from lens_topology.spaces.torus import circle_rotation, mapping_torus, two_triangle_torus

__all__ = [
    "CellCountReport",
    "CellCountRow",
    "LensParams",
    "SpaceReport",
    "cell_count_report",
    "circle_rotation",
    "cyclic_cellular_chain",
    "lens_action",
    "lens_inclusion",
    "lens_minimal_chain",
    "lens_space",
    "mapping_torus",
    "milnor_base",
    "milnor_total",
    "real_projective",
    "space_report",
    "stability_check",
    "two_triangle_torus",
]

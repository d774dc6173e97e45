"""Exact integer chain complexes, Smith normal form and homology."""

from lens_topology.homology.chain import (
    ChainComplex,
    boundary_matrix,
    chain_complex,
    validate_complex,
)
from lens_topology.homology.homology import (
    ZERO,
    Z,
    HomologyGroup,
    all_homology,
    all_homology_of_complex,
    cohomology,
    cohomology_of_complex,
    homological_connectivity,
    homology,
    homology_of_complex,
    reduced_homology,
    torsion_group,
)
from lens_topology.homology.matrix import IntMatrix
from lens_topology.homology.snf import SmithForm, smith_normal_form

__all__ = [
    "ChainComplex",
    "HomologyGroup",
    "IntMatrix",
    "SmithForm",
    "Z",
    "ZERO",
    "all_homology",
    "all_homology_of_complex",
    "boundary_matrix",
    "chain_complex",
    "cohomology",
    "cohomology_of_complex",
    "homological_connectivity",
    "homology",
    "homology_of_complex",
    "reduced_homology",
    "smith_normal_form",
    "torsion_group",
    "validate_complex",
]

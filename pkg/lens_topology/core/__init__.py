"""Semi-simplicial sets and their constructions."""

from lens_topology.core.dset import (
    DeltaMap,
    DeltaSet,
    ValidationReport,
    checked_map,
    compose,
    connected_components,
    discrete,
    disjoint_union,
    empty,
    euler_characteristic,
    f_vector,
    from_simplicial_complex,
    identity_map,
    join,
    join_inclusion,
    point,
    polygon_circle,
    sphere,
    validate,
    validate_map,
)
from lens_topology.core.io import load_delta_set, save_delta_set

__all__ = [
    "DeltaMap",
    "DeltaSet",
    "ValidationReport",
    "checked_map",
    "compose",
    "connected_components",
    "discrete",
    "disjoint_union",
    "empty",
    "euler_characteristic",
    "f_vector",
    "from_simplicial_complex",
    "identity_map",
    "join",
    "join_inclusion",
    "load_delta_set",
    "point",
    "polygon_circle",
    "save_delta_set",
    "sphere",
    "validate",
    "validate_map",
]

"""Finite groups and their simplicial actions."""

from lens_topology.groups.action import (
    GroupAction,
    action_map,
    fixed_point,
    is_free,
    iterated_join_action,
    join_actions,
    quotient,
    rotation_action,
    translation_action,
    validate_action,
)
from lens_topology.groups.group import (
    FiniteGroup,
    abelianization,
    cyclic,
    dihedral,
    direct_product,
    load_group,
    parse_group,
    save_group,
    validate_group,
)

__all__ = [
    "FiniteGroup",
    "GroupAction",
    "abelianization",
    "action_map",
    "cyclic",
    "dihedral",
    "direct_product",
    "fixed_point",
    "is_free",
    "iterated_join_action",
    "join_actions",
    "load_group",
    "parse_group",
    "quotient",
    "rotation_action",
    "save_group",
    "translation_action",
    "validate_action",
    "validate_group",
]

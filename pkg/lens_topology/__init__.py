"""Δ-sets, free group actions, lens spaces and exact integral homology."""

from lens_topology.core import DeltaMap, DeltaSet, join, sphere
from lens_topology.expression import evaluate, parse
from lens_topology.groups import FiniteGroup, GroupAction, quotient
from lens_topology.homology import HomologyGroup, all_homology, homology
from lens_topology.spaces import LensParams, lens_space, mapping_torus, milnor_base

__version__ = "0.1.0"

__all__ = [
    "DeltaMap",
    "DeltaSet",
    "FiniteGroup",
    "GroupAction",
    "HomologyGroup",
    "LensParams",
    "all_homology",
    "evaluate",
    "homology",
    "join",
    "lens_space",
    "mapping_torus",
    "milnor_base",
    "parse",
    "quotient",
    "sphere",
]

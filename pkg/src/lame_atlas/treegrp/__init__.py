"""Trees of finite groups, normalizer-tree enumeration and amalgam realization."""

from .amalgam import AmalgamSpec, is_maximal_cyclic, realize_amalgam, vertex_group
from .trees import (
    TreeOfGroups,
    VertexLabel,
    branching_indices,
    enumerate_normalizer_trees,
    euler_characteristic,
    expected_genus,
    parse_tree,
)

__all__ = [
    "AmalgamSpec", "TreeOfGroups", "VertexLabel", "branching_indices", "enumerate_normalizer_trees",
    "euler_characteristic", "expected_genus", "is_maximal_cyclic", "parse_tree", "realize_amalgam",
    "vertex_group",
]

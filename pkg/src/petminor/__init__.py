"""Petersen-minor toolkit.

Exact minor and subgraph search, cockade construction and recognition, the
Petersen-minor-free example families, constructive colourings and forest
partitions, and a harness that checks the related claims.
"""

from .coloring import (
    CliqueFound,
    Coloring,
    ForestPartition,
    greedy_degeneracy_coloring,
    minus_one_coloring,
    verify_coloring,
    verify_forest_partition,
    vertex_arboricity_partition,
)
from .families import (
    CockadeRecognition,
    CockadeSpec,
    apex_icosahedron,
    cockade,
    dominant_k5_family,
    generic_cockade,
    join_k5_empty,
    petersen,
    recognize_cockade_spanning,
)
from .graph import (
    Graph,
    GraphError,
    Separation,
    complement,
    components,
    contract_edge,
    degeneracy,
    is_k_connected,
    triangles_per_edge,
)
from .kernels import BACKEND
from .minors import BranchModel, BudgetExhausted, clique_separator_reduce, has_minor, has_subgraph, rooted_k3_minor
from .oracle import minor_oracle_bruteforce

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BranchModel",
    "BudgetExhausted",
    "CliqueFound",
    "CockadeRecognition",
    "CockadeSpec",
    "Coloring",
    "ForestPartition",
    "Graph",
    "GraphError",
    "Separation",
    "apex_icosahedron",
    "clique_separator_reduce",
    "cockade",
    "complement",
    "components",
    "contract_edge",
    "degeneracy",
    "dominant_k5_family",
    "generic_cockade",
    "greedy_degeneracy_coloring",
    "has_minor",
    "has_subgraph",
    "is_k_connected",
    "join_k5_empty",
    "minor_oracle_bruteforce",
    "minus_one_coloring",
    "petersen",
    "recognize_cockade_spanning",
    "rooted_k3_minor",
    "triangles_per_edge",
    "verify_coloring",
    "verify_forest_partition",
    "vertex_arboricity_partition",
]

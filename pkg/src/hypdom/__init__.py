"""Exact Gromov hyperbolicity of large sparse graphs via hierarchical domination."""

from .domination import ParameterError, derive_sequence, hierarchical_dominating_set
from .engine import (EngineConfig, MemoryBudgetError, brute_force_hyperbolicity,
                     compute_hyperbolicity)
from .graph_core import Graph, GraphError, ParseError, load_edge_list

__version__ = "0.1.0"

__all__ = [
    "EngineConfig", "Graph", "GraphError", "MemoryBudgetError", "ParameterError", "ParseError",
    "brute_force_hyperbolicity", "compute_hyperbolicity", "derive_sequence",
    "hierarchical_dominating_set", "load_edge_list",
]

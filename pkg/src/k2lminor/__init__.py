"""Certificate-producing K_{2,l} minor search for small and structured graphs."""

from .families import FAMILIES, FamilySpec, audit
from .graph import Graph, GraphError, build_graph, st_connectivity, vertex_connectivity
from .minors import BudgetExhausted, MinorModel, OracleBudget, find_k2l_minor, minor_free_up_to, verify_model
from .nested import DriverConfig, extract_from_nested, nested_pipeline, theorem_driver
from .steiner import max_leaf_search
from .textio import format_graph, parse_certificate, parse_graph
from .witness import Inconclusive, MinorFound, Saturated, TwinsFound

__version__ = "0.1.0"

__all__ = [
    "FAMILIES",
    "BudgetExhausted",
    "DriverConfig",
    "FamilySpec",
    "Graph",
    "GraphError",
    "Inconclusive",
    "MinorFound",
    "MinorModel",
    "OracleBudget",
    "Saturated",
    "TwinsFound",
    "audit",
    "build_graph",
    "extract_from_nested",
    "find_k2l_minor",
    "format_graph",
    "max_leaf_search",
    "minor_free_up_to",
    "nested_pipeline",
    "parse_certificate",
    "parse_graph",
    "st_connectivity",
    "theorem_driver",
    "verify_model",
    "vertex_connectivity",
]

"""Minimum locating-dominating codes: exact solver, min-forced and min-void
vertices, colour graphs, and path counting."""
from .colour_graph import build_colour_graph, check_forced_bounds, swap_witness, two_edge_subgraph, verify_structure
from .forced import classify_by_characterization, classify_oracle, is_min_forced_characterization
from .graph import Graph, is_ld_code, parse_graph, read_graph
from .solver import MinimumCodeCensus, enumerate_minimum_ld_codes, gamma_ld

__all__ = [
    "Graph",
    "parse_graph",
    "read_graph",
    "is_ld_code",
    "gamma_ld",
    "enumerate_minimum_ld_codes",
    "MinimumCodeCensus",
    "classify_oracle",
    "classify_by_characterization",
    "is_min_forced_characterization",
    "build_colour_graph",
    "verify_structure",
    "swap_witness",
    "two_edge_subgraph",
    "check_forced_bounds",
]

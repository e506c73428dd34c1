"""Exact maximum cliques in large sparse graphs, and largest temporal
strong components of contact networks."""

__version__ = "0.1.0"

from .bounds import CoreDecomposition, Coloring, clique_upper_bound, core_numbers, greedy_color
from .graph import StaticGraph, build
from .heuristic import Clique, heuristic_clique, heuristic_clique_parallel
from .parallel import SharedBound, max_clique_parallel
from .search import SearchConfig, SearchResult, max_clique, solve
from .temporal import TemporalNetwork, max_tscc, reach, verify_component

__all__ = [
    "Clique", "Coloring", "CoreDecomposition", "SearchConfig", "SearchResult",
    "SharedBound", "StaticGraph", "TemporalNetwork", "build", "clique_upper_bound",
    "core_numbers", "greedy_color", "heuristic_clique", "heuristic_clique_parallel",
    "max_clique", "max_clique_parallel", "max_tscc", "reach", "solve", "verify_component",
]

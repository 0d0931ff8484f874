"""경로 알고리즘 - 다중모드 Dijkstra와 전수 열거 oracle"""

from .oracle import (
    complete_multigraph_path_count,
    enumerate_simple_paths,
    enumerate_walks,
    pareto_filter,
)
from .solver import (
    FrontierQueue,
    ParetoResult,
    ParetoSet,
    SolveOptions,
    SolveStats,
    reconstruct,
    solve,
)

__all__ = [
    "complete_multigraph_path_count",
    "enumerate_simple_paths",
    "enumerate_walks",
    "pareto_filter",
    "FrontierQueue",
    "ParetoResult",
    "ParetoSet",
    "SolveOptions",
    "SolveStats",
    "reconstruct",
    "solve",
]

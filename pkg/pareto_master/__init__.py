# pareto_master 패키지 초기화
from .algorithms.solver import ParetoResult, SolveOptions, solve
from .graph.model import ColouredGraph, GraphBuilder

__all__ = ["ColouredGraph", "GraphBuilder", "ParetoResult", "SolveOptions", "solve"]

"""그래프 계층 - 가중치 벡터, 색상-간선 그래프, count 색상 확장"""

from .augment import AugmentedGraph, CountMode, augment_with_count_colour
from .model import ColouredGraph, Edge, GraphBuilder, PathLabel, extend
from .weights import (
    Dominance,
    WeightVector,
    add,
    add_component,
    compare,
    format_units,
    to_units,
    zero_vector,
)

__all__ = [
    "AugmentedGraph",
    "CountMode",
    "augment_with_count_colour",
    "ColouredGraph",
    "Edge",
    "GraphBuilder",
    "PathLabel",
    "extend",
    "Dominance",
    "WeightVector",
    "add",
    "add_component",
    "compare",
    "format_units",
    "to_units",
    "zero_vector",
]

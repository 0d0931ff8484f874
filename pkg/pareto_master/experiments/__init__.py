"""실험 모듈 - 무작위 인스턴스 생성과 결과 분석"""

from .analysis import (
    AssemblyReport,
    CostModel,
    ExperimentRecord,
    LayerStats,
    SummaryRow,
    assembly_report,
    crossover_threshold,
    evaluate_cost,
    fit_power_law,
    layer_statistics,
    run_experiment,
    stability_range,
    summarize,
)
from .generator import complete_multigraph, make_rng, random_layers, random_sparse

__all__ = [
    "AssemblyReport",
    "CostModel",
    "ExperimentRecord",
    "LayerStats",
    "SummaryRow",
    "assembly_report",
    "crossover_threshold",
    "evaluate_cost",
    "fit_power_law",
    "layer_statistics",
    "run_experiment",
    "stability_range",
    "summarize",
    "complete_multigraph",
    "make_rng",
    "random_layers",
    "random_sparse",
]

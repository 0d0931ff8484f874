"""Repository 모듈 공개 API"""

from .graph_io import dumps_graph, loads_graph, read_graph, write_graph
from .layer_io import dumps_layer, loads_layer, read_layer, write_layer
from .result_io import (
    ResultRow,
    format_bench_csv,
    format_plot_data,
    format_result_csv,
    format_result_json,
    format_result_text,
    write_bench_csv,
    write_plot_data,
)

__all__ = [
    "dumps_graph",
    "loads_graph",
    "read_graph",
    "write_graph",
    "dumps_layer",
    "loads_layer",
    "read_layer",
    "write_layer",
    "ResultRow",
    "format_bench_csv",
    "format_plot_data",
    "format_result_csv",
    "format_result_json",
    "format_result_text",
    "write_bench_csv",
    "write_plot_data",
]

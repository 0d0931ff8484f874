"""결과 직렬화

- Pareto 결과: 텍스트 (`pareto ...` + `stats ...`), CSV, JSON
- bench 결과: CSV (`n,k,seed,mean,max,processed,ms`), gnuplot 데이터

행은 (목적지, 가중치 벡터 사전순, 간선 id 순서열) 순으로 정렬되어 실행 간 byte 단위로 같습니다.
"""

from __future__ import annotations

import csv
import io
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

from pareto_master.algorithms.solver import ParetoResult, SolveStats
from pareto_master.core.models import ParetoEntry, ResultDocument, StatsEntry
from pareto_master.experiments.analysis import ExperimentRecord
from pareto_master.graph.model import ColouredGraph, Edge, PathLabel
from pareto_master.graph.weights import WeightVector, format_units

BENCH_HEADER = ("n", "k", "seed", "mean", "max", "processed", "ms")


class ResultRow(NamedTuple):
    """출력 한 행"""

    dest: int
    weight: WeightVector
    path: tuple[int, ...]


def rows_from_labels(dest: int, labels: Iterable[PathLabel]) -> list[ResultRow]:
    return sorted(ResultRow(dest, label.weight, tuple(label.edge_ids())) for label in labels)


def rows_from_result(
    result: ParetoResult, vertices: Sequence[int] | None = None
) -> list[ResultRow]:
    """solve 결과에서 행 생성 (vertices가 없으면 target, target도 없으면 전체 정점)"""
    if vertices is None:
        vertices = [result.target] if result.target is not None else range(result.graph.n)
    rows: list[ResultRow] = []
    for v in vertices:
        rows.extend(rows_from_labels(v, result.at(v)))
    return rows


def rows_from_paths(
    dest: int, entries: Iterable[tuple[Sequence[Edge], WeightVector]]
) -> list[ResultRow]:
    """oracle 열거 결과에서 행 생성"""
    return sorted(
        ResultRow(dest, weight, tuple(edge.id for edge in path)) for path, weight in entries
    )


def _stats_fields(stats: SolveStats, timing: bool) -> dict[str, int]:
    fields = stats.to_dict()
    if not timing:
        fields["ms"] = 0
    return fields


def format_result_text(
    graph: ColouredGraph,
    rows: Sequence[ResultRow],
    stats: SolveStats | None = None,
    timing: bool = True,
) -> str:
    lines = []
    for row in rows:
        parts = ["pareto", str(row.dest), *graph.format_vector(row.weight)]
        parts += [str(edge_id) for edge_id in row.path]
        lines.append(" ".join(parts))
    if stats is not None:
        fields = _stats_fields(stats, timing)
        lines.append("stats " + " ".join(f"{key}={value}" for key, value in fields.items()))
    return "\n".join(lines) + "\n" if lines else ""


def format_result_csv(graph: ColouredGraph, rows: Sequence[ResultRow]) -> str:
    """CSV: dest, 색상 이름별 가중치 열, path (공백 구분 간선 id)"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["dest", *graph.colour_names, "path"])
    for row in rows:
        writer.writerow(
            [row.dest, *graph.format_vector(row.weight), " ".join(map(str, row.path))]
        )
    return buffer.getvalue()


def format_result_json(
    graph: ColouredGraph,
    rows: Sequence[ResultRow],
    stats: SolveStats | None = None,
    timing: bool = True,
) -> str:
    document = ResultDocument(
        colours=list(graph.colour_names),
        pareto=[
            ParetoEntry(
                dest=row.dest, weights=graph.format_vector(row.weight), path=list(row.path)
            )
            for row in rows
        ],
        stats=StatsEntry(**_stats_fields(stats, timing)) if stats is not None else None,
    )
    return document.model_dump_json(indent=2) + "\n"


def format_bench_csv(records: Sequence[ExperimentRecord], timing: bool = True) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(BENCH_HEADER)
    for record in records:
        writer.writerow(
            [
                record.n,
                record.k,
                record.seed,
                f"{record.mean_cardinality:.6f}",
                record.max_cardinality,
                record.processed,
                round(record.wall_ms) if timing else 0,
            ]
        )
    return buffer.getvalue()


def write_bench_csv(
    records: Sequence[ExperimentRecord], path: Path | str, timing: bool = True
) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_bench_csv(records, timing), encoding="utf-8")
    return path


def format_plot_data(records: Sequence[ExperimentRecord]) -> str:
    """gnuplot 데이터: 색상 수 k별 `# k=<k>` 블록, 각 행 `n mean` (n별 평균)

    블록 사이는 빈 줄 두 개 (gnuplot `index`로 선택).
    """
    by_k: dict[int, dict[int, list[float]]] = {}
    for record in records:
        by_k.setdefault(record.k, {}).setdefault(record.n, []).append(record.mean_cardinality)
    blocks = []
    for k in sorted(by_k):
        lines = [f"# k={k}"]
        for n in sorted(by_k[k]):
            values = by_k[k][n]
            lines.append(f"{n} {sum(values) / len(values):.6f}")
        blocks.append("\n".join(lines))
    return "\n\n\n".join(blocks) + "\n" if blocks else ""


def write_plot_data(records: Sequence[ExperimentRecord], path: Path | str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_plot_data(records), encoding="utf-8")
    return path


def format_weight(graph: ColouredGraph, weight: WeightVector) -> str:
    """사람이 읽는 벡터 표기 `(19, 9, 7, 12)`"""
    return "(" + ", ".join(format_units(units, graph.scale) for units in weight) + ")"

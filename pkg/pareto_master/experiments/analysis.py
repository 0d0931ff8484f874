"""사후 최적화(post-optimal) 분석과 실험 통계

- evaluate_cost / crossover_threshold / stability_range: Pareto 집합 위에서 비용 모델 평가
- run_experiment / fit_power_law / summarize: 완전 멀티그래프 실험과 로그-로그 차수 추정
- layer_statistics / assembly_report: 운송수단 layer 특성과 조립 결과 보고
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Iterable, Literal, Sequence

import numpy as np
from loguru import logger

from pareto_master.algorithms.solver import ParetoResult, ParetoSet, SolveOptions, solve
from pareto_master.core.config import config
from pareto_master.core.errors import NoPathError, ResourceCeilingError, UsageError
from pareto_master.graph.model import ColouredGraph, PathLabel
from pareto_master.ingest.layers import JunctionLayer

from .generator import complete_multigraph

RecordField = Literal["mean_cardinality", "processed"]


@dataclass(frozen=True)
class CostModel:
    """색상별 양의 배율. 총비용 = sum(factor_i * weight_i)"""

    factors: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise UsageError("비용 모델에 배율이 없습니다")
        if any(f <= 0 for f in self.factors):
            raise UsageError(f"모든 배율은 양수여야 합니다: {self.factors}")

    @classmethod
    def of(cls, *factors: Fraction | Decimal | int | str) -> CostModel:
        """십진 문자열/정수/Decimal 배율로 생성"""
        return cls(tuple(Fraction(f) if not isinstance(f, Fraction) else f for f in factors))

    @classmethod
    def unit(cls, k: int) -> CostModel:
        """모든 배율 1 (단위 거리당 1달러)"""
        return cls((Fraction(1),) * k)

    def with_factor(self, colour: int, factor: Fraction) -> CostModel:
        factors = list(self.factors)
        factors[colour] = factor
        return CostModel(tuple(factors))

    def aggregate(self, weight: Sequence[int], scale: int = 0) -> Fraction:
        """총비용 (가중치 단위를 scale로 환산한 값)"""
        if len(weight) != len(self.factors):
            raise UsageError(
                f"비용 모델 색상 수({len(self.factors)}) != 가중치 길이({len(weight)})"
            )
        total = sum((f * w for f, w in zip(self.factors, weight)), Fraction(0))
        return total / 10**scale


def _labels_of(pareto: ParetoSet | Sequence[PathLabel]) -> tuple[list[PathLabel], int]:
    if isinstance(pareto, ParetoSet):
        return list(pareto.labels), pareto.scale
    return list(pareto), 0


def evaluate_cost(
    pareto: ParetoSet | Sequence[PathLabel], model: CostModel
) -> tuple[PathLabel, Fraction]:
    """총비용이 최소인 라벨 (동률이면 가중치 벡터 사전순)

    Raises:
        NoPathError: 빈 집합
        UsageError: 색상 수 불일치
    """
    labels, scale = _labels_of(pareto)
    if not labels:
        raise NoPathError("Pareto 집합이 비어 있습니다")
    best = min(labels, key=lambda label: (model.aggregate(label.weight, scale), label.weight))
    return best, model.aggregate(best.weight, scale)


@dataclass(frozen=True)
class _Line:
    """배율 s에 대한 총비용 직선 a + b*s"""

    intercept: Fraction
    slope: Fraction
    label: PathLabel


def _lines(
    labels: list[PathLabel], colour: int, base: CostModel, scale: int
) -> list[_Line]:
    if not labels:
        raise NoPathError("Pareto 집합이 비어 있습니다")
    if not 0 <= colour < len(base.factors):
        raise UsageError(f"색상이 범위를 벗어났습니다: {colour}")
    unit = Fraction(1, 10**scale)
    lines: dict[tuple[int, ...], _Line] = {}
    for label in sorted(labels, key=lambda lb: lb.weight):
        if label.weight in lines:
            continue
        intercept = sum(
            (f * w for i, (f, w) in enumerate(zip(base.factors, label.weight)) if i != colour),
            Fraction(0),
        )
        lines[label.weight] = _Line(intercept * unit, label.weight[colour] * unit, label)
    return list(lines.values())


def crossover_threshold(
    pareto: ParetoSet | Sequence[PathLabel], colour: int, base: CostModel
) -> list[tuple[Fraction, PathLabel]]:
    """한 색상 배율을 (0, ∞)로 움직일 때 최적 라벨이 바뀌는 지점들

    총비용은 배율에 대해 선형이므로 하한 envelope의 꺾이는 점을 정확한 유리수로 구합니다.

    Returns:
        (배율, 그 배율 직후의 최적 라벨) 오름차순 목록
    """
    labels, scale = _labels_of(pareto)
    lines = _lines(labels, colour, base, scale)

    def tie_key(line: _Line) -> tuple:
        return (line.slope, line.label.weight)

    # s -> 0+ 에서의 최적: 절편 최소, 같으면 기울기 최소
    current = min(lines, key=lambda line: (line.intercept,) + tie_key(line))
    breakpoints: list[tuple[Fraction, PathLabel]] = []
    while True:
        best: tuple[Fraction, _Line] | None = None
        for line in lines:
            if line.slope >= current.slope:
                continue
            crossing = (line.intercept - current.intercept) / (current.slope - line.slope)
            if best is None or (crossing, tie_key(line)) < (best[0], tie_key(best[1])):
                best = (crossing, line)
        if best is None:
            break
        crossing, current = best
        breakpoints.append((crossing, current.label))
    return breakpoints


def stability_range(
    pareto: ParetoSet | Sequence[PathLabel], colour: int, base: CostModel
) -> tuple[Fraction, Fraction | None, PathLabel]:
    """기준 모델의 최적 라벨이 최적으로 남는 배율 구간 [lower, upper]

    Returns:
        (lower, upper, 최적 라벨). upper가 None이면 상한 없음
    """
    labels, scale = _labels_of(pareto)
    lines = _lines(labels, colour, base, scale)
    optimum, _ = evaluate_cost(pareto, base)
    own = next(line for line in lines if line.label.weight == optimum.weight)

    lower = Fraction(0)
    upper: Fraction | None = None
    for line in lines:
        if line is own or line.slope == own.slope:
            continue
        crossing = (line.intercept - own.intercept) / (own.slope - line.slope)
        if line.slope > own.slope:
            lower = max(lower, crossing)
        elif upper is None or crossing < upper:
            upper = crossing
    return lower, upper, optimum


@dataclass
class ExperimentRecord:
    """완전 멀티그래프 실험 1회 결과"""

    n: int
    k: int
    seed: int
    source: int
    mean_cardinality: float
    max_cardinality: int
    processed: int
    wall_ms: float
    rep: int = 0
    truncated: bool = False

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> ExperimentRecord:
        return cls(**data)


def instance_seed(seed: int, n: int, rep: int) -> int:
    """(seed, n, rep)에서 파생한 인스턴스 시드 (numpy SeedSequence)"""
    return int(np.random.SeedSequence([seed, n, rep]).generate_state(1)[0])


def _run_one(
    task: tuple[int, int, int, int, tuple[float, float] | None, int | None, float | None],
) -> ExperimentRecord:
    n, k, rep, seed, weight_range, max_labels, time_budget = task
    graph = complete_multigraph(n, k, seed, weight_range)
    started = time.perf_counter()
    options = SolveOptions(max_labels=max_labels, time_budget=time_budget)
    truncated = False
    try:
        result = solve(graph, 0, options)
    except ResourceCeilingError as e:
        result = e.partial
        truncated = True
    return ExperimentRecord(
        n=n,
        k=k,
        seed=seed,
        source=0,
        mean_cardinality=result.mean_cardinality(),
        max_cardinality=result.max_cardinality(),
        processed=result.stats.processed,
        wall_ms=(time.perf_counter() - started) * 1000.0,
        rep=rep,
        truncated=truncated,
    )


def run_experiment(
    n_values: Sequence[int],
    k: int,
    reps: int,
    seed: int,
    weight_range: tuple[float, float] | None = None,
    workers: int | None = None,
    max_labels: int | None = None,
    time_budget: float | None = None,
) -> list[ExperimentRecord]:
    """n 값마다 reps개의 완전 멀티그래프를 생성해 정점 0에서 solve

    리소스 상한에 걸린 실행은 truncated=True로 표시되며, 정렬 순서상 그 뒤의 기록은 버립니다.
    작업자 수와 무관하게 같은 결과를 냅니다 (시간 필드 제외).
    """
    if k < 1 or reps < 0 or any(n < 2 for n in n_values):
        raise UsageError(f"k >= 1, reps >= 0, 모든 n >= 2 이어야 합니다 (k={k}, reps={reps})")
    tasks = [
        (n, k, rep, instance_seed(seed, n, rep), weight_range, max_labels, time_budget)
        for n in n_values
        for rep in range(reps)
    ]
    if not tasks:
        return []

    pool_size = config.BENCH_WORKERS if workers is None else workers
    if pool_size > 1:
        with ProcessPoolExecutor(max_workers=pool_size) as pool:
            records = list(pool.map(_run_one, tasks))
    else:
        records = [_run_one(task) for task in tasks]

    records.sort(key=lambda r: (r.n, r.rep))
    for index, record in enumerate(records):
        if record.truncated:
            logger.warning(
                "실험 중단: n={} rep={} 에서 리소스 상한 도달, 이후 {}건 생략",
                record.n,
                record.rep,
                len(records) - index - 1,
            )
            return records[: index + 1]
    logger.info("run_experiment 완료: k={} records={}", k, len(records))
    return records


def _per_n(records: Iterable[ExperimentRecord], field: str) -> tuple[np.ndarray, np.ndarray]:
    groups: dict[int, list[float]] = {}
    for record in records:
        groups.setdefault(record.n, []).append(float(getattr(record, field)))
    ns = sorted(groups)
    return np.array(ns, dtype=float), np.array([np.mean(groups[n]) for n in ns])


def fit_power_law(
    records: Sequence[ExperimentRecord], field: RecordField = "mean_cardinality"
) -> tuple[float, float, float]:
    """log(field) = exponent * log(n) + intercept 최소제곱 적합

    n별 평균을 먼저 구한 뒤 적합합니다.

    Returns:
        (exponent, intercept, r²)
    """
    if field not in ("mean_cardinality", "processed"):
        raise UsageError(f"알 수 없는 필드: {field}")
    ns, values = _per_n(records, field)
    if len(ns) < 3:
        raise UsageError(f"서로 다른 n 값이 3개 이상 필요합니다 (현재 {len(ns)})")
    if np.any(values <= 0):
        raise UsageError(f"{field} 값은 모두 양수여야 합니다")

    log_n = np.log(ns)
    log_v = np.log(values)
    exponent, intercept = np.polyfit(log_n, log_v, 1)
    predicted = exponent * log_n + intercept
    ss_res = float(np.sum((log_v - predicted) ** 2))
    ss_tot = float(np.sum((log_v - np.mean(log_v)) ** 2))
    r_squared = 1.0 - ss_res / ss_tot if ss_tot > 0 else 1.0
    return float(exponent), float(intercept), r_squared


@dataclass(frozen=True)
class SummaryRow:
    """n별 반복 실행 요약 (평균 ± 표준편차)"""

    n: int
    reps: int
    mean_cardinality: float
    std_cardinality: float
    mean_processed: float
    std_processed: float


def summarize(records: Sequence[ExperimentRecord]) -> list[SummaryRow]:
    """반복 실행을 n별로 묶어 분산 보고"""
    groups: dict[int, list[ExperimentRecord]] = {}
    for record in records:
        groups.setdefault(record.n, []).append(record)
    rows = []
    for n in sorted(groups):
        cards = np.array([r.mean_cardinality for r in groups[n]])
        processed = np.array([r.processed for r in groups[n]], dtype=float)
        rows.append(
            SummaryRow(
                n=n,
                reps=len(groups[n]),
                mean_cardinality=float(cards.mean()),
                std_cardinality=float(cards.std()),
                mean_processed=float(processed.mean()),
                std_processed=float(processed.std()),
            )
        )
    return rows


@dataclass(frozen=True)
class LayerStats:
    """운송수단 layer 특성 (junction 수, link 수, link 길이 통계)"""

    mode: str
    junctions: int
    links: int
    max_length: float
    mean_length: float
    std_length: float


def layer_statistics(layer: JunctionLayer) -> LayerStats:
    lengths = np.array([float(link.length) for link in layer.links])
    if lengths.size == 0:
        return LayerStats(layer.mode, len(layer.junctions), 0, 0.0, 0.0, 0.0)
    return LayerStats(
        mode=layer.mode,
        junctions=len(layer.junctions),
        links=len(layer.links),
        max_length=float(lengths.max()),
        mean_length=float(lengths.mean()),
        std_length=float(lengths.std()),
    )


@dataclass(frozen=True)
class AssemblyReport:
    """군집 거리별 조립/solve 결과 한 행"""

    cluster_distance: float
    vertices: int
    edges: int
    running_minutes: float
    avg_paths: float
    max_paths: int


def assembly_report(
    cluster_distance: float,
    graph: ColouredGraph,
    result: ParetoResult,
    running_minutes: float | None = None,
) -> AssemblyReport:
    minutes = (
        result.stats.wall_ms / 60000.0 if running_minutes is None else running_minutes
    )
    return AssemblyReport(
        cluster_distance=cluster_distance,
        vertices=graph.n,
        edges=graph.edge_count,
        running_minutes=minutes,
        avg_paths=result.mean_cardinality(),
        max_paths=result.max_cardinality(),
    )

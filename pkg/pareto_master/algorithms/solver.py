"""다중모드 Dijkstra (라벨 설정 방식)

source에서 모든 정점 v까지의 Pareto 최적 경로 집합 M_sv를 계산합니다.

큐 키는 (성분 합, 성분 사전순, 삽입 순서)입니다. 성분 합은 지배 부분순서의
선형 확장이므로, 큐 앞의 라벨은 이후 어떤 라벨에게도 지배되지 않습니다.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass, field
from typing import Iterator

from loguru import logger

from pareto_master.core.config import config
from pareto_master.core.errors import ResourceCeilingError, UsageError
from pareto_master.graph.model import ColouredGraph, Edge, PathLabel, extend
from pareto_master.graph.weights import WeightVector

# 시간 예산 확인 주기 (큐에서 꺼낸 라벨 수 기준)
_CLOCK_INTERVAL = 1024


@dataclass(frozen=True)
class SolveOptions:
    """solve 옵션

    Attributes:
        keep_ties: 같은 가중치 벡터를 갖는 경로를 모두 유지할지 여부
        target: 보고 대상 정점 (알고리즘 자체는 바꾸지 않음)
        max_labels: 생성 라벨 수 상한 (None이면 config.MAX_LABELS)
        time_budget: 실행 시간 상한(초), 0 이하면 무제한 (None이면 config.TIME_BUDGET)
    """

    keep_ties: bool = False
    target: int | None = None
    max_labels: int | None = None
    time_budget: float | None = None


@dataclass
class SolveStats:
    """실행 계측값"""

    processed: int = 0  # 큐에서 꺼내 확정한 라벨 수
    relaxations: int = 0  # 생성한 라벨 p'_su 수 (큐 삽입 여부 무관)
    evictions: int = 0  # 더 작은 라벨에 의해 큐에서 제거된 수
    peak_queue: int = 0
    wall_ms: float = 0.0

    def to_dict(self) -> dict:
        return {
            "processed": self.processed,
            "relaxations": self.relaxations,
            "evictions": self.evictions,
            "peak_queue": self.peak_queue,
            "ms": round(self.wall_ms),
        }


@dataclass(frozen=True)
class ParetoSet:
    """한 목적지 정점의 Pareto 최적 라벨 집합 (확정 순서)"""

    vertex: int
    labels: tuple[PathLabel, ...]
    scale: int = 0  # 가중치 단위 (10^-scale)

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[PathLabel]:
        return iter(self.labels)

    def __bool__(self) -> bool:
        return bool(self.labels)

    def weights(self) -> list[WeightVector]:
        return [label.weight for label in self.labels]

    def weight_set(self) -> set[WeightVector]:
        return {label.weight for label in self.labels}

    def sorted_labels(self) -> list[PathLabel]:
        """가중치 벡터 사전순, 같으면 간선 id 순서열 순"""
        return sorted(self.labels, key=lambda label: (label.weight, label.edge_ids()))


@dataclass
class ParetoResult:
    """solve 결과: 정점별 Pareto 집합과 계측값"""

    graph: ColouredGraph
    source: int
    sets: list[ParetoSet]
    stats: SolveStats
    keep_ties: bool = False
    target: int | None = None
    truncated: bool = field(default=False)

    def at(self, vertex: int) -> ParetoSet:
        return self.sets[vertex]

    @property
    def target_set(self) -> ParetoSet | None:
        """target 옵션으로 선택한 집합"""
        if self.target is None:
            return None
        return self.sets[self.target]

    def cardinalities(self) -> list[int]:
        """정점별 |M_sv|"""
        return [len(s) for s in self.sets]

    def _others(self) -> list[int]:
        return [len(s) for s in self.sets if s.vertex != self.source]

    def mean_cardinality(self) -> float:
        """v != source 에 대한 |M_sv| 평균 (도달 불가 정점 포함)"""
        others = self._others()
        return sum(others) / len(others) if others else 0.0

    def max_cardinality(self) -> int:
        others = self._others()
        return max(others) if others else 0


class FrontierQueue:
    """확정 전 라벨을 담는 우선순위 큐

    heapq 위에 정점별 live 라벨 인덱스를 두고, 임의 라벨 제거는 지연 삭제로 처리합니다.
    """

    def __init__(self, n: int) -> None:
        self._heap: list[tuple[int, WeightVector, int, PathLabel]] = []
        self._live: list[dict[int, PathLabel]] = [{} for _ in range(n)]
        self._seq = 0
        self._size = 0

    def __len__(self) -> int:
        return self._size

    def __bool__(self) -> bool:
        return self._size > 0

    def push(self, label: PathLabel) -> int:
        """라벨 삽입 후 삽입 순번 반환"""
        seq = self._seq
        self._seq += 1
        heapq.heappush(self._heap, (sum(label.weight), label.weight, seq, label))
        self._live[label.end][seq] = label
        self._size += 1
        return seq

    def pop(self) -> PathLabel:
        """큐 앞(키 최소)의 live 라벨을 꺼냄"""
        while self._heap:
            _, _, seq, label = heapq.heappop(self._heap)
            live = self._live[label.end]
            if seq in live:
                del live[seq]
                self._size -= 1
                return label
        raise IndexError("빈 큐에서 pop")

    def remove(self, vertex: int, seq: int) -> None:
        """정점 vertex의 라벨 seq를 제거 (힙에서는 지연 삭제)"""
        del self._live[vertex][seq]
        self._size -= 1

    def at(self, vertex: int) -> dict[int, PathLabel]:
        """정점의 live 라벨 (삽입 순번 -> 라벨)"""
        return self._live[vertex]


def _is_blocked(candidate: WeightVector, existing: WeightVector, keep_ties: bool) -> bool:
    """existing이 candidate를 지배하거나(<) 같으면(keep_ties가 아닐 때) True"""
    equal = True
    for x, y in zip(existing, candidate):
        if x > y:
            return False
        if x != y:
            equal = False
    return not (equal and keep_ties)


def _strictly_less(a: WeightVector, b: WeightVector) -> bool:
    """a < b (성분별 <=, 그리고 a != b)"""
    strict = False
    for x, y in zip(a, b):
        if x > y:
            return False
        if x < y:
            strict = True
    return strict


def solve(
    graph: ColouredGraph, source: int, options: SolveOptions | None = None
) -> ParetoResult:
    """source에서 모든 정점까지의 Pareto 집합 계산

    Args:
        graph: 불변 그래프
        source: 출발 정점
        options: SolveOptions (기본값: 대표 경로 하나, 상한은 config)

    Returns:
        ParetoResult

    Raises:
        UsageError: source/target 범위 오류
        ResourceCeilingError: 라벨 수/시간 상한 초과 (partial에 부분 결과)
    """
    opts = options or SolveOptions()
    n = graph.n
    if not 0 <= source < n:
        raise UsageError(f"source {source}가 범위를 벗어났습니다 (n={n})")
    if opts.target is not None and not 0 <= opts.target < n:
        raise UsageError(f"target {opts.target}가 범위를 벗어났습니다 (n={n})")

    max_labels = config.MAX_LABELS if opts.max_labels is None else opts.max_labels
    budget = config.TIME_BUDGET if opts.time_budget is None else opts.time_budget
    max_units = config.MAX_UNITS
    keep_ties = opts.keep_ties

    stats = SolveStats()
    finalized: list[list[PathLabel]] = [[] for _ in range(n)]
    queue = FrontierQueue(n)
    queue.push(PathLabel.empty(source, graph.k))
    stats.peak_queue = 1

    started = time.perf_counter()
    deadline = started + budget if budget and budget > 0 else None

    def partial_result(truncated: bool) -> ParetoResult:
        stats.wall_ms = (time.perf_counter() - started) * 1000.0
        return ParetoResult(
            graph=graph,
            source=source,
            sets=[
                ParetoSet(v, tuple(labels), graph.scale) for v, labels in enumerate(finalized)
            ],
            stats=stats,
            keep_ties=keep_ties,
            target=opts.target,
            truncated=truncated,
        )

    while queue:
        if (
            deadline is not None
            and stats.processed % _CLOCK_INTERVAL == 0
            and time.perf_counter() > deadline
        ):
            logger.warning("solve 시간 예산 초과: {}s (source={})", budget, source)
            raise ResourceCeilingError(
                f"시간 예산 {budget}s 초과", bound=budget, partial=partial_result(True)
            )

        label = queue.pop()
        stats.processed += 1
        v = label.end
        finalized[v].append(label)

        edge: Edge
        for edge in graph.out_edges(v):
            u = edge.target
            if (label.visited >> u) & 1:
                continue

            candidate = extend(label, edge, max_units)
            weight = candidate.weight
            stats.relaxations += 1
            if stats.relaxations > max_labels:
                logger.warning("solve 라벨 상한 초과: {} (source={})", max_labels, source)
                raise ResourceCeilingError(
                    f"라벨 상한 {max_labels} 초과",
                    bound=max_labels,
                    partial=partial_result(True),
                )

            if any(_is_blocked(weight, f.weight, keep_ties) for f in finalized[u]):
                continue
            live = queue.at(u)
            if any(_is_blocked(weight, q.weight, keep_ties) for q in live.values()):
                continue

            # 새 라벨보다 큰 큐 라벨 제거
            doomed = [seq for seq, q in live.items() if _strictly_less(weight, q.weight)]
            for seq in doomed:
                queue.remove(u, seq)
            stats.evictions += len(doomed)

            queue.push(candidate)
            if len(queue) > stats.peak_queue:
                stats.peak_queue = len(queue)

    result = partial_result(False)
    logger.info(
        "solve 완료: source={} n={} k={} processed={} relaxations={} evictions={} ms={:.1f}",
        source,
        n,
        graph.k,
        stats.processed,
        stats.relaxations,
        stats.evictions,
        stats.wall_ms,
    )
    return result


def reconstruct(label: PathLabel) -> list[Edge]:
    """source부터 라벨 끝 정점까지의 간선 순서열"""
    return label.edges()

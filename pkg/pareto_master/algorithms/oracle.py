"""전수 열거 oracle

작은 그래프에서 solver 결과를 검증하기 위한 기준값을 제공합니다.
가지치기 없이 단순하게 유지합니다.

열거 순서: 깊이 우선, 각 정점에서 간선 id 오름차순.
"""

from __future__ import annotations

from math import comb, factorial
from typing import Sequence, TypeVar

from loguru import logger

from pareto_master.core.config import config
from pareto_master.core.errors import ResourceCeilingError, UsageError
from pareto_master.graph.model import ColouredGraph, Edge
from pareto_master.graph.weights import Dominance, WeightVector, compare, zero_vector

P = TypeVar("P")

PathEntry = tuple[list[Edge], WeightVector]


def complete_multigraph_path_count(n: int, k: int) -> int:
    """완전 멀티그래프 C(n, k)에서 u != v 사이 단순 경로 수

    sum_{j=0}^{n-2} C(n-2, j) * k^(j+1) * j!
    """
    if n < 2 or k < 1:
        raise UsageError(f"n >= 2, k >= 1 이어야 합니다 (n={n}, k={k})")
    return sum(comb(n - 2, j) * k ** (j + 1) * factorial(j) for j in range(n - 1))


def _relevant_vertices(graph: ColouredGraph, u: int, v: int) -> int:
    """u에서 도달 가능하고 v로 도달 가능한 정점 수"""
    forward = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        for edge in graph.out_edges(x):
            if edge.target not in forward:
                forward.add(edge.target)
                stack.append(edge.target)

    reverse_adj: list[list[int]] = [[] for _ in range(graph.n)]
    for edge in graph.edges:
        reverse_adj[edge.target].append(edge.source)
    backward = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for y in reverse_adj[x]:
            if y not in backward:
                backward.add(y)
                stack.append(y)
    return len(forward & backward)


def _max_multiplicity(graph: ColouredGraph) -> int:
    counts: dict[tuple[int, int], int] = {}
    for edge in graph.edges:
        key = (edge.source, edge.target)
        counts[key] = counts.get(key, 0) + 1
    return max(counts.values(), default=1)


def path_count_bound(graph: ColouredGraph, u: int, v: int) -> int:
    """u->v 단순 경로 수의 상한 (관련 정점 수, 최대 병렬 간선 수의 완전 멀티그래프)"""
    n_eff = _relevant_vertices(graph, u, v)
    if n_eff < 2:
        return 1
    return complete_multigraph_path_count(n_eff, _max_multiplicity(graph))


def enumerate_simple_paths(
    graph: ColouredGraph, u: int, v: int, ceiling: int | None = None
) -> list[PathEntry]:
    """u에서 v까지 모든 단순 경로와 정확한 가중치 벡터

    상한 추정값이 ceiling을 넘으면 열거 중 탐색한 부분 경로 수를 세어,
    실제로 ceiling을 넘는 순간 거부합니다.

    Raises:
        UsageError: 정점 범위 오류
        ResourceCeilingError: 탐색 경로 수가 ceiling 초과 (bound에 상한 추정값)
    """
    _check_vertex(graph, u)
    _check_vertex(graph, v)
    limit = config.ORACLE_CEILING if ceiling is None else ceiling
    if u == v:
        return [([], zero_vector(graph.k))]

    bound = path_count_bound(graph, u, v)
    guarded = bound > limit
    if guarded:
        logger.debug("oracle 상한 추정 {} > {}: 열거 중 계수", bound, limit)

    results: list[PathEntry] = []
    path: list[Edge] = []
    on_path = [False] * graph.n
    on_path[u] = True
    explored = 0

    # 재귀 대신 명시적 스택: (정점, 다음에 볼 간선 인덱스)
    stack: list[tuple[int, int]] = [(u, 0)]
    while stack:
        x, index = stack.pop()
        out = graph.out_edges(x)
        if index >= len(out):
            on_path[x] = False
            if path:
                path.pop()
            continue
        stack.append((x, index + 1))
        edge = out[index]
        if on_path[edge.target]:
            continue
        explored += 1
        if guarded and explored > limit:
            logger.warning("oracle 거부: {}->{} 탐색 경로 수 > {}", u, v, limit)
            raise ResourceCeilingError(
                f"단순 경로 열거 거부: 상한 {bound} > {limit}", bound=bound
            )
        if edge.target == v:
            full = path + [edge]
            results.append((full, graph.path_weight(full)))
            continue
        path.append(edge)
        on_path[edge.target] = True
        stack.append((edge.target, 0))
    return results


def enumerate_walks(
    graph: ColouredGraph, u: int, v: int, max_edges: int
) -> list[PathEntry]:
    """u에서 v까지 간선 max_edges개 이하의 모든 walk (정점 반복 허용)"""
    _check_vertex(graph, u)
    _check_vertex(graph, v)
    if max_edges < 0:
        raise UsageError(f"max_edges는 음수일 수 없습니다: {max_edges}")
    results: list[PathEntry] = []

    def visit(x: int, walk: list[Edge]) -> None:
        if x == v:
            results.append((list(walk), graph.path_weight(walk)))
        if len(walk) == max_edges:
            return
        for edge in graph.out_edges(x):
            walk.append(edge)
            visit(edge.target, walk)
            walk.pop()

    visit(u, [])
    return results


def pareto_filter(
    entries: Sequence[tuple[P, WeightVector]], keep_ties: bool = False
) -> list[tuple[P, WeightVector]]:
    """다른 (서로 다른) 벡터에 지배되지 않는 항목만 남김

    keep_ties=False면 살아남은 벡터마다 입력 순서상 첫 항목 하나만 남깁니다.
    """
    # 성분 합 오름차순: 지배하는 벡터가 항상 앞에 옴
    distinct = sorted(set(weight for _, weight in entries), key=lambda w: (sum(w), w))
    frontier: list[WeightVector] = []
    for candidate in distinct:
        if not any(compare(other, candidate) is Dominance.LESS for other in frontier):
            frontier.append(candidate)
    survivors = set(frontier)
    kept: list[tuple[P, WeightVector]] = []
    seen: set[WeightVector] = set()
    for path, weight in entries:
        if weight not in survivors:
            continue
        if not keep_ties and weight in seen:
            continue
        seen.add(weight)
        kept.append((path, weight))
    return kept


def _check_vertex(graph: ColouredGraph, vertex: int) -> None:
    if not 0 <= vertex < graph.n:
        raise UsageError(f"정점 {vertex}가 범위를 벗어났습니다 (n={graph.n})")

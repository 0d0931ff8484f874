"""계수(count) 색상 추가

홉 수 또는 환승 횟수를 세는 색상을 하나 더 붙인 그래프를 만듭니다.
어떤 간선도 0 가중치를 갖지 않도록 구조적으로 구성합니다.

- hops: 각 간선 u->v를 u->x (원래 색상/가중치) + x->v (count 색상 1.0) 로 분할
- transfers: 정점 확장. 정점 v마다 접속 색상별 하위 정점 (v, c)를 두고
  서로 다른 색상의 하위 정점 사이에 count 색상 1.0 간선을 둡니다.
  출발 전용 정점(v_out)과 도착 전용 정점(v_in)을 따로 두어 경로 중간에서
  환승 비용 없이 색상을 바꾸는 우회를 막습니다.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from loguru import logger

from pareto_master.core.errors import UsageError

from .model import ColouredGraph, GraphBuilder
from .weights import to_units


class CountMode(Enum):
    """count 색상 종류"""

    HOPS = "hops"
    TRANSFERS = "transfers"


@dataclass(frozen=True)
class AugmentedGraph:
    """count 색상이 추가된 그래프와 원래 정점 id 매핑

    Attributes:
        graph: k+1 색상 그래프
        mode: count 종류
        base_n: 원래 그래프의 정점 수
        origins: 원래 정점 v에서 출발할 때 사용할 정점 id
        terminals: 원래 정점 v의 Pareto 집합을 읽을 정점 id
        edge_origins: 확장 그래프 간선 id -> 원래 간선 id (count 색상 간선은 None)
    """

    graph: ColouredGraph
    mode: CountMode
    base_n: int
    origins: tuple[int, ...]
    terminals: tuple[int, ...]
    edge_origins: tuple[int | None, ...] = ()

    def origin_of(self, vertex: int) -> int:
        return self.origins[vertex]

    def terminal_of(self, vertex: int, source: int | None = None) -> int:
        """원래 정점의 도착 정점 id (source 자신이면 출발 정점)"""
        if source is not None and vertex == source:
            return self.origins[vertex]
        return self.terminals[vertex]

    def original_path(self, edge_ids: Iterable[int]) -> tuple[int, ...]:
        """확장 그래프의 간선 id 순서열을 원래 그래프의 간선 id로 변환 (count 간선 제외)"""
        path = []
        for edge_id in edge_ids:
            origin = self.edge_origins[edge_id]
            if origin is not None:
                path.append(origin)
        return tuple(path)


def augment_with_count_colour(
    graph: ColouredGraph, mode: CountMode | str, colour_name: str | None = None
) -> AugmentedGraph:
    """홉/환승 횟수를 세는 색상 k를 추가

    Args:
        graph: 원본 그래프
        mode: CountMode 또는 "hops" / "transfers"
        colour_name: 추가 색상 이름 (기본: mode 이름)

    Returns:
        AugmentedGraph: k+1 색상 그래프와 정점 매핑
    """
    try:
        mode = CountMode(mode)
    except ValueError:
        raise UsageError(f"알 수 없는 augment 모드: {mode} (hops|transfers)") from None

    name = colour_name or mode.value
    if name in graph.colour_names:
        raise UsageError(f"추가할 색상 이름이 이미 존재합니다: {name}")

    if mode is CountMode.HOPS:
        augmented = _augment_hops(graph, name)
    else:
        augmented = _augment_transfers(graph, name)

    logger.info(
        "count 색상 추가 ({}): n {} -> {}, edges {} -> {}",
        mode.value,
        graph.n,
        augmented.graph.n,
        graph.edge_count,
        augmented.graph.edge_count,
    )
    return augmented


def _start_builder(graph: ColouredGraph, name: str) -> tuple[GraphBuilder, int]:
    builder = GraphBuilder(scale=graph.scale)
    for colour in graph.colour_names:
        builder.add_colour(colour)
    count_colour = builder.add_colour(name)
    return builder, count_colour


def _augment_hops(graph: ColouredGraph, name: str) -> AugmentedGraph:
    builder, count_colour = _start_builder(graph, name)
    unit = to_units(1, graph.scale)
    builder.add_vertices(graph.n)
    edge_origins: list[int | None] = []
    for edge in graph.edges:
        middle = builder.add_vertex()
        builder.add_edge_units(edge.source, middle, edge.colour, edge.weight)
        builder.add_edge_units(middle, edge.target, count_colour, unit)
        edge_origins += [edge.id, None]
    identity = tuple(range(graph.n))
    return AugmentedGraph(
        graph=builder.build(),
        mode=CountMode.HOPS,
        base_n=graph.n,
        origins=identity,
        terminals=identity,
        edge_origins=tuple(edge_origins),
    )


def _augment_transfers(graph: ColouredGraph, name: str) -> AugmentedGraph:
    builder, count_colour = _start_builder(graph, name)
    unit = to_units(1, graph.scale)
    n = graph.n

    # 0..n-1: 출발 전용 정점, n..2n-1: 도착 전용 정점
    builder.add_vertices(2 * n)

    in_colours: list[set[int]] = [set() for _ in range(n)]
    out_colours: list[set[int]] = [set() for _ in range(n)]
    for edge in graph.edges:
        out_colours[edge.source].add(edge.colour)
        in_colours[edge.target].add(edge.colour)

    # (정점, 색상) 하위 정점 id 할당 (정점, 색상 순으로 결정적)
    sub: dict[tuple[int, int], int] = {}
    for v in range(n):
        for colour in sorted(in_colours[v] | out_colours[v]):
            sub[(v, colour)] = builder.add_vertex()

    # 원래 간선마다 복사본 4개
    edge_origins: list[int | None] = []
    for edge in graph.edges:
        u, w, c = edge.source, edge.target, edge.colour
        builder.add_edge_units(sub[(u, c)], sub[(w, c)], c, edge.weight)
        # 출발 정점에서 바로 떠나는 복사본
        builder.add_edge_units(u, sub[(w, c)], c, edge.weight)
        # 도착 정점으로 바로 들어가는 복사본
        builder.add_edge_units(sub[(u, c)], n + w, c, edge.weight)
        # 출발과 도착이 한 간선인 경우
        builder.add_edge_units(u, n + w, c, edge.weight)
        edge_origins += [edge.id] * 4

    # 같은 정점에서 색상이 바뀌는 전이: count 색상 1.0
    for v in range(n):
        for arrive in sorted(in_colours[v]):
            for depart in sorted(out_colours[v]):
                if arrive != depart:
                    builder.add_edge_units(
                        sub[(v, arrive)], sub[(v, depart)], count_colour, unit
                    )
                    edge_origins.append(None)

    return AugmentedGraph(
        graph=builder.build(),
        mode=CountMode.TRANSFERS,
        base_n=n,
        origins=tuple(range(n)),
        terminals=tuple(range(n, 2 * n)),
        edge_origins=tuple(edge_origins),
    )

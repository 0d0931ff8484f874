"""junction 군집화와 다중모드 그래프 조립

- cluster_junctions: 모든 layer의 junction을 단일 연결(single linkage)로 군집화
  (임계 거리 이하 쌍의 연결 사슬로 이어지면 같은 군집)
- assemble: 군집을 정점으로, layer를 색상으로 하는 ColouredGraph 생성

거리는 십진 도 좌표 평면의 유클리드 거리입니다 (대원 거리 아님).
이웃 탐색은 셀 크기 = 임계 거리인 균등 격자를 사용하며, 좌표는 10^-6 도 단위 정수로 비교합니다.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal
from typing import Sequence

from loguru import logger

from pareto_master.core.errors import UsageError
from pareto_master.graph.model import ColouredGraph, GraphBuilder

from .layers import JunctionLayer

# GIS 길이 기본 scale (10^-6 도)
GIS_SCALE = 6

JunctionKey = tuple[int, int]  # (layer index, junction id)


@dataclass(frozen=True)
class ClusterMap:
    """junction (layer index, id) -> 군집 정점 id

    군집 id는 0..count-1 이며, 가장 작은 (layer index, junction id) 구성원 순으로 부여됩니다.
    """

    assignment: dict[JunctionKey, int]
    count: int
    modes: tuple[str, ...] = ()

    def vertex_of(self, layer: int | str, junction_id: int) -> int:
        """junction이 속한 군집 정점 id (layer는 index 또는 mode 이름)"""
        index = self._layer_index(layer)
        try:
            return self.assignment[(index, junction_id)]
        except KeyError:
            raise UsageError(
                f"군집에 없는 junction: layer={layer}, id={junction_id}"
            ) from None

    def members(self, vertex: int) -> list[JunctionKey]:
        return sorted(key for key, value in self.assignment.items() if value == vertex)

    def _layer_index(self, layer: int | str) -> int:
        if isinstance(layer, int):
            return layer
        if layer in self.modes:
            return self.modes.index(layer)
        if layer.isdigit():
            return int(layer)
        raise UsageError(f"알 수 없는 layer: {layer}")


class _DisjointSet:
    """경로 압축 union-find"""

    def __init__(self, size: int) -> None:
        self._parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[x] != root:
            self._parent[x], x = root, self._parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        # 작은 인덱스를 대표로 유지
        if rb < ra:
            ra, rb = rb, ra
        self._parent[rb] = ra
        return True


def _coord_units(value: float | Decimal, scale: int) -> int:
    """좌표/거리를 10^-scale 도 단위 정수로 변환 (float는 repr 십진 표기 기준)"""
    exact = value if isinstance(value, Decimal) else Decimal(repr(value))
    return int(exact.scaleb(scale).quantize(Decimal(1), rounding=ROUND_HALF_EVEN))


def cluster_junctions(
    layers: Sequence[JunctionLayer], distance: float | Decimal, scale: int = GIS_SCALE
) -> ClusterMap:
    """단일 연결 군집화

    좌표와 임계 거리를 10^-scale 도 단위 정수로 바꿔 거리 비교를 정확하게 합니다
    (거리가 정확히 임계값인 쌍도 같은 군집).

    Args:
        layers: 운송수단별 layer (비어 있으면 안 됨)
        distance: 임계 거리 (십진 도, > 0)
        scale: 좌표 고정소수점 자리수

    Returns:
        ClusterMap: 입력 순서와 무관한 결정적 군집 id
    """
    if not layers:
        raise UsageError("군집화할 layer가 없습니다")
    if not distance > 0:
        raise UsageError(f"군집 거리는 양수여야 합니다: {distance}")
    cell = _coord_units(distance, scale)
    if cell < 1:
        raise UsageError(f"군집 거리가 scale={scale} 단위보다 작습니다: {distance}")

    # 정규 순서: (layer index, junction id)
    points: list[tuple[JunctionKey, int, int]] = sorted(
        (
            (index, junction.id),
            _coord_units(junction.x, scale),
            _coord_units(junction.y, scale),
        )
        for index, layer in enumerate(layers)
        for junction in layer.junctions
    )

    cells: dict[tuple[int, int], list[int]] = {}
    for i, (_, x, y) in enumerate(points):
        cells.setdefault((x // cell, y // cell), []).append(i)

    limit = cell * cell
    dsu = _DisjointSet(len(points))
    merges = 0
    for (cx, cy), members in cells.items():
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                neighbours = cells.get((cx + dx, cy + dy))
                if not neighbours:
                    continue
                for i in members:
                    _, xi, yi = points[i]
                    for j in neighbours:
                        if j <= i:
                            continue
                        _, xj, yj = points[j]
                        if (xi - xj) ** 2 + (yi - yj) ** 2 <= limit:
                            if dsu.union(i, j):
                                merges += 1

    assignment: dict[JunctionKey, int] = {}
    cluster_of_root: dict[int, int] = {}
    for i, (key, _, _) in enumerate(points):
        root = dsu.find(i)
        if root not in cluster_of_root:
            cluster_of_root[root] = len(cluster_of_root)
        assignment[key] = cluster_of_root[root]

    logger.info(
        "cluster_junctions: junctions={} distance={} clusters={} merges={}",
        len(points),
        distance,
        len(cluster_of_root),
        merges,
    )
    return ClusterMap(
        assignment=assignment,
        count=len(cluster_of_root),
        modes=tuple(layer.mode for layer in layers),
    )


def _length_units(length: Decimal, scale: int) -> int:
    """길이를 scale 단위로 반올림 (최소 1단위)"""
    units = int(length.scaleb(scale).quantize(Decimal(1), rounding=ROUND_HALF_EVEN))
    return max(units, 1)


def assemble(
    layers: Sequence[JunctionLayer], cluster_map: ClusterMap, scale: int = GIS_SCALE
) -> ColouredGraph:
    """layer와 군집으로 다중모드 그래프 조립

    - 색상 id = layer index
    - link는 끝점 군집 정점 사이 간선 (양방향 link는 간선 2개)
    - 양 끝이 같은 군집으로 합쳐진 link는 제거 (자기 루프)
    - 고립 군집도 정점으로 유지
    """
    if not layers:
        raise UsageError("조립할 layer가 없습니다")
    for colour, layer in enumerate(layers):
        for junction in layer.junctions:
            if (colour, junction.id) not in cluster_map.assignment:
                raise UsageError(f"[{layer.mode}] 군집에 없는 junction: {junction.id}")

    builder = GraphBuilder(n=cluster_map.count, scale=scale)
    for layer in layers:
        builder.add_colour(layer.mode)

    dropped = 0
    for colour, layer in enumerate(layers):
        for link in layer.links:
            u = cluster_map.assignment[(colour, link.source)]
            v = cluster_map.assignment[(colour, link.target)]
            if u == v:
                dropped += 1
                continue
            units = _length_units(link.length, scale)
            builder.add_edge_units(u, v, colour, units)
            if not link.directed:
                builder.add_edge_units(v, u, colour, units)

    graph = builder.build()
    logger.info(
        "assemble: vertices={} edges={} colours={} dropped_links={}",
        graph.n,
        graph.edge_count,
        graph.k,
        dropped,
    )
    return graph

"""가중 색상-간선 그래프 모델

- Edge: 색상 하나와 양의 가중치 하나를 갖는 방향 간선
- ColouredGraph: 생성 후 불변인 방향 멀티그래프
- GraphBuilder: ColouredGraph 생성용 빌더
- PathLabel: 구성 중인 경로 (부모 참조로 prefix 공유)
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Iterator, Sequence

from pareto_master.core.config import config
from pareto_master.core.errors import UsageError

from .weights import WeightVector, add_component, format_units, to_units, zero_vector


@dataclass(frozen=True, slots=True)
class Edge:
    """방향 간선

    Attributes:
        source: 시작 정점 id
        target: 끝 정점 id
        colour: 색상 id (0..k-1)
        weight: 가중치 (고정소수점 단위, > 0)
        id: 그래프 내 dense 간선 id
    """

    source: int
    target: int
    colour: int
    weight: int
    id: int


class ColouredGraph:
    """가중 색상-간선 그래프 G=(V, E, w, colour)

    생성 후 변경되지 않으므로 여러 solve 호출에서 동시에 공유할 수 있습니다.
    """

    __slots__ = ("_n", "_colour_names", "_scale", "_edges", "_adjacency")

    def __init__(
        self,
        n: int,
        colour_names: Sequence[str],
        edges: Sequence[Edge],
        scale: int,
    ) -> None:
        if n < 0:
            raise UsageError(f"정점 수는 음수일 수 없습니다: {n}")
        if not colour_names:
            raise UsageError("색상이 최소 1개 필요합니다")
        if scale < 0:
            raise UsageError(f"scale은 음수일 수 없습니다: {scale}")
        k = len(colour_names)
        adjacency: list[list[Edge]] = [[] for _ in range(n)]
        for index, edge in enumerate(edges):
            if edge.id != index:
                raise UsageError(f"간선 id는 0부터 연속이어야 합니다: {edge.id} != {index}")
            if not (0 <= edge.source < n and 0 <= edge.target < n):
                raise UsageError(f"간선 {edge.id}의 끝점이 범위를 벗어났습니다 (n={n})")
            if not 0 <= edge.colour < k:
                raise UsageError(f"간선 {edge.id}의 색상이 범위를 벗어났습니다 (k={k})")
            if edge.weight <= 0:
                raise UsageError(f"간선 {edge.id}의 가중치는 양수여야 합니다")
            adjacency[edge.source].append(edge)
        self._n = n
        self._colour_names = tuple(colour_names)
        self._scale = scale
        self._edges = tuple(edges)
        self._adjacency = tuple(tuple(out) for out in adjacency)

    @property
    def n(self) -> int:
        return self._n

    @property
    def k(self) -> int:
        return len(self._colour_names)

    @property
    def scale(self) -> int:
        return self._scale

    @property
    def colour_names(self) -> tuple[str, ...]:
        return self._colour_names

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def out_edges(self, vertex: int) -> tuple[Edge, ...]:
        """vertex에서 나가는 간선 (간선 id 순)"""
        return self._adjacency[vertex]

    def edge(self, edge_id: int) -> Edge:
        return self._edges[edge_id]

    def colour_id(self, name: str) -> int:
        """색상 이름 → id"""
        try:
            return self._colour_names.index(name)
        except ValueError:
            raise UsageError(
                f"알 수 없는 색상: {name} (가능: {', '.join(self._colour_names)})"
            ) from None

    def path_weight(self, edges: Sequence[Edge]) -> WeightVector:
        """간선 순서열의 색상별 가중치 합"""
        totals = [0] * self.k
        for edge in edges:
            totals[edge.colour] += edge.weight
        return tuple(totals)

    def format_vector(self, weight: WeightVector) -> list[str]:
        """가중치 벡터를 십진 문자열 목록으로"""
        return [format_units(units, self._scale) for units in weight]

    def with_scaled_colour(
        self, colour: int, factor: Fraction | Decimal | int | str
    ) -> ColouredGraph:
        """한 색상의 모든 가중치에 양의 factor를 곱한 사본

        결과가 고정소수점으로 정확히 표현되지 않으면 UsageError.
        """
        ratio = Fraction(factor) if not isinstance(factor, Fraction) else factor
        if ratio <= 0:
            raise UsageError(f"배율은 양수여야 합니다: {factor}")
        if not 0 <= colour < self.k:
            raise UsageError(f"색상이 범위를 벗어났습니다: {colour}")
        scaled: list[Edge] = []
        for edge in self._edges:
            if edge.colour != colour:
                scaled.append(edge)
                continue
            product = edge.weight * ratio
            if product.denominator != 1:
                raise UsageError(
                    f"간선 {edge.id}: 배율 {factor} 적용 결과가 scale={self._scale}에서 정확하지 않습니다"
                )
            scaled.append(
                Edge(edge.source, edge.target, edge.colour, int(product), edge.id)
            )
        return ColouredGraph(self._n, self._colour_names, scaled, self._scale)

    def __repr__(self) -> str:
        return (
            f"ColouredGraph(n={self._n}, k={self.k}, edges={len(self._edges)}, "
            f"scale={self._scale})"
        )


class GraphBuilder:
    """ColouredGraph 빌더

    사용 예시:
        builder = GraphBuilder(n=2)
        bus = builder.add_colour("bus")
        builder.add_edge(0, 1, bus, "15")
        graph = builder.build()
    """

    def __init__(self, n: int = 0, scale: int | None = None) -> None:
        self._n = n
        self._scale = config.DEFAULT_SCALE if scale is None else scale
        self._colours: list[str] = []
        self._edges: list[Edge] = []

    @property
    def scale(self) -> int:
        return self._scale

    @property
    def n(self) -> int:
        return self._n

    def add_vertex(self) -> int:
        """정점 추가 후 id 반환"""
        self._n += 1
        return self._n - 1

    def add_vertices(self, count: int) -> range:
        start = self._n
        self._n += count
        return range(start, self._n)

    def add_colour(self, name: str) -> int:
        """색상 추가 후 id 반환 (이름 중복 불가, 공백 불가)"""
        if not name or any(ch.isspace() for ch in name):
            raise UsageError(f"색상 이름은 비어 있거나 공백을 포함할 수 없습니다: {name!r}")
        if name in self._colours:
            raise UsageError(f"색상 이름 중복: {name}")
        self._colours.append(name)
        return len(self._colours) - 1

    def add_edge(
        self, source: int, target: int, colour: int, weight: str | Decimal | int
    ) -> Edge:
        """십진수 가중치로 간선 추가"""
        return self.add_edge_units(source, target, colour, to_units(weight, self._scale))

    def add_edge_units(self, source: int, target: int, colour: int, units: int) -> Edge:
        """고정소수점 단위 가중치로 간선 추가"""
        if units <= 0:
            raise UsageError(f"간선 가중치는 양수여야 합니다: {source}->{target}")
        edge = Edge(source, target, colour, units, len(self._edges))
        self._edges.append(edge)
        return edge

    def add_bidirectional(
        self, u: int, v: int, colour: int, weight: str | Decimal | int
    ) -> tuple[Edge, Edge]:
        """양방향 간선 쌍 추가 (u->v, v->u)"""
        return (
            self.add_edge(u, v, colour, weight),
            self.add_edge(v, u, colour, weight),
        )

    def build(self) -> ColouredGraph:
        return ColouredGraph(self._n, self._colours, self._edges, self._scale)


@dataclass(slots=True, eq=False)
class PathLabel:
    """구성 중인 경로

    생성 후 변경하지 않습니다. 경로는 parent 참조를 따라가며 출력 시에만 구체화됩니다.

    Attributes:
        end: 끝 정점
        weight: 누적 가중치 벡터
        parent: 이전 라벨 (빈 경로면 None)
        edge: 마지막 간선 (빈 경로면 None)
        visited: 경로상 정점 비트셋 (bit v = 정점 v 방문)
    """

    end: int
    weight: WeightVector
    parent: PathLabel | None = None
    edge: Edge | None = None
    visited: int = 0

    @classmethod
    def empty(cls, source: int, k: int) -> PathLabel:
        """source에서의 빈 경로"""
        return cls(end=source, weight=zero_vector(k), visited=1 << source)

    def contains(self, vertex: int) -> bool:
        return (self.visited >> vertex) & 1 == 1

    def iter_edges_reversed(self) -> Iterator[Edge]:
        label: PathLabel | None = self
        while label is not None and label.edge is not None:
            yield label.edge
            label = label.parent

    def edges(self) -> list[Edge]:
        """source부터의 간선 순서열"""
        edges = list(self.iter_edges_reversed())
        edges.reverse()
        return edges

    def edge_ids(self) -> list[int]:
        return [edge.id for edge in self.edges()]

    def vertices(self) -> list[int]:
        """source부터의 정점 순서열"""
        edges = self.edges()
        if not edges:
            return [self.end]
        return [edges[0].source] + [edge.target for edge in edges]

    @property
    def hops(self) -> int:
        return sum(1 for _ in self.iter_edges_reversed())


def extend(label: PathLabel, edge: Edge, max_units: int | None = None) -> PathLabel:
    """경로 라벨을 간선 하나로 확장 (p'_su = p_sv ∪ {e_vu})

    Raises:
        UsageError: 간선 시작점이 라벨 끝 정점과 다르거나, 이미 방문한 정점으로 향하는 경우
    """
    if edge.source != label.end:
        raise UsageError(
            f"간선 {edge.id}의 시작점 {edge.source}가 경로 끝 정점 {label.end}와 다릅니다"
        )
    if (label.visited >> edge.target) & 1:
        raise UsageError(f"정점 {edge.target} 재방문: 단순 경로가 아닙니다")
    return PathLabel(
        end=edge.target,
        weight=add_component(label.weight, edge.colour, edge.weight, max_units),
        parent=label,
        edge=edge,
        visited=label.visited | (1 << edge.target),
    )

"""무작위 인스턴스 생성기

난수 생성기는 numpy의 PCG64 (64비트, 시드 고정 가능)를 사용합니다.
균등 실수는 생성 시점에 그래프 scale로 양자화하므로 solver는 정확하게 동작합니다.

추출 순서 (결정성 계약):
- complete_multigraph: u 오름차순, v 오름차순 (v != u), 색상 오름차순으로 가중치 1개씩
- random_sparse: 간선마다 (source, target[자기 루프면 재추출], colour, weight)
"""

from __future__ import annotations

import math
from decimal import Decimal

import numpy as np
from loguru import logger

from pareto_master.core.config import config
from pareto_master.core.errors import UsageError
from pareto_master.graph.model import ColouredGraph, GraphBuilder
from pareto_master.ingest.layers import Junction, JunctionLayer, Link

# 좌표/길이 고정소수점 자리수 (GIS 데이터 정밀도)
LAYER_DECIMALS = 6


def make_rng(seed: int) -> np.random.Generator:
    """시드 고정 PCG64 생성기"""
    if seed < 0:
        raise UsageError(f"seed는 음수일 수 없습니다: {seed}")
    return np.random.Generator(np.random.PCG64(seed))


def _resolve_range(
    weight_range: tuple[float, float] | None, scale: int
) -> tuple[float, float, int, int]:
    lo, hi = weight_range if weight_range is not None else config.weight_range
    if not 0 < lo < hi:
        raise UsageError(f"가중치 구간은 0 < lo < hi 이어야 합니다: ({lo}, {hi})")
    factor = 10**scale
    lo_units = max(1, int(np.ceil(lo * factor)))
    hi_units = int(np.floor(hi * factor))
    if hi_units < lo_units:
        raise UsageError(f"scale={scale}에서 가중치 구간이 비어 있습니다: ({lo}, {hi})")
    return lo, hi, lo_units, hi_units


def _quantize(values: np.ndarray, scale: int, lo_units: int, hi_units: int) -> list[int]:
    """실수 → 고정소수점 단위 (구간 [lo, hi] 와 최소 1단위 보장)"""
    units = np.rint(values * 10**scale).astype(np.int64)
    return np.clip(units, lo_units, hi_units).tolist()


def _colour_builder(k: int, n: int, scale: int) -> GraphBuilder:
    builder = GraphBuilder(n=n, scale=scale)
    for colour in range(k):
        builder.add_colour(f"c{colour}")
    return builder


def complete_multigraph(
    n: int,
    k: int,
    seed: int,
    weight_range: tuple[float, float] | None = None,
    scale: int | None = None,
) -> ColouredGraph:
    """완전 멀티그래프 C(n, k): 순서쌍마다 색상별 간선 1개, 총 k*n*(n-1)개

    Args:
        n: 정점 수 (>= 2)
        k: 색상 수 (>= 1)
        seed: PCG64 시드
        weight_range: 균등분포 구간 (기본: config.weight_range = [1, 100])
        scale: 고정소수점 scale (기본: config.DEFAULT_SCALE)
    """
    if n < 2 or k < 1:
        raise UsageError(f"n >= 2, k >= 1 이어야 합니다 (n={n}, k={k})")
    scale = config.DEFAULT_SCALE if scale is None else scale
    lo, hi, lo_units, hi_units = _resolve_range(weight_range, scale)

    rng = make_rng(seed)
    m = k * n * (n - 1)
    draws = lo + (hi - lo) * rng.random(m)
    weights = _quantize(draws, scale, lo_units, hi_units)

    builder = _colour_builder(k, n, scale)
    index = 0
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            for colour in range(k):
                builder.add_edge_units(u, v, colour, weights[index])
                index += 1
    graph = builder.build()
    logger.debug("complete_multigraph n={} k={} seed={} edges={}", n, k, seed, m)
    return graph


def random_sparse(
    n: int,
    k: int,
    m: int,
    seed: int,
    weight_range: tuple[float, float] | None = None,
    scale: int | None = None,
) -> ColouredGraph:
    """간선 m개의 무작위 희소 멀티그래프 (자기 루프 없음)"""
    if n < 1 or k < 1 or m < 0:
        raise UsageError(f"n >= 1, k >= 1, m >= 0 이어야 합니다 (n={n}, k={k}, m={m})")
    if m > 0 and n < 2:
        raise UsageError("자기 루프 없이 간선을 만들려면 n >= 2 이어야 합니다")
    scale = config.DEFAULT_SCALE if scale is None else scale
    lo, hi, lo_units, hi_units = _resolve_range(weight_range, scale)

    rng = make_rng(seed)
    builder = _colour_builder(k, n, scale)
    for _ in range(m):
        source = int(rng.integers(n))
        target = int(rng.integers(n))
        while target == source:
            target = int(rng.integers(n))
        colour = int(rng.integers(k))
        draw = lo + (hi - lo) * rng.random(1)
        builder.add_edge_units(
            source, target, colour, _quantize(draw, scale, lo_units, hi_units)[0]
        )
    return builder.build()


def random_layers(
    n_layers: int,
    junctions_per_layer: int,
    seed: int,
    extent: float = 10.0,
    link_radius: float = 0.4,
    max_degree: int = 3,
    mode_names: list[str] | None = None,
) -> list[JunctionLayer]:
    """운송수단 layer 합성 데이터

    junction은 [0, extent]^2 에 균등 분포하고, 각 junction은 같은 layer 안에서
    link_radius 이내의 가까운 junction 최대 max_degree개와 양방향 link로 연결됩니다.
    좌표와 길이는 소수 6자리로 양자화합니다.
    """
    if n_layers < 1 or junctions_per_layer < 1:
        raise UsageError("layer 수와 layer별 junction 수는 1 이상이어야 합니다")
    if extent <= 0 or link_radius <= 0 or max_degree < 0:
        raise UsageError("extent, link_radius는 양수, max_degree는 0 이상이어야 합니다")
    names = mode_names or [f"mode{i}" for i in range(n_layers)]
    if len(names) != n_layers:
        raise UsageError(f"mode 이름 수({len(names)}) != layer 수({n_layers})")

    rng = make_rng(seed)
    layers: list[JunctionLayer] = []
    for name in names:
        coords = np.round(rng.random((junctions_per_layer, 2)) * extent, LAYER_DECIMALS)
        junctions = [
            Junction(i, float(x), float(y)) for i, (x, y) in enumerate(coords.tolist())
        ]
        links = _near_links(coords, link_radius, max_degree)
        layers.append(JunctionLayer(mode=name, junctions=junctions, links=links))
    logger.info(
        "random_layers: {} layers x {} junctions (seed={})",
        n_layers,
        junctions_per_layer,
        seed,
    )
    return layers


def _near_links(coords: np.ndarray, radius: float, max_degree: int) -> list[Link]:
    """격자 해시로 반경 이내 최근접 이웃을 찾아 양방향 link 생성"""
    cells: dict[tuple[int, int], list[int]] = {}
    keys = np.floor(coords / radius).astype(np.int64)
    for index, (cx, cy) in enumerate(keys.tolist()):
        cells.setdefault((cx, cy), []).append(index)

    points = coords.tolist()
    seen: set[tuple[int, int]] = set()
    links: list[Link] = []
    quantum = Decimal(1).scaleb(-LAYER_DECIMALS)
    for index, (cx, cy) in enumerate(keys.tolist()):
        candidates: list[tuple[float, int]] = []
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                for other in cells.get((cx + dx, cy + dy), ()):
                    if other == index:
                        continue
                    dist = math.dist(points[other], points[index])
                    if dist <= radius:
                        candidates.append((dist, other))
        candidates.sort()
        for dist, other in candidates[:max_degree]:
            pair = (min(index, other), max(index, other))
            if pair in seen:
                continue
            seen.add(pair)
            length = max(Decimal(repr(dist)).quantize(quantum), quantum)
            links.append(Link(pair[0], pair[1], length, directed=False))
    return links


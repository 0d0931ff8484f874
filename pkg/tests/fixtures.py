"""테스트 공용 데이터

21 정점 예제 네트워크의 0 -> 20 Pareto 가중치 벡터 52개 (bus, metro, private, transfer).
"""

from __future__ import annotations

from pathlib import Path

from pareto_master.graph.model import ColouredGraph, GraphBuilder

DATA_DIR = Path(__file__).resolve().parent / "data"
CITY_PATH = DATA_DIR / "city21.wceg"

CITY_SOURCE = 0
CITY_TARGET = 20

CITY_PARETO: tuple[tuple[int, int, int, int], ...] = (
    (25, 4, 21, 5),
    (0, 30, 21, 4),
    (32, 9, 5, 9),
    (13, 11, 21, 8),
    (24, 0, 36, 10),
    (11, 26, 21, 5),
    (21, 26, 5, 7),
    (50, 19, 0, 4),
    (41, 4, 2, 7),
    (8, 45, 5, 9),
    (3, 4, 43, 3),
    (13, 4, 36, 11),
    (10, 30, 14, 12),
    (25, 26, 2, 12),
    (26, 0, 34, 10),
    (3, 31, 7, 10),
    (16, 4, 41, 5),
    (47, 9, 0, 5),
    (31, 31, 0, 6),
    (14, 0, 43, 2),
    (23, 45, 0, 8),
    (52, 4, 0, 1),
    (24, 7, 21, 7),
    (25, 11, 12, 10),
    (19, 9, 7, 12),
    (32, 22, 5, 6),
    (16, 31, 5, 7),
    (29, 27, 2, 8),
    (36, 0, 21, 4),
    (15, 4, 34, 11),
    (14, 27, 7, 9),
    (12, 23, 21, 7),
    (63, 0, 0, 0),
    (39, 23, 0, 3),
    (24, 23, 5, 7),
    (36, 26, 0, 6),
    (12, 30, 12, 6),
    (10, 26, 7, 13),
    (18, 31, 2, 9),
    (27, 0, 41, 4),
    (26, 4, 7, 11),
    (29, 0, 38, 6),
    (52, 0, 2, 6),
    (22, 30, 5, 6),
    (34, 9, 2, 8),
    (48, 0, 5, 4),
    (37, 4, 5, 5),
    (37, 30, 0, 2),
    (36, 7, 12, 9),
    (18, 4, 38, 7),
    (27, 27, 5, 6),
    (37, 0, 7, 10),
)

# 단위 비용 모델의 최적 경로 (총비용 47)
UNIT_COST_OPTIMUM = (19, 9, 7, 12)
UNIT_COST_OPTIMUM_VERTICES = [0, 3, 1, 9, 10, 14, 15, 17, 16, 18, 19, 20]


def build_city() -> ColouredGraph:
    """tests/data/city21.wceg 와 같은 그래프를 GraphBuilder로 구성"""
    builder = GraphBuilder(n=21, scale=0)
    bus = builder.add_colour("bus")
    metro = builder.add_colour("metro")
    private = builder.add_colour("private")
    transfer = builder.add_colour("transfer")

    for u, v, w in [
        (0, 1, 15), (1, 4, 10), (1, 9, 16), (4, 6, 12), (6, 11, 12), (9, 13, 7),
        (9, 11, 8), (11, 16, 10), (11, 18, 15), (13, 16, 13), (16, 18, 3), (18, 20, 11),
    ]:  # fmt: skip
        builder.add_edge(u, v, bus, w)
    for u, v, w in [(2, 10, 22), (7, 12, 7), (10, 14, 5), (12, 19, 19), (14, 12, 5), (19, 20, 4)]:
        builder.add_edge(u, v, metro, w)
    for u, v, w in [(0, 3, 5), (3, 5, 7), (5, 8, 9), (8, 15, 20), (15, 17, 2)]:
        builder.add_edge(u, v, private, w)
    for u, v, w in [
        (1, 3, 4), (1, 2, 3), (2, 3, 4), (4, 5, 4), (9, 10, 2), (6, 8, 4), (6, 7, 2),
        (7, 8, 4), (13, 14, 2), (13, 15, 4), (14, 15, 3), (11, 12, 3), (16, 17, 2), (18, 19, 1),
    ]:  # fmt: skip
        builder.add_bidirectional(u, v, transfer, w)
    return builder.build()

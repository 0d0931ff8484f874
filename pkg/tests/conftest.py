from __future__ import annotations

import pytest
from rich.console import Console

from pareto_master.algorithms.solver import ParetoResult, solve
from pareto_master.graph.model import ColouredGraph
from pareto_master.repository.graph_io import read_graph
from tests.fixtures import CITY_PATH, CITY_SOURCE


@pytest.fixture(scope="session")
def city() -> ColouredGraph:
    return read_graph(CITY_PATH)


@pytest.fixture(scope="session")
def city_result(city: ColouredGraph) -> ParetoResult:
    return solve(city, CITY_SOURCE)


@pytest.fixture
def console() -> Console:
    # 표 출력을 문자열로 확인하기 위한 기록용 콘솔
    return Console(record=True, width=120)


@pytest.fixture
def err_console() -> Console:
    return Console(record=True, width=120)

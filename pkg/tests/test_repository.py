"""파일 형식 (wceg v1, layer v1, 결과/bench 출력) 테스트"""

import json
from decimal import Decimal

import pytest

from pareto_master.algorithms.solver import solve
from pareto_master.core.errors import UsageError
from pareto_master.experiments.analysis import ExperimentRecord
from pareto_master.ingest.layers import Junction, JunctionLayer, Link
from pareto_master.repository.graph_io import dumps_graph, loads_graph, read_graph, write_graph
from pareto_master.repository.layer_io import dumps_layer, loads_layer, read_layer, write_layer
from pareto_master.repository.result_io import (
    format_bench_csv,
    format_plot_data,
    format_result_csv,
    format_result_json,
    format_result_text,
    rows_from_labels,
    rows_from_result,
)
from tests.fixtures import CITY_PATH, CITY_PARETO

SMALL = """wceg v1 n=3 k=2 scale=3
colour 0 bus
colour 1 metro
edge 0 1 0 1.5
edge 1 2 1 2
"""


class TestGraphText:
    def test_parse(self):
        graph = loads_graph(SMALL)
        assert (graph.n, graph.k, graph.scale) == (3, 2, 3)
        assert [e.weight for e in graph.edges] == [1500, 2000]

    def test_canonical_dump(self):
        assert dumps_graph(loads_graph(SMALL)) == SMALL.replace("1.5\n", "1.500\n").replace(
            " 2\n", " 2.000\n"
        )

    def test_city_file_round_trip(self, city):
        body = [line for line in CITY_PATH.read_text().splitlines() if not line.startswith("#")]
        assert dumps_graph(city).splitlines() == body

    def test_comments_and_blank_lines(self):
        graph = loads_graph("# 예제\n\n" + SMALL + "\n# 끝\n")
        assert graph.edge_count == 2

    @pytest.mark.parametrize(
        ("text", "line"),
        [
            ("wceg v2 n=1 k=1 scale=0\ncolour 0 a\n", 1),
            ("graph n=1\n", 1),
            ("wceg v1 n=2 k=1 scale=0\ncolour 0 a\nedge 0 5 0 1\n", 3),
            ("wceg v1 n=2 k=1 scale=0\ncolour 0 a\nedge 0 1 3 1\n", 3),
            ("wceg v1 n=2 k=1 scale=0\ncolour 0 a\nedge 0 1 0 0.5\n", 3),
            ("wceg v1 n=2 k=1 scale=0\ncolour 0 a\nedge 0 1 0 -1\n", 3),
            ("wceg v1 n=2 k=1 scale=0\ncolour 0 a\nedge 0 x 0 1\n", 3),
            ("wceg v1 n=2 k=2 scale=0\ncolour 0 a\nedge 0 1 0 1\n", 3),
            ("wceg v1 n=2 k=1 scale=0\ncolour 1 a\n", 2),
            ("wceg v1 n=2 k=1 scale=0\ncolour 0 a\nvertex 3\n", 3),
        ],
    )
    def test_errors_carry_line(self, text, line):
        with pytest.raises(UsageError) as info:
            loads_graph(text, source="g.wceg")
        assert info.value.line == line
        assert str(info.value).startswith(f"g.wceg:{line}:")

    def test_missing_colours(self):
        with pytest.raises(UsageError):
            loads_graph("wceg v1 n=2 k=2 scale=0\ncolour 0 a\n")

    def test_empty(self):
        with pytest.raises(UsageError):
            loads_graph("# nothing\n")

    def test_write_and_read(self, tmp_path, city):
        path = write_graph(city, tmp_path / "out" / "g.wceg")
        assert read_graph(path).edges == city.edges

    def test_missing_file(self, tmp_path):
        with pytest.raises(UsageError):
            read_graph(tmp_path / "none.wceg")


class TestGraphJson:
    def test_json_round_trip(self, city, tmp_path):
        path = write_graph(city, tmp_path / "g.json")
        document = json.loads(path.read_text())
        assert document["format"] == "wceg"
        assert document["edges"][0] == {"from": 0, "to": 1, "colour": 0, "weight": "15"}
        again = read_graph(path)
        assert again.edges == city.edges
        assert again.colour_names == city.colour_names

    def test_json_validation(self):
        text = json.dumps(
            {"n": 2, "k": 1, "scale": 0, "colours": [{"id": 0, "name": "a"}],
             "edges": [{"from": 0, "to": 1, "colour": 0, "weight": -2}]}
        )  # fmt: skip
        with pytest.raises(UsageError):
            loads_graph(text)

    def test_json_colour_count(self):
        text = json.dumps(
            {"n": 1, "k": 2, "scale": 0, "colours": [{"id": 0, "name": "a"}], "edges": []}
        )
        with pytest.raises(UsageError):
            loads_graph(text)


class TestLayerFormat:
    def _layer(self):
        return JunctionLayer(
            "bus",
            [Junction(1, 2.25, 48.5), Junction(7, 2.5, 48.75)],
            [Link(1, 7, Decimal("0.353553"), directed=False), Link(7, 1, Decimal("0.4"), True)],
        )

    def test_round_trip(self, tmp_path):
        layer = self._layer()
        path = write_layer(layer, tmp_path / "bus.layer")
        again = read_layer(path)
        assert again.mode == "bus"
        assert again.junctions == layer.junctions
        assert again.links == layer.links

    def test_dump(self):
        assert dumps_layer(self._layer()).splitlines() == [
            "layer v1 mode=bus",
            "junction 1 2.25 48.5",
            "junction 7 2.5 48.75",
            "link 1 7 0.353553 0",
            "link 7 1 0.4 1",
        ]

    @pytest.mark.parametrize(
        "body",
        [
            "junction 1 0 0\nlink 1 2 1.0 0\n",
            "junction 1 0 0\njunction 2 1 1\nlink 1 2 0 0\n",
            "junction 1 0 0\njunction 2 1 1\nlink 1 2 1 2\n",
            "junction 1 0 0\njunction 1 1 1\n",
            "junction a 0 0\n",
            "junction 1 0 0\njunction 2 1 1\nlink 1 2 nan 0\n",
            "stop 1 0 0\n",
        ],
    )
    def test_errors(self, body):
        with pytest.raises(UsageError):
            loads_layer("layer v1 mode=bus\n" + body)

    def test_bad_header(self):
        with pytest.raises(UsageError):
            loads_layer("layer v3 mode=bus\n")


class TestResultFormat:
    def test_text_rows(self, city, city_result):
        rows = rows_from_result(city_result, [20])
        text = format_result_text(city, rows, city_result.stats, timing=False)
        lines = text.splitlines()
        assert len(lines) == 53
        assert lines[0].startswith("pareto 20 0 30 21 4 ")
        assert lines[-1].startswith("stats processed=")
        assert lines[-1].endswith(" ms=0")
        vectors = [tuple(int(x) for x in line.split()[2:6]) for line in lines[:-1]]
        assert vectors == sorted(CITY_PARETO)

    def test_text_path_ids(self, city, city_result):
        rows = rows_from_result(city_result, [20])
        row = next(r for r in rows if r.weight == (19, 9, 7, 12))
        line = format_result_text(city, [row])
        assert line == "pareto 20 19 9 7 12 18 24 2 31 14 43 22 48 10 49 17\n"

    def test_empty_path_row(self, city, city_result):
        rows = rows_from_labels(0, city_result.at(0))
        assert format_result_text(city, rows) == "pareto 0 0 0 0 0\n"

    def test_csv(self, city, city_result):
        csv_text = format_result_csv(city, rows_from_result(city_result, [20]))
        lines = csv_text.splitlines()
        assert lines[0] == "dest,bus,metro,private,transfer,path"
        assert len(lines) == 53

    def test_json_mirrors_text(self, city, city_result):
        rows = rows_from_result(city_result, [20])
        document = json.loads(format_result_json(city, rows, city_result.stats, timing=False))
        assert document["colours"] == ["bus", "metro", "private", "transfer"]
        assert len(document["pareto"]) == 52
        assert document["pareto"][0]["weights"] == ["0", "30", "21", "4"]
        assert document["stats"]["ms"] == 0
        assert document["stats"]["processed"] == city_result.stats.processed

    def test_scaled_weights(self):
        graph = loads_graph(SMALL)
        result = solve(graph, 0)
        assert format_result_text(graph, rows_from_result(result, [2])) == (
            "pareto 2 1.500 2.000 0 1\n"
        )


def _records():
    return [
        ExperimentRecord(20, 2, 11, 0, 3.25, 6, 140, 12.6, rep=0),
        ExperimentRecord(20, 2, 12, 0, 4.75, 8, 160, 13.1, rep=1),
        ExperimentRecord(40, 2, 13, 0, 6.5, 10, 400, 40.0, rep=0),
        ExperimentRecord(20, 3, 14, 0, 9.0, 12, 300, 20.0, rep=0),
    ]


def test_bench_csv():
    lines = format_bench_csv(_records()).splitlines()
    assert lines[0] == "n,k,seed,mean,max,processed,ms"
    assert lines[1] == "20,2,11,3.250000,6,140,13"
    assert format_bench_csv(_records(), timing=False).splitlines()[1].endswith(",0")


def test_plot_data():
    assert format_plot_data(_records()) == (
        "# k=2\n20 4.000000\n40 6.500000\n\n\n# k=3\n20 9.000000\n"
    )

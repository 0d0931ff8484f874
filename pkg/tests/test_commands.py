"""CLI 서브커맨드 테스트 (run 호출 + 기록용 콘솔)"""

from __future__ import annotations

import json
from pathlib import Path

import pytest
from rich.console import Console

from pareto_master.cli.commands import get_command_names
from pareto_master.experiments.generator import random_layers
from pareto_master.main import run
from pareto_master.repository.graph_io import read_graph
from pareto_master.repository.layer_io import write_layer
from tests.fixtures import CITY_PATH, CITY_PARETO

CITY = str(CITY_PATH)


def _csv_vectors(text: str) -> set[tuple[str, ...]]:
    return {tuple(line.split(",")[1:5]) for line in text.splitlines()[1:]}


def _run(argv: list[str], console: Console, err_console: Console) -> tuple[int, str, str]:
    code = run(argv, console=console, err_console=err_console)
    return code, console.export_text(), err_console.export_text()


def test_registered_commands():
    assert get_command_names() == [
        "assemble",
        "bench",
        "generate",
        "oracle",
        "sensitivity",
        "solve",
        "stats",
    ]


class TestSolve:
    def test_full_pareto_set_csv(self, console, err_console):
        """0 -> 20 CSV는 데이터 52행"""
        code, out, _ = _run(
            ["solve", CITY, "--source", "0", "--target", "20", "--format", "csv"],
            console,
            err_console,
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "dest,bus,metro,private,transfer,path"
        assert len(lines) == 53
        assert {tuple(int(x) for x in line.split(",")[1:5]) for line in lines[1:]} == set(CITY_PARETO)

    def test_text_with_stats(self, console, err_console):
        code, out, _ = _run(
            ["solve", CITY, "--source", "0", "--target", "20", "--no-timing"],
            console,
            err_console,
        )
        assert code == 0
        lines = out.splitlines()
        assert sum(line.startswith("pareto 20 ") for line in lines) == 52
        assert lines[-1].startswith("stats processed=")
        assert lines[-1].endswith("ms=0")

    def test_json(self, console, err_console):
        code, out, _ = _run(
            ["solve", CITY, "--source", "0", "--target", "20", "--format", "json"],
            console,
            err_console,
        )
        assert code == 0
        document = json.loads(out)
        assert len(document["pareto"]) == 52
        assert set(document["stats"]) == {"processed", "relaxations", "evictions", "peak_queue", "ms"}

    def test_all_vertices(self, console, err_console):
        code, out, _ = _run(["solve", CITY, "--source", "0", "--no-timing"], console, err_console)
        assert code == 0
        dests = {int(line.split()[1]) for line in out.splitlines() if line.startswith("pareto")}
        assert dests == set(range(21))

    def test_out_file(self, tmp_path, console, err_console):
        out_path = tmp_path / "result.txt"
        argv = ["solve", CITY, "--source", "0", "--target", "20", "--out", str(out_path)]
        code, out, _ = _run(argv, console, err_console)
        assert code == 0
        assert out == ""
        assert out_path.read_text().count("pareto 20 ") == 52

    def test_no_path(self, console, err_console):
        """도달 불가 목적지는 종료 코드 1"""
        code, _, err = _run(
            ["solve", CITY, "--source", "20", "--target", "0"], console, err_console
        )
        assert code == 1
        assert "오류" in err

    def test_augment_transfers(self, console, err_console):
        code, out, _ = _run(
            ["solve", CITY, "--source", "0", "--target", "20", "--augment", "transfers",
             "--format", "csv"],
            console,
            err_console,
        )  # fmt: skip
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "dest,bus,metro,private,transfer,transfers,path"
        assert all(line.startswith("20,") for line in lines[1:])

    @pytest.mark.parametrize("mode", ["hops", "transfers"])
    def test_augment_reports_input_edge_ids(self, mode, city, console, err_console):
        """경로 열은 입력 그래프의 간선 id이고, 색상별 합이 앞 k개 성분과 같음"""
        code, out, _ = _run(
            ["solve", CITY, "--source", "0", "--target", "20", "--augment", mode,
             "--format", "csv"],
            console,
            err_console,
        )  # fmt: skip
        assert code == 0
        for line in out.splitlines()[1:]:
            fields = line.split(",")
            path = [int(edge_id) for edge_id in fields[-1].split()]
            assert all(0 <= edge_id < city.edge_count for edge_id in path)
            edges = [city.edge(edge_id) for edge_id in path]
            assert edges[0].source == 0 and edges[-1].target == 20
            assert all(a.target == b.source for a, b in zip(edges, edges[1:]))
            assert tuple(int(x) for x in fields[1:5]) == city.path_weight(edges)
            if mode == "hops":
                assert int(fields[5]) == len(path)

    def test_label_ceiling(self, console, err_console):
        code, _, err = _run(
            ["solve", CITY, "--source", "0", "--max-labels", "10"], console, err_console
        )
        assert code == 3
        assert "10" in err

    def test_bad_source(self, console, err_console):
        code, _, _ = _run(["solve", CITY, "--source", "99"], console, err_console)
        assert code == 2

    def test_missing_file(self, tmp_path, console, err_console):
        code, _, err = _run(
            ["solve", str(tmp_path / "none.wceg"), "--source", "0"], console, err_console
        )
        assert code == 2
        assert "none.wceg" in err


class TestUsage:
    def test_unknown_command(self, capsys, console, err_console):
        code, _, _ = _run(["teleport"], console, err_console)
        assert code == 2
        assert "usage" in capsys.readouterr().err

    def test_unknown_flag(self, capsys, console, err_console):
        code, _, _ = _run(["solve", CITY, "--source", "0", "--fast"], console, err_console)
        assert code == 2
        assert "usage" in capsys.readouterr().err

    def test_missing_required(self, console, err_console):
        code, _, _ = _run(["oracle", CITY, "--source", "0"], console, err_console)
        assert code == 2


class TestOracle:
    def test_same_vertex(self, console, err_console):
        """source = target 이면 빈 경로 한 행"""
        code, out, _ = _run(
            ["oracle", CITY, "--source", "0", "--target", "0"], console, err_console
        )
        assert code == 0
        assert out == "pareto 0 0 0 0 0\n"

    def test_matches_solve(self, console, err_console):
        argv = ["--source", "0", "--target", "20", "--format", "csv"]
        code, oracle_out, _ = _run(["oracle", CITY, *argv], console, err_console)
        assert code == 0
        solve_console = Console(record=True, width=120)
        _, solve_out, _ = _run(["solve", CITY, *argv], solve_console, err_console)
        assert _csv_vectors(oracle_out) == _csv_vectors(solve_out)

    def test_ceiling(self, console, err_console):
        code, _, _ = _run(
            ["oracle", CITY, "--source", "0", "--target", "20", "--ceiling", "50"],
            console,
            err_console,
        )
        assert code == 3


class TestGenerate:
    def test_complete_to_file(self, tmp_path, console, err_console):
        path = tmp_path / "c.wceg"
        argv = ["generate", "complete", "--n", "5", "--k", "2", "--seed", "3", "--out", str(path)]
        code, _, _ = _run(argv, console, err_console)
        assert code == 0
        graph = read_graph(path)
        assert (graph.n, graph.k, graph.edge_count) == (5, 2, 40)

    def test_sparse_stdout_deterministic(self, console, err_console):
        argv = ["generate", "sparse", "--n", "6", "--k", "2", "--m", "9", "--seed", "1"]
        _, first, _ = _run(argv, console, err_console)
        _, second, _ = _run(argv, Console(record=True, width=120), err_console)
        assert first == second
        assert first.startswith("wceg v1 n=6 k=2 scale=3\n")

    def test_sparse_needs_m(self, console, err_console):
        argv = ["generate", "sparse", "--n", "6", "--k", "2", "--seed", "1"]
        assert _run(argv, console, err_console)[0] == 2

    def test_layers(self, tmp_path, console, err_console):
        argv = ["generate", "layers", "--n", "30", "--k", "2", "--seed", "1", "--out", str(tmp_path)]
        code, _, _ = _run(argv, console, err_console)
        assert code == 0
        assert sorted(p.name for p in tmp_path.iterdir()) == ["layer0.layer", "layer1.layer"]


class TestBench:
    def test_csv_identical_runs(self, tmp_path, console, err_console):
        """같은 인자로 두 번 실행하면 CSV가 byte 단위로 같음"""
        paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
        for path in paths:
            argv = ["bench", "--k", "2", "--n-list", "5,6,7", "--reps", "2", "--seed", "7",
                    "--csv", str(path), "--no-timing"]  # fmt: skip
            assert _run(argv, Console(record=True, width=120), err_console)[0] == 0
        assert paths[0].read_bytes() == paths[1].read_bytes()
        lines = paths[0].read_text().splitlines()
        assert lines[0] == "n,k,seed,mean,max,processed,ms"
        assert len(lines) == 7

    def test_summary_and_plot(self, tmp_path, console, err_console):
        plot = tmp_path / "fig.dat"
        argv = ["bench", "--k", "1,2", "--n-list", "4,5,6", "--reps", "1", "--seed", "1",
                "--csv", str(tmp_path / "r.csv"), "--plot", str(plot)]  # fmt: skip
        code, out, _ = _run(argv, console, err_console)
        assert code == 0
        assert "실험 요약" in out
        assert "k=2: |M_sv| ~ n^" in out
        assert plot.read_text().startswith("# k=1\n4 ")

    def test_csv_to_stdout(self, console, err_console):
        argv = ["bench", "--n-list", "4,5", "--seed", "2", "--no-timing"]
        code, out, err = _run(argv, console, err_console)
        assert code == 0
        assert out.splitlines()[0] == "n,k,seed,mean,max,processed,ms"
        assert "지수 적합 생략" in err


class TestSensitivity:
    def test_metro_sweep(self, console, err_console):
        argv = ["sensitivity", CITY, "--source", "0", "--target", "20",
                "--sweep-colour", "metro", "--factors", "1,1.2,1.25"]  # fmt: skip
        code, out, _ = _run(argv, console, err_console)
        assert code == 0
        assert "(19, 9, 7, 12)" in out
        assert "(26, 4, 7, 11)" in out
        assert "6/5 (1.2000) *" in out
        assert "안정 구간: [9/11 (0.8182), 6/5 (1.2000)]" in out

    def test_unknown_colour(self, console, err_console):
        argv = ["sensitivity", CITY, "--source", "0", "--target", "20", "--sweep-colour", "tram"]
        assert _run(argv, console, err_console)[0] == 2

    def test_bad_factor(self, console, err_console):
        argv = ["sensitivity", CITY, "--source", "0", "--target", "20",
                "--sweep-colour", "bus", "--factors", "1,-2"]  # fmt: skip
        assert _run(argv, console, err_console)[0] == 2


def _write_layers(tmp_path: Path) -> str:
    paths = []
    for index, layer in enumerate(random_layers(2, 60, seed=5, extent=3.0)):
        paths.append(str(write_layer(layer, tmp_path / f"l{index}.layer")))
    return ",".join(paths)


class TestAssembleAndStats:
    def test_assemble_to_file(self, tmp_path, console, err_console):
        layers = _write_layers(tmp_path)
        out_path = tmp_path / "g.wceg"
        argv = ["assemble", "--layers", layers, "--cluster-distance", "0.1", "--out", str(out_path)]
        code, out, _ = _run(argv, console, err_console)
        assert code == 0
        graph = read_graph(out_path)
        assert graph.colour_names == ("mode0", "mode1")
        assert "정점" in out

    def test_assemble_report(self, tmp_path, console, err_console):
        layers = _write_layers(tmp_path)
        argv = ["assemble", "--layers", layers, "--cluster-distance", "0.1",
                "--out", str(tmp_path / "g.wceg"), "--source", "mode0:0", "--no-timing"]  # fmt: skip
        code, out, _ = _run(argv, console, err_console)
        assert code == 0
        assert "조립 보고" in out
        assert "최대 경로 수" in out

    def test_assemble_bad_source(self, tmp_path, console, err_console):
        layers = _write_layers(tmp_path)
        argv = ["assemble", "--layers", layers, "--cluster-distance", "0.1",
                "--out", str(tmp_path / "g.wceg"), "--source", "mode0"]  # fmt: skip
        assert _run(argv, console, err_console)[0] == 2

    def test_stats(self, tmp_path, console, err_console):
        code, out, _ = _run(["stats", "--layers", _write_layers(tmp_path)], console, err_console)
        assert code == 0
        assert "mode0" in out and "mode1" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", CITY, "--source", "0", "--no-timing"],
        ["oracle", CITY, "--source", "0", "--target", "19", "--format", "json"],
        ["sensitivity", CITY, "--source", "0", "--target", "20", "--sweep-colour", "bus"],
    ],
)
def test_deterministic_output(argv, err_console):
    outputs = []
    for _ in range(2):
        console = Console(record=True, width=120)
        run(argv, console=console, err_console=err_console)
        outputs.append(console.export_text())
    assert outputs[0] == outputs[1]

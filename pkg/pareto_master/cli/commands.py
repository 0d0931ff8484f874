"""서브커맨드 처리

명령어는 `@command(name, description)` 데코레이터로 등록되며,
CommandHandler.handle(name, args)가 종료 코드를 반환합니다.

기계가 읽는 출력(wceg, 결과 행, CSV, JSON)은 하이라이트 없이 그대로 쓰고,
사람이 읽는 보고서는 rich Table로 출력합니다. stdout이 기계 출력으로 쓰이는 경우
보고서는 오류 스트림 콘솔로 보냅니다.
"""

from __future__ import annotations

import argparse
import time
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from pathlib import Path
from typing import Callable

from loguru import logger
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from pareto_master.algorithms.oracle import enumerate_simple_paths, pareto_filter
from pareto_master.algorithms.solver import ParetoResult, SolveOptions, solve
from pareto_master.core.config import config
from pareto_master.core.errors import NoPathError, ResourceCeilingError, UsageError
from pareto_master.experiments.analysis import (
    CostModel,
    ExperimentRecord,
    assembly_report,
    crossover_threshold,
    evaluate_cost,
    fit_power_law,
    layer_statistics,
    run_experiment,
    stability_range,
    summarize,
)
from pareto_master.experiments.generator import (
    complete_multigraph,
    random_layers,
    random_sparse,
)
from pareto_master.graph.augment import augment_with_count_colour
from pareto_master.graph.model import ColouredGraph
from pareto_master.ingest.clustering import assemble, cluster_junctions
from pareto_master.repository.graph_io import dumps_graph, read_graph, write_graph
from pareto_master.repository.layer_io import read_layer, write_layer
from pareto_master.repository.result_io import (
    ResultRow,
    format_bench_csv,
    format_result_csv,
    format_result_json,
    format_result_text,
    format_weight,
    rows_from_labels,
    rows_from_paths,
    write_bench_csv,
    write_plot_data,
)

ASSEMBLY_COLUMNS = ("군집 거리", "정점", "간선", "실행 시간(분)", "평균 경로 수", "최대 경로 수")

# 모듈 레벨 명령어 레지스트리: {name: (handler, description)}
_commands: dict[str, tuple[Callable, str]] = {}


def get_command_names() -> list[str]:
    """등록된 명령어 목록 반환"""
    return sorted(_commands.keys())


def get_command_description(name: str) -> str:
    return _commands[name][1]


def command(name: str, description: str = ""):
    """명령어 등록 데코레이터"""

    def decorator(func: Callable):
        _commands[name] = (func, description)
        return func

    return decorator


def parse_int_list(text: str) -> list[int]:
    """`20,40,80` 형식 정수 목록"""
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise UsageError(f"정수 목록이 아닙니다: {text!r}") from None
    if not values:
        raise UsageError(f"빈 목록: {text!r}")
    return values


def parse_factor(text: str) -> Fraction:
    """십진 배율 문자열 → 정확한 유리수"""
    try:
        value = Fraction(Decimal(text.strip()))
    except (InvalidOperation, ValueError):
        raise UsageError(f"배율이 십진수가 아닙니다: {text!r}") from None
    if value <= 0:
        raise UsageError(f"배율은 양수여야 합니다: {text}")
    return value


def format_factor(value: Fraction) -> str:
    """정확한 유리수와 소수 근사 (`6/5 (1.2000)`)"""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value} ({float(value):.4f})"


class CommandHandler:
    """서브커맨드를 처리하는 클래스"""

    def __init__(self, console: Console, err_console: Console | None = None):
        self.console = console
        self.err_console = err_console or Console(stderr=True)

    def handle(self, name: str, args: argparse.Namespace) -> int:
        """명령어 실행 후 종료 코드 반환

        Raises:
            ParetoError: 각 명령어의 오류 (main에서 종료 코드로 변환)
        """
        if name not in _commands:
            raise UsageError(f"알 수 없는 명령어: {name}")
        handler, _ = _commands[name]
        logger.info("명령어 실행: {} {}", name, vars(args))
        return handler(self, args)

    # ---- 출력 도우미 ----

    def _emit(self, text: str, out: Path | None = None) -> None:
        """기계 출력: 파일 또는 stdout (하이라이트/줄바꿈 없음)"""
        if out is not None:
            out.parent.mkdir(parents=True, exist_ok=True)
            out.write_text(text, encoding="utf-8")
            return
        self.console.out(text, end="", highlight=False)

    def _report_console(self, stdout_taken: bool) -> Console:
        return self.err_console if stdout_taken else self.console

    def _emit_rows(
        self,
        graph: ColouredGraph,
        rows: list[ResultRow],
        fmt: str,
        result: ParetoResult | None,
        args: argparse.Namespace,
    ) -> None:
        stats = result.stats if result is not None else None
        timing = not args.no_timing
        if fmt == "csv":
            text = format_result_csv(graph, rows)
        elif fmt == "json":
            text = format_result_json(graph, rows, stats, timing)
        else:
            text = format_result_text(graph, rows, stats, timing)
        self._emit(text, args.out)

    @staticmethod
    def _solve_options(args: argparse.Namespace, target: int | None = None) -> SolveOptions:
        return SolveOptions(
            keep_ties=getattr(args, "keep_ties", False),
            target=target,
            max_labels=args.max_labels,
            time_budget=args.time_budget,
        )

    # ---- 명령어 ----

    @command("solve", "다중모드 Dijkstra로 Pareto 최적 경로 집합 계산")
    def _solve(self, args: argparse.Namespace) -> int:
        graph = read_graph(args.graph)
        if args.augment:
            augmented = augment_with_count_colour(graph, args.augment)
            work = augmented.graph
            origin = augmented.origin_of(_check_vertex(graph, args.source))
            destinations = (
                [_check_vertex(graph, args.target)]
                if args.target is not None
                else list(range(graph.n))
            )
            result = solve(work, origin, self._solve_options(args))
            # 경로는 입력 그래프의 간선 id로 보고
            rows = sorted(
                ResultRow(v, row.weight, augmented.original_path(row.path))
                for v in destinations
                for row in rows_from_labels(
                    v, result.at(augmented.terminal_of(v, args.source))
                )
            )
        else:
            work = graph
            result = solve(graph, args.source, self._solve_options(args, args.target))
            destinations = [args.target] if args.target is not None else list(range(graph.n))
            rows = [row for v in destinations for row in rows_from_labels(v, result.at(v))]

        if args.target is not None and not rows:
            raise NoPathError(f"{args.source}에서 {args.target}(으)로 가는 경로가 없습니다")
        self._emit_rows(work, rows, args.format, result, args)
        return 0

    @command("oracle", "단순 경로 전수 열거 후 Pareto 필터 (작은 그래프 검증용)")
    def _oracle(self, args: argparse.Namespace) -> int:
        graph = read_graph(args.graph)
        entries = enumerate_simple_paths(graph, args.source, args.target, ceiling=args.ceiling)
        kept = pareto_filter(entries, keep_ties=args.keep_ties)
        if not kept:
            raise NoPathError(f"{args.source}에서 {args.target}(으)로 가는 경로가 없습니다")
        self._emit_rows(graph, rows_from_paths(args.target, kept), args.format, None, args)
        return 0

    @command("generate", "무작위 그래프(complete|sparse) 또는 합성 layer 생성")
    def _generate(self, args: argparse.Namespace) -> int:
        weight_range = _weight_range(args)
        if args.kind == "layers":
            if args.out is None:
                raise UsageError("generate layers에는 --out <디렉터리>가 필요합니다")
            layers = random_layers(args.k, args.n, args.seed)
            for index, layer in enumerate(layers):
                write_layer(layer, args.out / f"layer{index}.layer")
            self.err_console.print(f"[green]layer {len(layers)}개 생성: {args.out}[/green]")
            return 0

        if args.kind == "complete":
            graph = complete_multigraph(args.n, args.k, args.seed, weight_range, args.scale)
        else:
            if args.m is None:
                raise UsageError("generate sparse에는 --m이 필요합니다")
            graph = random_sparse(args.n, args.k, args.m, args.seed, weight_range, args.scale)

        if args.out is not None:
            write_graph(graph, args.out)
        else:
            self._emit(dumps_graph(graph))
        return 0

    @command("bench", "완전 멀티그래프 실험과 성장 지수 적합")
    def _bench(self, args: argparse.Namespace) -> int:
        n_values = parse_int_list(args.n_list)
        k_values = parse_int_list(args.k)
        weight_range = _weight_range(args)
        records: list[ExperimentRecord] = []
        for k in k_values:
            records += run_experiment(
                n_values,
                k,
                args.reps,
                args.seed,
                weight_range=weight_range,
                workers=args.workers,
                max_labels=args.max_labels,
                time_budget=args.time_budget,
            )

        timing = not args.no_timing
        if args.csv is not None:
            write_bench_csv(records, args.csv, timing)
        else:
            self._emit(format_bench_csv(records, timing))
        if args.plot is not None:
            write_plot_data(records, args.plot)

        report = self._report_console(stdout_taken=args.csv is None)
        self._print_bench_summary(report, records, k_values)
        return 3 if any(record.truncated for record in records) else 0

    def _print_bench_summary(
        self, report: Console, records: list[ExperimentRecord], k_values: list[int]
    ) -> None:
        table = Table(title="실험 요약 (n별 평균 ± 표준편차)")
        table.add_column("k", justify="right")
        table.add_column("n", justify="right")
        table.add_column("reps", justify="right")
        table.add_column("|M_sv| 평균", justify="right", style="cyan")
        table.add_column("처리 라벨 수", justify="right", style="green")
        for k in k_values:
            for row in summarize([r for r in records if r.k == k]):
                table.add_row(
                    str(k),
                    str(row.n),
                    str(row.reps),
                    f"{row.mean_cardinality:.3f} ± {row.std_cardinality:.3f}",
                    f"{row.mean_processed:.1f} ± {row.std_processed:.1f}",
                )
        report.print(table)

        for k in k_values:
            subset = [r for r in records if r.k == k and not r.truncated]
            try:
                card = fit_power_law(subset, "mean_cardinality")
                work = fit_power_law(subset, "processed")
            except UsageError as e:
                report.print(f"[yellow]k={k}: 지수 적합 생략 ({e})[/yellow]")
                continue
            report.print(
                f"k={k}: |M_sv| ~ n^{card[0]:.3f} (r²={card[2]:.3f}), "
                f"processed ~ n^{work[0]:.3f} (r²={work[2]:.3f})"
            )

    @command("sensitivity", "비용 모델 평가와 색상 배율 임계점 분석")
    def _sensitivity(self, args: argparse.Namespace) -> int:
        graph = read_graph(args.graph)
        colour = graph.colour_id(args.sweep_colour)
        base = (
            CostModel(tuple(parse_factor(f) for f in args.base.split(",")))
            if args.base
            else CostModel.unit(graph.k)
        )
        if len(base.factors) != graph.k:
            raise UsageError(f"--base 배율 수({len(base.factors)}) != 색상 수({graph.k})")

        result = solve(graph, args.source, self._solve_options(args, args.target))
        pareto = result.at(args.target)
        if not pareto:
            raise NoPathError(f"{args.source}에서 {args.target}(으)로 가는 경로가 없습니다")

        factors = (
            [parse_factor(f) for f in args.factors.split(",")]
            if args.factors
            else [base.factors[colour]]
        )
        table = Table(title=f"비용 평가 ({args.sweep_colour} 배율 변화, |M|={len(pareto)})")
        table.add_column(f"{args.sweep_colour} 배율", justify="right")
        table.add_column("최적 경로 가중치", style="cyan")
        table.add_column("총비용", justify="right", style="green")
        for factor in factors:
            best, cost = evaluate_cost(pareto, base.with_factor(colour, factor))
            table.add_row(
                format_factor(factor), format_weight(graph, best.weight), format_factor(cost)
            )
        self.console.print(table)

        breakpoints = Table(title="임계 배율 (이 값을 지나면 최적 경로가 바뀜)")
        breakpoints.add_column("배율", justify="right")
        breakpoints.add_column("이후 최적 경로", style="cyan")
        # 기준 배율 위의 첫 임계점 (배율을 올릴 때의 전환점) 표시
        base_factor = base.factors[colour]
        marked = False
        for value, label in crossover_threshold(pareto, colour, base):
            marker = ""
            if value > base_factor and not marked:
                marker, marked = " *", True
            breakpoints.add_row(format_factor(value) + marker, format_weight(graph, label.weight))
        self.console.print(breakpoints)

        lower, upper, optimum = stability_range(pareto, colour, base)
        upper_text = format_factor(upper) if upper is not None else "∞"
        self.console.print(
            escape(
                f"기준 최적 {format_weight(graph, optimum.weight)}의 안정 구간: "
                f"[{format_factor(lower)}, {upper_text}]"
            )
        )
        return 0

    @command("assemble", "layer 군집화 후 다중모드 wceg 그래프 조립")
    def _assemble(self, args: argparse.Namespace) -> int:
        layers = [read_layer(path) for path in _split_paths(args.layers)]
        started = time.perf_counter()
        cluster_map = cluster_junctions(layers, args.cluster_distance)
        graph = assemble(layers, cluster_map, scale=args.scale)
        if args.out is not None:
            write_graph(graph, args.out)
        else:
            self._emit(dumps_graph(graph))

        report = self._report_console(stdout_taken=args.out is None)
        if args.source is None:
            report.print(
                f"[green]군집 {args.cluster_distance}: "
                f"정점 {graph.n}, 간선 {graph.edge_count}[/green]"
            )
            return 0

        layer_name, _, junction = args.source.partition(":")
        if not junction.isdigit():
            raise UsageError(f"--source는 <layer>:<junction> 형식이어야 합니다: {args.source}")
        source = cluster_map.vertex_of(layer_name, int(junction))
        try:
            result = solve(graph, source, self._solve_options(args))
            truncated = False
        except ResourceCeilingError as e:
            result, truncated = e.partial, True
        minutes = (time.perf_counter() - started) / 60.0
        row = assembly_report(args.cluster_distance, graph, result, minutes)

        table = Table(title=f"조립 보고 (source 정점 {source})")
        for column in ASSEMBLY_COLUMNS:
            table.add_column(column, justify="right")
        table.add_row(
            f"{row.cluster_distance:.3f}",
            str(row.vertices),
            str(row.edges),
            "0" if args.no_timing else f"{row.running_minutes:.2f}",
            f"{row.avg_paths:.2f}",
            str(row.max_paths),
        )
        report.print(table)
        if truncated:
            report.print("[yellow]리소스 상한 도달: 부분 결과입니다[/yellow]")
            return 3
        return 0

    @command("stats", "layer 특성 (junction/link 수, link 길이 통계)")
    def _stats(self, args: argparse.Namespace) -> int:
        table = Table(title="운송수단 layer 특성")
        table.add_column("mode", style="cyan")
        for column in ("junctions", "links", "max", "mean", "std"):
            table.add_column(column, justify="right")
        for path in _split_paths(args.layers):
            stats = layer_statistics(read_layer(path))
            table.add_row(
                stats.mode,
                str(stats.junctions),
                str(stats.links),
                f"{stats.max_length:.6f}",
                f"{stats.mean_length:.6f}",
                f"{stats.std_length:.6f}",
            )
        self.console.print(table)
        return 0


def _check_vertex(graph: ColouredGraph, vertex: int) -> int:
    if not 0 <= vertex < graph.n:
        raise UsageError(f"정점 {vertex}가 범위를 벗어났습니다 (n={graph.n})")
    return vertex


def _split_paths(text: str) -> list[Path]:
    paths = [Path(part) for part in text.split(",") if part.strip()]
    if not paths:
        raise UsageError("--layers에 파일이 없습니다")
    return paths


def _weight_range(args: argparse.Namespace) -> tuple[float, float] | None:
    if args.low is None and args.high is None:
        return None
    return (
        config.WEIGHT_LOW if args.low is None else args.low,
        config.WEIGHT_HIGH if args.high is None else args.high,
    )

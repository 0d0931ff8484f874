"""그래프 파일 저장소: wceg v1 텍스트 / JSON

텍스트 형식 (정규 형식, golden 테스트 기준):

    wceg v1 n=<n> k=<k> scale=<s>
    colour <id> <name>          (k줄, id 순)
    edge <from> <to> <colour> <weight-decimal>

빈 줄과 '#' 주석 줄은 무시합니다. 간선 id는 파일 내 edge 줄 순서입니다.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Literal

from pydantic import ValidationError

from pareto_master.core.errors import UsageError
from pareto_master.core.models import ColourEntry, EdgeEntry, GraphDocument
from pareto_master.graph.model import ColouredGraph, GraphBuilder
from pareto_master.graph.weights import format_units, to_decimal

GraphFormat = Literal["text", "json"]

_HEADER = re.compile(r"^wceg\s+v(\d+)\s+n=(\d+)\s+k=(\d+)\s+scale=(\d+)$")


def dumps_graph(graph: ColouredGraph, fmt: GraphFormat = "text") -> str:
    """그래프를 문자열로 직렬화"""
    if fmt == "json":
        return to_document(graph).model_dump_json(by_alias=True, indent=2) + "\n"
    if fmt != "text":
        raise UsageError(f"알 수 없는 그래프 형식: {fmt}")

    lines = [f"wceg v1 n={graph.n} k={graph.k} scale={graph.scale}"]
    lines += [f"colour {i} {name}" for i, name in enumerate(graph.colour_names)]
    lines += [
        f"edge {e.source} {e.target} {e.colour} {format_units(e.weight, graph.scale)}"
        for e in graph.edges
    ]
    return "\n".join(lines) + "\n"


def loads_graph(text: str, source: str | None = None) -> ColouredGraph:
    """문자열에서 그래프 읽기 ('{'로 시작하면 JSON)

    Raises:
        UsageError: 형식 오류 (source/줄 번호 포함)
    """
    if text.lstrip().startswith("{"):
        try:
            document = GraphDocument.model_validate_json(text)
        except ValidationError as e:
            raise UsageError(f"JSON 그래프 형식 오류: {e}", source=source) from e
        return from_document(document, source)
    return _parse_text(text, source)


def read_graph(path: Path | str) -> ColouredGraph:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"그래프 파일을 읽을 수 없습니다: {e}", source=str(path)) from e
    return loads_graph(text, source=str(path))


def write_graph(graph: ColouredGraph, path: Path | str, fmt: GraphFormat | None = None) -> Path:
    """그래프 파일 쓰기 (fmt가 없으면 확장자 .json 여부로 결정)"""
    path = Path(path)
    chosen: GraphFormat = fmt or ("json" if path.suffix.lower() == ".json" else "text")
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps_graph(graph, chosen), encoding="utf-8")
    return path


def to_document(graph: ColouredGraph) -> GraphDocument:
    return GraphDocument(
        n=graph.n,
        k=graph.k,
        scale=graph.scale,
        colours=[ColourEntry(id=i, name=name) for i, name in enumerate(graph.colour_names)],
        edges=[
            EdgeEntry(
                source=e.source,
                target=e.target,
                colour=e.colour,
                weight=to_decimal(e.weight, graph.scale),
            )
            for e in graph.edges
        ],
    )


def from_document(document: GraphDocument, source: str | None = None) -> ColouredGraph:
    if len(document.colours) != document.k:
        raise UsageError(
            f"colour 항목 수({len(document.colours)}) != k({document.k})", source=source
        )
    builder = GraphBuilder(n=document.n, scale=document.scale)
    for expected, colour in enumerate(document.colours):
        if colour.id != expected:
            raise UsageError(f"colour id는 0부터 순서대로여야 합니다: {colour.id}", source=source)
        builder.add_colour(colour.name)
    for index, edge in enumerate(document.edges):
        try:
            builder.add_edge(edge.source, edge.target, edge.colour, edge.weight)
        except UsageError as e:
            raise UsageError(f"edges[{index}]: {e}", source=source) from e
    try:
        return builder.build()
    except UsageError as e:
        raise UsageError(str(e), source=source) from e


def _parse_text(text: str, source: str | None) -> ColouredGraph:
    builder: GraphBuilder | None = None
    k = 0
    colours_seen = 0

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()

        if builder is None:
            match = _HEADER.match(" ".join(fields))
            if not match:
                raise UsageError(f"헤더 형식 오류: {line!r}", source=source, line=number)
            version, n, k, scale = (int(g) for g in match.groups())
            if version != 1:
                raise UsageError(f"지원하지 않는 버전: v{version}", source=source, line=number)
            builder = GraphBuilder(n=n, scale=scale)
            continue

        try:
            if fields[0] == "colour":
                if len(fields) != 3 or int(fields[1]) != colours_seen:
                    raise UsageError(f"colour 줄 형식 오류 (기대 id {colours_seen}): {line!r}")
                if colours_seen >= k:
                    raise UsageError(f"colour 줄이 k={k}개보다 많습니다")
                builder.add_colour(fields[2])
                colours_seen += 1
            elif fields[0] == "edge":
                if colours_seen != k:
                    raise UsageError(f"edge 줄 앞에 colour 줄 {k}개가 필요합니다")
                if len(fields) != 5:
                    raise UsageError(f"edge 줄 형식 오류: {line!r}")
                source_v, target_v, colour = (int(f) for f in fields[1:4])
                _check_edge(source_v, target_v, colour, builder.n, k)
                builder.add_edge(source_v, target_v, colour, fields[4])
            else:
                raise UsageError(f"알 수 없는 줄: {line!r}")
        except ValueError as e:
            # UsageError도 ValueError이므로 메시지만 다시 감쌉니다
            message = str(e) if isinstance(e, UsageError) else f"정수가 아닌 필드: {line!r}"
            raise UsageError(message, source=source, line=number) from e

    if builder is None:
        raise UsageError("빈 그래프 파일", source=source)
    if colours_seen != k:
        raise UsageError(f"colour 줄이 {colours_seen}개 (기대 {k})", source=source)
    return builder.build()


def _check_edge(source: int, target: int, colour: int, n: int, k: int) -> None:
    if not (0 <= source < n and 0 <= target < n):
        raise UsageError(f"간선 끝점이 범위를 벗어났습니다: {source}->{target} (n={n})")
    if not 0 <= colour < k:
        raise UsageError(f"색상이 범위를 벗어났습니다: {colour} (k={k})")

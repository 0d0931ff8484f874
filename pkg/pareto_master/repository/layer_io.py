"""layer 파일 저장소 (layer v1)

    layer v1 mode=<name>
    junction <id> <x> <y>
    link <from> <to> <length> <directed:0|1>
"""

from __future__ import annotations

import re
from decimal import Decimal, InvalidOperation
from pathlib import Path

from pareto_master.core.errors import UsageError
from pareto_master.ingest.layers import Junction, JunctionLayer, Link

_HEADER = re.compile(r"^layer\s+v(\d+)\s+mode=(\S+)$")


def dumps_layer(layer: JunctionLayer) -> str:
    lines = [f"layer v1 mode={layer.mode}"]
    lines += [f"junction {j.id} {j.x!r} {j.y!r}" for j in layer.junctions]
    lines += [
        f"link {link.source} {link.target} {link.length} {int(link.directed)}"
        for link in layer.links
    ]
    return "\n".join(lines) + "\n"


def loads_layer(text: str, source: str | None = None) -> JunctionLayer:
    mode: str | None = None
    junctions: list[Junction] = []
    links: list[Link] = []

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if mode is None:
            match = _HEADER.match(" ".join(fields))
            if not match:
                raise UsageError(f"헤더 형식 오류: {line!r}", source=source, line=number)
            if match.group(1) != "1":
                raise UsageError(
                    f"지원하지 않는 버전: v{match.group(1)}", source=source, line=number
                )
            mode = match.group(2)
            continue

        try:
            if fields[0] == "junction" and len(fields) == 4:
                junctions.append(Junction(int(fields[1]), float(fields[2]), float(fields[3])))
            elif fields[0] == "link" and len(fields) == 5:
                if fields[4] not in ("0", "1"):
                    raise UsageError(f"directed 플래그는 0 또는 1: {fields[4]}")
                length = Decimal(fields[3])
                if not length.is_finite():
                    raise UsageError(f"유한한 길이가 아닙니다: {fields[3]}")
                links.append(
                    Link(
                        int(fields[1]),
                        int(fields[2]),
                        length,
                        directed=fields[4] == "1",
                    )
                )
            else:
                raise UsageError(f"알 수 없는 줄: {line!r}")
        except UsageError as e:
            raise UsageError(str(e), source=source, line=number) from e
        except (ValueError, InvalidOperation) as e:
            raise UsageError(f"숫자 필드 오류: {line!r}", source=source, line=number) from e

    if mode is None:
        raise UsageError("빈 layer 파일", source=source)
    try:
        return JunctionLayer(mode, junctions, links)
    except UsageError as e:
        raise UsageError(str(e), source=source) from e


def read_layer(path: Path | str) -> JunctionLayer:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"layer 파일을 읽을 수 없습니다: {e}", source=str(path)) from e
    return loads_layer(text, source=str(path))


def write_layer(layer: JunctionLayer, path: Path | str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps_layer(layer), encoding="utf-8")
    return path

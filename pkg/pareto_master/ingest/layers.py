"""운송수단별 원시 네트워크 (junction + link)"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal

from pareto_master.core.errors import UsageError


@dataclass(frozen=True, slots=True)
class Junction:
    """평면 좌표(십진 도)를 갖는 교차점"""

    id: int
    x: float
    y: float


@dataclass(frozen=True, slots=True)
class Link:
    """교차점 사이 연결

    Attributes:
        source: 시작 junction id
        target: 끝 junction id
        length: 길이 (십진 도, > 0)
        directed: False면 양방향
    """

    source: int
    target: int
    length: Decimal
    directed: bool = False


@dataclass
class JunctionLayer:
    """한 운송수단의 네트워크"""

    mode: str
    junctions: list[Junction] = field(default_factory=list)
    links: list[Link] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.validate()

    def validate(self) -> None:
        """link 끝점 존재, 길이 양수, junction id 중복 없음"""
        if not self.mode:
            raise UsageError("layer mode 이름이 비어 있습니다")
        ids: set[int] = set()
        for junction in self.junctions:
            if junction.id in ids:
                raise UsageError(f"[{self.mode}] junction id 중복: {junction.id}")
            ids.add(junction.id)
        for link in self.links:
            if link.source not in ids or link.target not in ids:
                raise UsageError(
                    f"[{self.mode}] link {link.source}->{link.target}의 끝점이 존재하지 않습니다"
                )
            if link.length <= 0:
                raise UsageError(
                    f"[{self.mode}] link {link.source}->{link.target}의 길이는 양수여야 합니다"
                )

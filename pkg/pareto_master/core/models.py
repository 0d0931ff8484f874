"""데이터 모델 정의

파일 형식(JSON)의 스키마를 Pydantic 모델로 선언합니다.
텍스트 형식과 필드가 1:1로 대응합니다.
"""

from decimal import Decimal

from pydantic import BaseModel, Field


class ColourEntry(BaseModel):
    """색상 선언 (`colour <id> <name>`)"""

    id: int = Field(ge=0, description="0..k-1 범위의 dense 색상 id")
    name: str = Field(min_length=1, description="색상(운송수단) 이름")


class EdgeEntry(BaseModel):
    """간선 선언 (`edge <from> <to> <colour> <weight>`)"""

    source: int = Field(ge=0, alias="from")
    target: int = Field(ge=0, alias="to")
    colour: int = Field(ge=0)
    weight: Decimal = Field(gt=0, description="십진수 가중치")

    model_config = {"populate_by_name": True}


class GraphDocument(BaseModel):
    """wceg v1 그래프 문서의 JSON 표현"""

    format: str = Field(default="wceg", pattern="^wceg$")
    version: int = Field(default=1, ge=1, le=1)
    n: int = Field(ge=0)
    k: int = Field(ge=1)
    scale: int = Field(ge=0, le=18)
    colours: list[ColourEntry]
    edges: list[EdgeEntry]


class ParetoEntry(BaseModel):
    """결과 행 (`pareto <dest> <w_0> ... <w_k-1> <edge ids>`)"""

    dest: int
    weights: list[str] = Field(description="색상별 가중치 (십진 문자열)")
    path: list[int] = Field(default_factory=list, description="간선 id 순서열")


class StatsEntry(BaseModel):
    """통계 행 (`stats processed=.. relaxations=.. ...`)"""

    processed: int = Field(ge=0)
    relaxations: int = Field(ge=0)
    evictions: int = Field(ge=0)
    peak_queue: int = Field(ge=0)
    ms: int = Field(ge=0)


class ResultDocument(BaseModel):
    """solve/oracle 결과의 JSON 표현"""

    colours: list[str]
    pareto: list[ParetoEntry]
    stats: StatsEntry | None = None

"""핵심 모듈

공통으로 사용되는 설정, 로깅, 예외, 파일 스키마 모델을 제공합니다.
"""

from .config import Config, config
from .errors import (
    NoPathError,
    ParetoError,
    ResourceCeilingError,
    UsageError,
    WeightOverflowError,
)
from .log import setup_logging
from .models import ColourEntry, EdgeEntry, GraphDocument, ParetoEntry, ResultDocument, StatsEntry

__all__ = [
    # config
    "Config",
    "config",
    # errors
    "NoPathError",
    "ParetoError",
    "ResourceCeilingError",
    "UsageError",
    "WeightOverflowError",
    # log
    "setup_logging",
    # models
    "ColourEntry",
    "EdgeEntry",
    "GraphDocument",
    "ParetoEntry",
    "ResultDocument",
    "StatsEntry",
]

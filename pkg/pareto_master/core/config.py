"""설정 관리 모듈"""

import os
from pathlib import Path

from dotenv import load_dotenv

# .env 파일 로드
load_dotenv()


def _int_env(name: str, default: int) -> int:
    """정수형 환경 변수 읽기 (잘못된 값이면 기본값)"""
    raw = os.getenv(name, "")
    if not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        return default


class Config:
    """환경 변수 기반 설정"""

    def __init__(self) -> None:
        self.PROJECT_ROOT = Path(__file__).resolve().parent.parent.parent

        # 고정소수점 설정: 그래프 기본 scale (10^-s 단위) 과 표현 가능한 최대 단위 수
        self.DEFAULT_SCALE = _int_env("PARETO_SCALE", 3)
        self.MAX_UNITS = _int_env("PARETO_MAX_UNITS", 2**63 - 1)

        # 리소스 상한
        self.ORACLE_CEILING = _int_env("PARETO_ORACLE_CEILING", 10_000_000)
        self.MAX_LABELS = _int_env("PARETO_MAX_LABELS", 5_000_000)
        self.TIME_BUDGET = float(os.getenv("PARETO_TIME_BUDGET", "600"))

        # 벤치마크 설정
        self.BENCH_WORKERS = _int_env("PARETO_BENCH_WORKERS", 1)
        self.WEIGHT_LOW = float(os.getenv("PARETO_WEIGHT_LOW", "1"))
        self.WEIGHT_HIGH = float(os.getenv("PARETO_WEIGHT_HIGH", "100"))

        # 로그 설정
        self.LOG_DIR = Path(os.getenv("PARETO_LOG_DIR", "logs"))
        self.LOG_LEVEL = os.getenv("PARETO_LOG_LEVEL", "INFO")

    @property
    def weight_range(self) -> tuple[float, float]:
        """생성기 기본 가중치 구간"""
        return (self.WEIGHT_LOW, self.WEIGHT_HIGH)


config = Config()

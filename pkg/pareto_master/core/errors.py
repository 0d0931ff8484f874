"""예외 계층

CLI는 예외 종류별로 종료 코드를 결정합니다.
- UsageError, WeightOverflowError: 2
- ResourceCeilingError: 3
- NoPathError: 1
"""

from __future__ import annotations

from typing import Any


class ParetoError(Exception):
    """pareto-master 공통 예외"""

    exit_code = 2


class UsageError(ParetoError, ValueError):
    """잘못된 인자, 길이 불일치, 형식 오류"""

    exit_code = 2

    def __init__(
        self, message: str, *, source: str | None = None, line: int | None = None
    ) -> None:
        self.source = source
        self.line = line
        if source is not None and line is not None:
            message = f"{source}:{line}: {message}"
        elif source is not None:
            message = f"{source}: {message}"
        super().__init__(message)


class WeightOverflowError(ParetoError, ArithmeticError):
    """고정소수점 표현 범위 초과"""

    exit_code = 2


class ResourceCeilingError(ParetoError):
    """리소스 상한 초과로 인한 거부/중단

    Attributes:
        bound: 초과한 상한 값 (oracle 경로 수 상한, 라벨 수, 시간 예산 등)
        partial: 중단 시점까지의 부분 결과 (solver의 ParetoResult 등, 없으면 None)
    """

    exit_code = 3

    def __init__(self, message: str, *, bound: Any = None, partial: Any = None) -> None:
        super().__init__(message)
        self.bound = bound
        self.partial = partial


class NoPathError(ParetoError):
    """결과가 필요한 곳에서 경로가 없음"""

    exit_code = 1

"""가중치 벡터와 지배(dominance) 부분순서

가중치는 고정소수점 정수(10^-scale 단위)로 저장합니다.
WeightVector는 색상 id로 인덱싱되는 정수 튜플입니다.
"""

from __future__ import annotations

from decimal import Decimal, InvalidOperation
from enum import Enum

from pareto_master.core.config import config
from pareto_master.core.errors import UsageError, WeightOverflowError

WeightVector = tuple[int, ...]


class Dominance(Enum):
    """두 가중치 벡터의 비교 결과"""

    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def zero_vector(k: int) -> WeightVector:
    """길이 k의 영벡터 (덧셈 항등원)"""
    return (0,) * k


def _check_lengths(a: WeightVector, b: WeightVector) -> None:
    if len(a) != len(b):
        raise UsageError(f"가중치 벡터 길이 불일치: {len(a)} != {len(b)}")


def compare(a: WeightVector, b: WeightVector) -> Dominance:
    """성분별 부분순서 비교

    Returns:
        LESS: 모든 성분 a_i <= b_i 이고 a != b
        GREATER: LESS의 대칭
        EQUAL: 성분별 동일
        INCOMPARABLE: 그 외
    """
    _check_lengths(a, b)
    a_smaller = False
    b_smaller = False
    for x, y in zip(a, b):
        if x < y:
            a_smaller = True
        elif y < x:
            b_smaller = True
        if a_smaller and b_smaller:
            return Dominance.INCOMPARABLE
    if a_smaller:
        return Dominance.LESS
    if b_smaller:
        return Dominance.GREATER
    return Dominance.EQUAL


def add(a: WeightVector, b: WeightVector, max_units: int | None = None) -> WeightVector:
    """성분별 합 (고정소수점에서 정확)

    Raises:
        UsageError: 길이 불일치
        WeightOverflowError: 표현 가능한 최대 단위 초과
    """
    _check_lengths(a, b)
    limit = config.MAX_UNITS if max_units is None else max_units
    result = tuple(x + y for x, y in zip(a, b))
    for value in result:
        if value > limit:
            raise WeightOverflowError(
                f"고정소수점 범위 초과: {value} > {limit} (units)"
            )
    return result


def add_component(
    a: WeightVector, colour: int, amount: int, max_units: int | None = None
) -> WeightVector:
    """한 색상 성분에만 amount를 더한 새 벡터"""
    value = a[colour] + amount
    limit = config.MAX_UNITS if max_units is None else max_units
    if value > limit:
        raise WeightOverflowError(f"고정소수점 범위 초과: {value} > {limit} (units)")
    return a[:colour] + (value,) + a[colour + 1 :]


def component_sum(a: WeightVector) -> int:
    """성분 합 (큐의 1차 키)"""
    return sum(a)


def to_units(value: str | Decimal | int, scale: int) -> int:
    """십진수 값을 고정소수점 단위(정수)로 변환

    scale보다 많은 소수 자리가 필요한 값은 표현 불가로 거부합니다.
    """
    try:
        dec = value if isinstance(value, Decimal) else Decimal(str(value).strip())
    except InvalidOperation as e:
        raise UsageError(f"십진수 가중치가 아닙니다: {value!r}") from e
    if not dec.is_finite():
        raise UsageError(f"유한한 가중치가 아닙니다: {value!r}")
    scaled = dec.scaleb(scale)
    if scaled != scaled.to_integral_value():
        raise UsageError(f"scale={scale}에서 표현할 수 없는 가중치: {value}")
    return int(scaled)


def format_units(units: int, scale: int) -> str:
    """고정소수점 단위를 십진 문자열로 (소수 자리 scale개 고정)"""
    sign = "-" if units < 0 else ""
    units = abs(units)
    if scale == 0:
        return f"{sign}{units}"
    whole, frac = divmod(units, 10**scale)
    return f"{sign}{whole}.{frac:0{scale}d}"


def to_decimal(units: int, scale: int) -> Decimal:
    """고정소수점 단위를 Decimal로"""
    return Decimal(units).scaleb(-scale)

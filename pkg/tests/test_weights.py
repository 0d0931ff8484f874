"""가중치 벡터 비교/덧셈/고정소수점 변환 테스트"""

from decimal import Decimal
from itertools import product

import numpy as np
import pytest

from pareto_master.core.errors import UsageError, WeightOverflowError
from pareto_master.graph.weights import (
    Dominance,
    add,
    add_component,
    compare,
    format_units,
    to_units,
    zero_vector,
)


class TestCompare:
    def test_less(self):
        """성분별 <= 이고 하나라도 < 이면 LESS"""
        assert compare((1, 2), (1, 3)) is Dominance.LESS

    def test_greater(self):
        assert compare((2, 3), (1, 3)) is Dominance.GREATER

    def test_equal(self):
        assert compare((4, 5, 6), (4, 5, 6)) is Dominance.EQUAL

    def test_incomparable(self):
        """표의 두 행은 서로 비교 불가"""
        assert compare((25, 4, 21, 5), (0, 30, 21, 4)) is Dominance.INCOMPARABLE

    def test_length_mismatch(self):
        with pytest.raises(UsageError):
            compare((1, 2), (1, 2, 3))

    def test_order_properties(self):
        """반사성, 반대칭성, 추이성 (무작위 3쌍)"""
        rng = np.random.default_rng(11)
        vectors = [tuple(int(x) for x in rng.integers(0, 3, size=3)) for _ in range(30)]
        for a in vectors:
            assert compare(a, a) is Dominance.EQUAL
        for a, b in product(vectors, repeat=2):
            forward, backward = compare(a, b), compare(b, a)
            assert not (forward is Dominance.LESS and backward is Dominance.LESS)
            if forward is Dominance.LESS:
                assert backward is Dominance.GREATER
        for a, b, c in product(vectors[:12], repeat=3):
            if compare(a, b) is Dominance.LESS and compare(b, c) is Dominance.LESS:
                assert compare(a, c) is Dominance.LESS

    def test_translation_invariance(self):
        """a < b 이면 a + c < b + c"""
        rng = np.random.default_rng(5)
        for _ in range(200):
            a, b, c = (tuple(int(x) for x in rng.integers(0, 4, size=4)) for _ in range(3))
            if compare(a, b) is Dominance.LESS:
                assert compare(add(a, c), add(b, c)) is Dominance.LESS


class TestAdd:
    def test_componentwise(self):
        assert add((1, 2, 3), (10, 20, 30)) == (11, 22, 33)

    def test_zero_identity(self):
        assert add(zero_vector(3), (4, 5, 6)) == (4, 5, 6)

    def test_length_mismatch(self):
        with pytest.raises(UsageError):
            add((1,), (1, 2))

    def test_overflow(self):
        with pytest.raises(WeightOverflowError):
            add((2**63 - 1, 0), (1, 0))

    def test_custom_ceiling(self):
        with pytest.raises(WeightOverflowError):
            add((5,), (6,), max_units=10)

    def test_add_component(self):
        assert add_component((1, 2, 3), 1, 5) == (1, 7, 3)
        with pytest.raises(WeightOverflowError):
            add_component((9, 0), 0, 2, max_units=10)


class TestFixedPoint:
    @pytest.mark.parametrize(
        ("text", "scale", "units"),
        [("15", 0, 15), ("15", 3, 15000), ("0.5", 3, 500), ("1.234567", 6, 1234567)],
    )
    def test_to_units(self, text, scale, units):
        assert to_units(text, scale) == units

    def test_to_units_decimal(self):
        assert to_units(Decimal("2.50"), 1) == 25

    def test_too_many_decimals(self):
        """scale보다 소수 자리가 많으면 거부"""
        with pytest.raises(UsageError):
            to_units("0.0005", 3)

    @pytest.mark.parametrize("text", ["abc", "nan", "inf", ""])
    def test_not_a_number(self, text):
        with pytest.raises(UsageError):
            to_units(text, 3)

    def test_format_units(self):
        assert format_units(15000, 3) == "15.000"
        assert format_units(5, 3) == "0.005"
        assert format_units(47, 0) == "47"

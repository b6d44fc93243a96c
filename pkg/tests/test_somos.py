"""
Tests for Somos-k sequences over exact rationals
"""
import time
from fractions import Fraction

import pytest

from src.recurrence import (
    InvalidSpecError,
    SomosDivisionError,
    SomosSpec,
    is_integral,
    somos_first_noninteger,
    somos_generate,
)

SOMOS8_FIRST_NONINTEGER = (17, Fraction(420514, 7))


def test_somos4_unit_seeds():
    assert somos_generate(SomosSpec(k=4, N=8)) == [1, 1, 1, 1, 2, 3, 7, 23, 59]


def test_somos5_unit_seeds():
    assert somos_generate(SomosSpec(k=5, N=8))[5:] == [2, 3, 5, 11]


def test_horizon_shorter_than_seeds():
    assert somos_generate(SomosSpec(k=6, N=2)) == [1, 1, 1]


@pytest.mark.parametrize("k", [4, 5, 6, 7])
def test_integral_up_to_sixty(k):
    start = time.perf_counter()
    assert somos_first_noninteger(SomosSpec(k=k, N=60)) is None
    assert time.perf_counter() - start < 5


def test_somos8_first_noninteger_fixture():
    terms = somos_generate(SomosSpec(k=8, N=40))
    assert terms[8:17] == [4, 7, 13, 25, 61, 187, 775, 5827, 14815]
    n, value = SOMOS8_FIRST_NONINTEGER
    assert somos_first_noninteger(SomosSpec(k=8, N=40)) == n
    assert terms[n] == value
    assert all(is_integral(a) for a in terms[:n])


def test_rational_seeds_allowed():
    terms = somos_generate(SomosSpec(k=4, N=4, seeds=(Fraction(1, 2), 1, 1, 1)))
    assert terms[4] == 4
    assert not is_integral(terms[0])


def test_zero_divisor_reported_with_index():
    # a_4 = a_3 a_1 + a_2^2 = -1 + 1 = 0 becomes the divisor of a_8
    spec = SomosSpec(k=4, N=8, seeds=(1, 1, 1, -1))
    with pytest.raises(SomosDivisionError) as exc:
        somos_generate(spec)
    assert exc.value.index == 8
    assert exc.value.divisor_index == 4


class TestSomosSpec:

    def test_order_too_small(self):
        with pytest.raises(InvalidSpecError):
            SomosSpec(k=3, N=5)

    def test_wrong_seed_count(self):
        with pytest.raises(InvalidSpecError):
            SomosSpec(k=4, N=5, seeds=(1, 1, 1))

    def test_zero_seed(self):
        with pytest.raises(InvalidSpecError):
            SomosSpec(k=4, N=5, seeds=(1, 0, 1, 1))

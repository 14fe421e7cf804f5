from math import comb

import pytest

from twincore.errors import Int64OverflowError
from twincore.numbers import (
    binomial,
    catalan,
    checked_power,
    exact_div,
    fibonacci,
    rational_catalan,
)


def test_binomial_matches_stdlib():
    for n in range(41):
        for k in range(n + 1):
            assert binomial(n, k) == comb(n, k)


def test_binomial_outside_range_is_zero():
    assert binomial(5, -1) == 0
    assert binomial(5, 6) == 0
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_catalan_matches_division_form():
    for n in range(31):
        assert catalan(n) == comb(2 * n, n) // (n + 1)


def test_fibonacci_prefix():
    assert [fibonacci(n) for n in range(1, 11)] == [1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
    with pytest.raises(ValueError):
        fibonacci(0)


def test_rational_catalan_values():
    assert rational_catalan(3, 5) == 7
    assert rational_catalan(7, 8) == 429
    assert rational_catalan(1, 2) == 1
    with pytest.raises(ArithmeticError):
        rational_catalan(2, 4)


def test_overflow_is_detected():
    with pytest.raises(Int64OverflowError):
        binomial(70, 35)
    with pytest.raises(Int64OverflowError):
        catalan(40)
    with pytest.raises(Int64OverflowError):
        checked_power(4, 40)
    assert checked_power(4, 31) == 4**31


def test_exact_div_rejects_remainders():
    assert exact_div(24, 24, "x") == 1
    with pytest.raises(ArithmeticError):
        exact_div(25, 24, "x")

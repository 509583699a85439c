import pytest

from squarecycle.fibonacci import fib, fib_square_sum, fib_square_sum_identity

from oracles import naive_fib


def test_small_values():
    assert fib(0) == 0
    assert fib(1) == 1
    assert fib(10) == 55
    assert fib(100) == 354224848179261915075
    assert fib(100) == fib(99) + fib(98)


def test_matches_independent_loop():
    assert [fib(i) for i in range(300)] == [naive_fib(i) for i in range(300)]


def test_recurrence_and_growth():
    for i in range(501):
        assert fib(i + 2) == fib(i + 1) + fib(i)
    for i in range(2, 501):
        assert fib(i + 1) > fib(i)


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        fib(-1)


def test_identity_examples():
    assert fib_square_sum(2) == 1
    assert fib_square_sum(3) == 4 == 1 + fib(4)
    assert fib_square_sum(8) == 441 == 1 + 8 + 55 + 377


def test_identity_range():
    assert all(fib_square_sum_identity(n) for n in range(2, 501))
    with pytest.raises(ValueError):
        fib_square_sum_identity(1)

"""Exact Fibonacci numbers and the parity-split square identity."""

from __future__ import annotations

import threading

_memo: list[int] = [0, 1]
_memo_lock = threading.Lock()


def fib(i: int) -> int:
    """F_i with F_0 = 0, F_1 = 1, computed by the recurrence."""
    if i < 0:
        raise ValueError(f"Fibonacci index must be >= 0, got {i}")
    if i < len(_memo):
        return _memo[i]
    with _memo_lock:
        while len(_memo) <= i:
            _memo.append(_memo[-1] + _memo[-2])
    return _memo[i]


def fib_square_sum(n: int) -> int:
    """Right-hand side of the square identity.

    Even n: ``F_2 + F_6 + ... + F_{2n-2}``.
    Odd n: ``1 + F_4 + F_8 + ... + F_{2n-2}``.
    """
    if n < 2:
        raise ValueError(f"identity needs n >= 2, got {n}")
    if n % 2 == 0:
        return sum(fib(4 * k + 2) for k in range((n - 2) // 2 + 1))
    return 1 + sum(fib(4 * k) for k in range(1, (n - 1) // 2 + 1))


def fib_square_sum_identity(n: int) -> bool:
    return fib(n) ** 2 == fib_square_sum(n)

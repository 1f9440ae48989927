"""Small number-theory helpers shared across the package."""

from __future__ import annotations


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError(f"divisors expects a positive integer, got {n}")
    small, large = [], []
    f = 1
    while f * f <= n:
        if n % f == 0:
            small.append(f)
            if f != n // f:
                large.append(n // f)
        f += 1
    return small + large[::-1]


def sigma(n: int) -> int:
    """Sum of the divisors of n."""
    return sum(divisors(n))


def tau(n: int) -> int:
    """Number of divisors of n."""
    return len(divisors(n))

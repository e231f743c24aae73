"""Exact integer and rational primitives shared by the counting formulas.

Counts are plain Python ints (arbitrary precision, never overflow) and
exact rationals are fractions.Fraction; nothing here touches floats.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

__all__ = ["HalfIntegerError", "binomial", "divisors", "nearest_integer", "totient"]


class HalfIntegerError(ValueError):
    """Raised when asked for the nearest integer to an exact half-integer."""


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending.  Trial division up to sqrt(n)."""
    if n < 1:
        raise ValueError(f"divisors() needs n >= 1, got {n}")
    small = []
    large = []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    large.reverse()
    return small + large


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    """Euler's totient: how many of 1..n are coprime to n."""
    if n < 1:
        raise ValueError(f"totient() needs n >= 1, got {n}")
    result = n
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            while rest % p == 0:
                rest //= p
            result -= result // p
        p += 1 if p == 2 else 2
    if rest > 1:
        result -= result // rest
    return result


def binomial(x: int, k: int) -> int:
    """C(x, k), with the convention that out-of-range k (k < 0 or k > x) gives 0."""
    if x < 0:
        raise ValueError(f"binomial() needs x >= 0, got {x}")
    if k < 0 or k > x:
        return 0
    return math.comb(x, k)


def nearest_integer(x: Fraction) -> int:
    """The unique integer closest to x.

    Undefined exactly at half-integers, where HalfIntegerError is raised
    (callers that can prove the half-integer case never arises treat that
    exception as a defect signal).
    """
    if x.denominator == 2:
        raise HalfIntegerError(f"{x} is a half-integer; no nearest integer exists")
    return math.floor(x + Fraction(1, 2))

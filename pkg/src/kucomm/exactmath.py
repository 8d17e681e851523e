"""Exact integer/rational helpers and memoized combinatorial tables.

Rationals are :class:`fractions.Fraction` (always reduced, positive
denominator); integers are plain Python ints.  The Stirling tables grow on
demand, so the initial bound only controls how much is precomputed.
"""

from __future__ import annotations

import contextlib
import math
import threading
from fractions import Fraction
from typing import Callable, Iterator

Rat = Fraction

DEFAULT_BOUND = 64


def as_rat(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def normalize(value):
    """Return an int when a rational is integral, else the Fraction."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def format_rat(value) -> str:
    value = as_rat(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rat(text: str) -> Fraction:
    return Fraction(text)


class CombCache:
    """Row-wise tables of signed Stirling numbers of both kinds.

    ``s1[n][k]`` is the signed Stirling number of the first kind,
    ``s2[n][k]`` the Stirling number of the second kind.  Rows are appended
    under a lock; reads of existing rows need no lock.
    """

    def __init__(self, bound: int = DEFAULT_BOUND):
        self._lock = threading.Lock()
        self.s1: list[list[int]] = [[1]]
        self.s2: list[list[int]] = [[1]]
        self.grow(bound)

    def grow(self, n: int) -> None:
        if n < len(self.s1):
            return
        with self._lock:
            while len(self.s1) <= n:
                m = len(self.s1)
                prev1, prev2 = self.s1[-1], self.s2[-1]
                row1 = [0] * (m + 1)
                row2 = [0] * (m + 1)
                for k in range(1, m + 1):
                    a1 = prev1[k] if k < m else 0
                    a2 = prev2[k] if k < m else 0
                    # s(m,k) = s(m-1,k-1) - (m-1) s(m-1,k)
                    row1[k] = prev1[k - 1] - (m - 1) * a1
                    # S(m,k) = S(m-1,k-1) + k S(m-1,k)
                    row2[k] = prev2[k - 1] + k * a2
                self.s1.append(row1)
                self.s2.append(row2)

    def stirling1(self, n: int, k: int) -> int:
        if n < 0 or k < 0 or k > n:
            return 0
        self.grow(n)
        return self.s1[n][k]

    def stirling2(self, n: int, k: int) -> int:
        if n < 0 or k < 0 or k > n:
            return 0
        self.grow(n)
        return self.s2[n][k]


_cache = CombCache()
_cache_clearers: list[Callable[[], None]] = []


def register_cache(clear: Callable[[], None]) -> Callable[[], None]:
    """Register a cache-clearing hook for values derived from the tables."""
    _cache_clearers.append(clear)
    return clear


def clear_derived_caches() -> None:
    for clear in _cache_clearers:
        clear()


def binom(n: int, k: int) -> int:
    """Binomial coefficient; 0 outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def gbinom(r: int, k: int) -> int:
    """Generalized binomial r(r-1)...(r-k+1)/k! for any integer r."""
    if k < 0:
        return 0
    num = 1
    for i in range(k):
        num *= r - i
    return num // math.factorial(k)


def multinomial(*parts: int) -> int:
    if any(p < 0 for p in parts):
        return 0
    out = math.factorial(sum(parts))
    for p in parts:
        out //= math.factorial(p)
    return out


def stirling1(n: int, k: int) -> int:
    """Signed Stirling number of the first kind.

    Defined by ``x(x-1)...(x-n+1) = sum_k s(n,k) x^k``.
    """
    return _cache.stirling1(n, k)


def stirling2(n: int, k: int) -> int:
    """Number of partitions of an n-set into k non-empty blocks."""
    return _cache.stirling2(n, k)


def factorial(n: int) -> int:
    return math.factorial(n)


@contextlib.contextmanager
def injected_fault(n: int = 3, k: int = 2, delta: int = 1) -> Iterator[None]:
    """Temporarily corrupt one Stirling number of the second kind.

    Only used to self-test the verification harness.
    """
    _cache.grow(n)
    old = _cache.s2[n][k]
    _cache.s2[n][k] = old + delta
    clear_derived_caches()
    try:
        yield
    finally:
        _cache.s2[n][k] = old
        clear_derived_caches()

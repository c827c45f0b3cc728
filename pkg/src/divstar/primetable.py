"""Small-prime tables for trial division.

The table holds the first K odd primes, ascending from 3. 2 is excluded
because the candidate stream only ever contains odd numbers; witness base
schedules that need 2 use first_primes instead.
"""

from __future__ import annotations

import math
from typing import Iterator

DEFAULT_TABLE_SIZE = 59
MAX_TABLE_SIZE = 10**4


def _odd_primes(count: int) -> list[int]:
    """First `count` odd primes by a plain sieve, growing the bound as needed."""
    if count == 0:
        return []
    bound = 128
    while True:
        composite = bytearray(bound)
        found = []
        for n in range(3, bound, 2):
            if composite[n]:
                continue
            found.append(n)
            if len(found) == count:
                return found
            for k in range(n * n, bound, 2 * n):
                composite[k] = 1
        bound *= 2


def first_primes(count: int) -> list[int]:
    """First `count` primes including 2; used for witness base schedules."""
    if not isinstance(count, int) or count < 0:
        raise ValueError(f"count must be a non-negative int, got {count!r}")
    if count == 0:
        return []
    return [2] + _odd_primes(count - 1)


def count_odd_primes_below(bound: float) -> int:
    """How many odd primes are strictly less than `bound`."""
    if not math.isfinite(bound):
        raise ValueError(f"bound must be finite, got {bound!r}")
    if bound <= 3:
        return 0
    limit = math.ceil(bound)
    composite = bytearray(limit)
    count = 0
    for n in range(3, limit, 2):
        if composite[n]:
            continue
        if n < bound:
            count += 1
        for k in range(n * n, limit, 2 * n):
            composite[k] = 1
    return count


class PrimeTable:
    """Immutable ascending table of the first `size` odd primes."""

    __slots__ = ("_primes", "_members")

    def __init__(self, size: int = DEFAULT_TABLE_SIZE) -> None:
        if not isinstance(size, int) or not 1 <= size <= MAX_TABLE_SIZE:
            raise ValueError(f"table size must be an int in 1..{MAX_TABLE_SIZE}, got {size!r}")
        self._primes = tuple(_odd_primes(size))
        self._members = frozenset(self._primes)

    @property
    def primes(self) -> tuple[int, ...]:
        return self._primes

    @property
    def largest(self) -> int:
        return self._primes[-1]

    def prefix(self, m: int) -> tuple[int, ...]:
        """The first m table primes; m may be 0 (empty filter)."""
        if not isinstance(m, int) or not 0 <= m <= len(self._primes):
            raise ValueError(f"m must be an int in 0..{len(self._primes)}, got {m!r}")
        return self._primes[:m]

    def __len__(self) -> int:
        return len(self._primes)

    def __iter__(self) -> Iterator[int]:
        return iter(self._primes)

    def __getitem__(self, index: int) -> int:
        return self._primes[index]

    def __contains__(self, value: object) -> bool:
        return value in self._members

    def __repr__(self) -> str:
        return f"PrimeTable(size={len(self._primes)}, largest={self._primes[-1]})"

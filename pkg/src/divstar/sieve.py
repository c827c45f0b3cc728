"""div*: stream the odd numbers indivisible by each of the first m table primes.

Two interchangeable modes implement the same stream. Naive mode divides the
full candidate by every active prime at every step. Incremental mode keeps one
word-sized residue per active prime and bumps each by +2 per step, so
filtering never touches the big number; the candidate is materialized only
when it survives. Neither mode stops at the first divisor hit: every active
prime is consulted for every candidate, which is what makes the accumulated
check time comparable across modes and meaningful per prime.

filter_seconds accumulates wall time spent in divisibility work only (residue
updates and zero tests, or the rem_small calls). Candidate stepping and
survivor materialization are excluded, and a fresh stream reports 0. On the
incremental hot path one clock read pair covers the whole scan to the next
survivor; per-candidate read pairs would cost more than the work they time
and would drown the per-prime signal at small m.

A candidate equal to one of the active primes is itself prime and is yielded
as a survivor rather than rejected by its own zero residue.
"""

from __future__ import annotations

from time import perf_counter
from typing import Iterator

from divstar.bignum import Natural
from divstar.primetable import PrimeTable

MODES = ("incremental", "naive")


class DivStarStream:
    def __init__(
        self,
        start: Natural,
        table: PrimeTable,
        m: int,
        mode: str = "incremental",
    ) -> None:
        if not isinstance(start, Natural):
            raise ValueError(f"start must be a Natural, got {start!r}")
        if mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
        if not isinstance(m, int) or not 0 <= m <= len(table):
            raise ValueError(f"m must be an int in 0..{len(table)}, got {m!r}")
        first = start if start.is_odd() else start.add_small(1)
        self._table = table
        self._m = m
        self._mode = mode
        self._primes = list(table.prefix(m))
        self._base = first
        self._offset = 0
        self._value = first
        self._largest_active = self._primes[-1] if self._primes else 0
        # Word-sized mirror of the candidate, kept only while it could still
        # equal an active prime; None once the candidate outgrows the table.
        self._small: int | None = None
        if self._primes and first.bit_length() <= 64 and int(first) <= self._largest_active:
            self._small = int(first)
        if mode == "incremental":
            self._residues = [first.rem_small(p) for p in self._primes]
        else:
            self._residues = []
        self._idx = tuple(range(len(self._primes)))
        self._filter_seconds = 0.0
        self._candidates = 0
        self._survivors = 0
        self._fresh = True

    @property
    def m(self) -> int:
        return self._m

    @property
    def mode(self) -> str:
        return self._mode

    @property
    def filter_seconds(self) -> float:
        """Accumulated wall time spent in divisibility checks."""
        return self._filter_seconds

    @property
    def candidates_examined(self) -> int:
        return self._candidates

    @property
    def survivors_yielded(self) -> int:
        return self._survivors

    @property
    def residues(self) -> tuple[int, ...]:
        return tuple(self._residues)

    @property
    def current(self) -> Natural:
        """The candidate most recently examined (the first one before any step)."""
        if self._mode == "naive":
            return self._value
        return self._materialize()

    def _materialize(self) -> Natural:
        if self._offset == 0:
            return self._base
        return self._base + Natural(self._offset)

    def _step_small(self) -> None:
        if self._small is not None:
            self._small += 2
            if self._small > self._largest_active:
                self._small = None

    def next_survivor(self) -> Natural:
        if self._mode == "incremental":
            return self._next_incremental()
        return self._next_naive()

    def _next_incremental(self) -> Natural:
        primes = self._primes
        residues = self._residues
        n = len(primes)
        if self._fresh:
            self._fresh = False
            t0 = perf_counter()
            divisible = False
            for i in range(n):
                if residues[i] == 0:
                    divisible = True
            self._filter_seconds += perf_counter() - t0
            self._candidates += 1
            if divisible and self._small is not None:
                divisible = any(
                    residues[i] == 0 and primes[i] != self._small for i in range(n)
                )
            if not divisible:
                self._survivors += 1
                return self._materialize()
        while self._small is not None:
            # Word-sized candidates, where one may equal an active prime:
            # stepped and timed one at a time.
            self._offset += 2
            self._step_small()
            t0 = perf_counter()
            divisible = False
            for i in range(n):
                r = residues[i] + 2
                if r >= primes[i]:
                    r -= primes[i]
                residues[i] = r
                if r == 0:
                    divisible = True
            self._filter_seconds += perf_counter() - t0
            self._candidates += 1
            if divisible and self._small is not None:
                divisible = any(
                    residues[i] == 0 and primes[i] != self._small for i in range(n)
                )
            if not divisible:
                self._survivors += 1
                return self._materialize()
        # Past the table there is no self-prime case; one timed span covers
        # the whole scan to the next survivor so the clock reads are not
        # charged to individual candidates.
        idx = self._idx
        k = 0
        t0 = perf_counter()
        while True:
            k += 1
            divisible = False
            for i in idx:
                r = residues[i] + 2
                if r >= primes[i]:
                    r -= primes[i]
                residues[i] = r
                if r == 0:
                    divisible = True
            if not divisible:
                break
        self._filter_seconds += perf_counter() - t0
        self._offset += 2 * k
        self._candidates += k
        self._survivors += 1
        return self._materialize()

    def take(self, count: int) -> list[Natural]:
        """Collect the next count survivors.

        In incremental mode past the self-prime regime, the scan for the whole
        batch runs under a single clock read pair and survivors are recorded
        as step offsets; the Naturals are built only after the clock stops.
        This keeps the per-candidate cost in filter_seconds down to the
        divisibility work itself, which is what the usefulness curve needs.
        """
        if not isinstance(count, int) or count < 0:
            raise ValueError(f"count must be a non-negative int, got {count!r}")
        out: list[Natural] = []
        while len(out) < count and (
            self._mode == "naive" or self._fresh or self._small is not None
        ):
            out.append(self.next_survivor())
        remaining = count - len(out)
        if remaining == 0:
            return out
        primes = self._primes
        residues = self._residues
        idx = self._idx
        hits: list[int] = []
        k = 0
        t0 = perf_counter()
        while True:
            k += 1
            divisible = False
            for i in idx:
                r = residues[i] + 2
                if r >= primes[i]:
                    r -= primes[i]
                residues[i] = r
                if r == 0:
                    divisible = True
            if not divisible:
                hits.append(k)
                if len(hits) == remaining:
                    break
        self._filter_seconds += perf_counter() - t0
        base_offset = self._offset
        self._offset = base_offset + 2 * k
        self._candidates += k
        self._survivors += remaining
        base = self._base
        for h in hits:
            out.append(base + Natural(base_offset + 2 * h))
        return out

    def _next_naive(self) -> Natural:
        primes = self._primes
        while True:
            if self._fresh:
                self._fresh = False
            else:
                self._offset += 2
                self._value = self._value.add_small(2)
                self._step_small()
            value = self._value
            t0 = perf_counter()
            divisible = False
            for p in primes:
                if value.rem_small(p) == 0:
                    divisible = True
            self._filter_seconds += perf_counter() - t0
            self._candidates += 1
            if divisible and self._small is not None:
                divisible = any(
                    value.rem_small(p) == 0 and p != self._small for p in primes
                )
            if not divisible:
                self._survivors += 1
                return value

    def __iter__(self) -> Iterator[Natural]:
        while True:
            yield self.next_survivor()

    def __repr__(self) -> str:
        return (
            f"DivStarStream(m={self._m}, mode={self._mode!r}, "
            f"candidates={self._candidates}, survivors={self._survivors})"
        )

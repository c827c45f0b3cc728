"""Usefulness-curve measurement and trial-division bound selection.

T(m) is the accumulated divisibility-check time of an incremental div* stream
run from a fixed start until a fixed number of survivors; U(m) = T(m) / m
weighs that time against the number of primes doing the work. Two bound
recommendations come out of a calibration run: the m where U peaks, and the
quotient B = E / D, where E is the wall time of one witness round on a
survivor and D is the peak usefulness. B converts to a prime count by
counting the odd primes below it.

Every timing is taken on a monotonic clock as the median of `repetitions`
runs after one warmup run. Results are machine- and load-dependent by nature;
reports carry a note saying so.
"""

from __future__ import annotations

import gc
import random
from contextlib import contextmanager
from dataclasses import dataclass
from statistics import median
from typing import Iterable, Iterator

from divstar.bignum import Natural
from divstar.primetable import PrimeTable, count_odd_primes_below
from divstar.primality import timed_single_pass
from divstar.sieve import DivStarStream

DEFAULT_SURVIVOR_BUDGET = 64
DEFAULT_REPETITIONS = 5
MACHINE_NOTE = "timings are machine- and load-dependent; recalibrate on the target host"

_MIN_START_BITS = 16


@contextmanager
def gc_paused() -> Iterator[None]:
    """Cycle collection off while timers run; collector pauses are of the
    same magnitude as the measurements here. Nothing timed allocates cycles,
    so reference counting keeps memory flat in the meantime."""
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if was_enabled:
            gc.enable()


@dataclass(frozen=True)
class CurveRow:
    m: int
    t_seconds: float
    u_seconds: float


@dataclass(frozen=True)
class UsefulnessCurve:
    rows: tuple[CurveRow, ...]
    start_hex: str
    survivor_budget: int

    def row(self, m: int) -> CurveRow:
        for row in self.rows:
            if row.m == m:
                return row
        raise ValueError(f"curve has no row for m={m}")


@dataclass(frozen=True)
class CalibrationReport:
    e_seconds: float
    d_seconds: float
    b: float
    m_argmax: int
    m_ratio: int
    curve: UsefulnessCurve
    table_size: int
    repetitions: int
    note: str = MACHINE_NOTE

    def to_text(self) -> str:
        lines = [
            f"start_hex: {self.curve.start_hex}",
            f"survivor_budget: {self.curve.survivor_budget}",
            f"repetitions: {self.repetitions}",
            f"table_size: {self.table_size}",
            f"e_seconds: {self.e_seconds!r}",
            f"d_seconds: {self.d_seconds!r}",
            f"b: {self.b!r}",
            f"m_argmax: {self.m_argmax}",
            f"m_ratio: {self.m_ratio}",
            f"note: {self.note}",
        ]
        lines.extend(
            f"curve: {row.m},{row.t_seconds!r},{row.u_seconds!r}" for row in self.curve.rows
        )
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "CalibrationReport":
        fields: dict[str, str] = {}
        rows: list[CurveRow] = []
        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition(":")
            if not sep:
                raise ValueError(f"malformed report line: {raw!r}")
            key, value = key.strip(), value.strip()
            if key == "curve":
                parts = value.split(",")
                if len(parts) != 3:
                    raise ValueError(f"malformed curve row: {value!r}")
                rows.append(CurveRow(int(parts[0]), float(parts[1]), float(parts[2])))
            else:
                fields[key] = value
        try:
            curve = UsefulnessCurve(
                tuple(rows), fields["start_hex"], int(fields["survivor_budget"])
            )
            return cls(
                e_seconds=float(fields["e_seconds"]),
                d_seconds=float(fields["d_seconds"]),
                b=float(fields["b"]),
                m_argmax=int(fields["m_argmax"]),
                m_ratio=int(fields["m_ratio"]),
                curve=curve,
                table_size=int(fields["table_size"]),
                repetitions=int(fields["repetitions"]),
                note=fields.get("note", MACHINE_NOTE),
            )
        except KeyError as exc:
            raise ValueError(f"calibration report is missing field {exc.args[0]!r}") from None

    def to_csv(self) -> str:
        return curve_to_csv(self.curve)


def curve_to_csv(curve: UsefulnessCurve, mark_argmax: bool = False) -> str:
    lines = ["m,T_seconds,U_seconds"]
    best = argmax_usefulness(curve) if mark_argmax else None
    for row in curve.rows:
        line = f"{row.m},{row.t_seconds!r},{row.u_seconds!r}"
        if row.m == best:
            line += ",argmax"
        lines.append(line)
    return "\n".join(lines) + "\n"


def measure_usefulness(
    start: Natural,
    m_values: Iterable[int],
    survivor_budget: int,
    table: PrimeTable,
    repetitions: int = DEFAULT_REPETITIONS,
) -> UsefulnessCurve:
    """T(m) and U(m) per m, median over `repetitions` runs after one warmup."""
    ms = sorted(set(m_values))
    if not ms:
        raise ValueError("m_values must be non-empty")
    for m in ms:
        if not isinstance(m, int) or not 1 <= m <= len(table):
            raise ValueError(f"every m must be an int in 1..{len(table)}, got {m!r}")
    if not isinstance(survivor_budget, int) or survivor_budget < 1:
        raise ValueError(f"survivor_budget must be a positive int, got {survivor_budget!r}")
    if not isinstance(repetitions, int) or repetitions < 1:
        raise ValueError(f"repetitions must be a positive int, got {repetitions!r}")
    # Repetitions are interleaved across m rather than run back to back, so a
    # transient slowdown lands on one repetition of many m values instead of
    # on every repetition of one m, where no median could remove it.
    times: dict[int, list[float]] = {m: [] for m in ms}
    with gc_paused():
        for m in ms:
            _one_filter_run(start, table, m, survivor_budget)
        for _ in range(repetitions):
            for m in ms:
                times[m].append(_one_filter_run(start, table, m, survivor_budget))
    rows = []
    for m in ms:
        t_m = median(times[m])
        rows.append(CurveRow(m, t_m, t_m / m))
    return UsefulnessCurve(tuple(rows), start.to_hex(), survivor_budget)


def _one_filter_run(start: Natural, table: PrimeTable, m: int, budget: int) -> float:
    stream = DivStarStream(start, table, m, mode="incremental")
    stream.take(budget)
    return stream.filter_seconds


def argmax_usefulness(curve: UsefulnessCurve) -> int:
    """The smallest m attaining the maximal usefulness."""
    if not curve.rows:
        raise ValueError("curve is empty")
    best = curve.rows[0]
    for row in curve.rows[1:]:
        if row.u_seconds > best.u_seconds or (
            row.u_seconds == best.u_seconds and row.m < best.m
        ):
            best = row
    return best.m


def ratio_bound(e_seconds: float, d_seconds: float) -> tuple[float, int]:
    """B = E/D and the number of odd primes below B."""
    if not d_seconds > 0:
        raise ValueError(f"D must be positive, got {d_seconds!r}")
    if not e_seconds > 0:
        raise ValueError(f"E must be positive, got {e_seconds!r}")
    b = e_seconds / d_seconds
    return b, count_odd_primes_below(b)


def random_odd_start(bits: int, seed: int | None = None) -> Natural:
    """A random odd value of exactly `bits` bits (top and bottom bits set)."""
    if not isinstance(bits, int) or bits < 2:
        raise ValueError(f"bits must be an int >= 2, got {bits!r}")
    rng = random.Random(seed)
    middle = rng.getrandbits(bits - 2) if bits > 2 else 0
    return Natural((1 << (bits - 1)) | (middle << 1) | 1)


def calibrate(
    table: PrimeTable,
    *,
    bits: int | None = None,
    start: Natural | None = None,
    survivor_budget: int = DEFAULT_SURVIVOR_BUDGET,
    repetitions: int = DEFAULT_REPETITIONS,
    seed: int | None = None,
) -> CalibrationReport:
    """Measure E and the full usefulness curve, then derive both bounds.

    The workload is either an explicit start value or a seeded random odd
    number of `bits` bits. E is measured on the first full-table survivor
    from that start, the number that would actually reach the test.
    """
    if start is None:
        if bits is None:
            raise ValueError("calibrate needs either bits or start")
        if not isinstance(bits, int) or bits < _MIN_START_BITS:
            raise ValueError(f"bits must be an int >= {_MIN_START_BITS}, got {bits!r}")
        start = random_odd_start(bits, seed)
    else:
        if not isinstance(start, Natural):
            raise ValueError(f"start must be a Natural, got {start!r}")
        if bits is not None:
            raise ValueError("pass either bits or start, not both")
        if start.bit_length() < _MIN_START_BITS:
            raise ValueError(f"start must be at least {_MIN_START_BITS} bits wide")

    subject = DivStarStream(start, table, len(table), "incremental").next_survivor()
    with gc_paused():
        timed_single_pass(subject)
        e = median(timed_single_pass(subject) for _ in range(repetitions))

    curve = measure_usefulness(
        start, range(1, len(table) + 1), survivor_budget, table, repetitions
    )
    d = max(row.u_seconds for row in curve.rows)
    m_argmax = argmax_usefulness(curve)
    b, m_ratio = ratio_bound(e, d)
    return CalibrationReport(
        e_seconds=e,
        d_seconds=d,
        b=b,
        m_argmax=m_argmax,
        m_ratio=m_ratio,
        curve=curve,
        table_size=len(table),
        repetitions=repetitions,
    )

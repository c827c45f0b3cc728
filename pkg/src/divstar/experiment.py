"""Search sweeps: probable-prime search per trial-division count.

A sweep runs the same search once per m and records wall time, the number of
candidates submitted to the primality decision (mr_passes), and the number of
odd candidates scanned. With a fixed base schedule the found prime is the
same for every m, which the sweep asserts; rows then differ only in how much
work it took to get there.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from time import perf_counter
from typing import Iterable

from divstar.bignum import Natural
from divstar.calibration import CalibrationReport, gc_paused
from divstar.primality import MrConfig, is_probable_prime
from divstar.primetable import PrimeTable
from divstar.sieve import DivStarStream

DEFAULT_CANDIDATE_CAP = 10**6
DIGEST_CHARS = 16
PREDICTION_THRESHOLD = 1.10


class CandidateCapExceeded(RuntimeError):
    """A search submitted more survivors than the configured cap allows."""


@dataclass(frozen=True)
class SweepRow:
    m: int
    wall_time_s: float
    mr_passes: int
    candidates: int
    digest: str


@dataclass(frozen=True)
class SweepReport:
    start_hex: str
    start_bits: tuple[int, ...]
    rounds: int
    base_strategy: str
    seed: int | None
    rows: tuple[SweepRow, ...]
    best_m: int
    calibration: CalibrationReport | None = None

    def row(self, m: int) -> SweepRow:
        for row in self.rows:
            if row.m == m:
                return row
        raise ValueError(f"sweep has no row for m={m}")


def find_probable_prime(
    start: Natural,
    m: int,
    table: PrimeTable,
    cfg: MrConfig,
    cap: int | None = None,
) -> tuple[Natural, int, int]:
    """First probable prime at or after start; returns (prime, mr_passes, candidates).

    mr_passes counts candidates submitted to the primality decision, whatever
    the round count; candidates counts every odd value scanned. Survivors no
    larger than the biggest table prime are decided by table membership (the
    witness machinery has no usable bases down there) but still count as
    submitted.
    """
    stream = DivStarStream(start, table, m, "incremental")
    largest = Natural(table.largest)
    passes = 0
    for candidate in stream:
        if cap is not None and passes >= cap:
            raise CandidateCapExceeded(
                f"no probable prime within {cap} submitted candidates "
                f"from 0x{start.to_hex()} at m={m}"
            )
        passes += 1
        if candidate <= largest:
            found = int(candidate) in table
        else:
            found = is_probable_prime(candidate, cfg).probable_prime
        if found:
            return candidate, passes, stream.candidates_examined
    raise AssertionError("unreachable: the stream is unbounded")


def sweep(
    start: Natural,
    m_values: Iterable[int],
    table: PrimeTable,
    cfg: MrConfig,
    cap: int | None = DEFAULT_CANDIDATE_CAP,
    calibration: CalibrationReport | None = None,
    repetitions: int = 1,
) -> SweepReport:
    """One timed search per m, ascending; asserts every m finds the same prime.

    With repetitions > 1 each search is repeated that many times and the row
    reports the fastest wall time; repeated runs of identical work differ
    only by interference, so the minimum is the estimate of the work itself.
    The grid is re-walked whole per repetition so a transient slowdown cannot
    settle on a single m.
    """
    if cfg.base_strategy != "fixed":
        raise ValueError("sweeps need the fixed base strategy so rows are comparable")
    ms = sorted(set(m_values))
    if not ms:
        raise ValueError("m_values must be non-empty")
    for m in ms:
        if not isinstance(m, int) or not 0 <= m <= len(table):
            raise ValueError(f"every m must be an int in 0..{len(table)}, got {m!r}")
    if not isinstance(repetitions, int) or repetitions < 1:
        raise ValueError(f"repetitions must be a positive int, got {repetitions!r}")
    walls: dict[int, list[float]] = {m: [] for m in ms}
    found: dict[int, tuple] = {}
    with gc_paused():
        for _ in range(repetitions):
            for m in ms:
                t0 = perf_counter()
                result = find_probable_prime(start, m, table, cfg, cap)
                walls[m].append(perf_counter() - t0)
                if m in found and found[m][1:] != result[1:]:
                    raise RuntimeError(f"non-deterministic search at m={m}")
                found[m] = result
    rows = []
    first_digest: str | None = None
    for m in ms:
        prime, passes, candidates = found[m]
        digest = prime.to_hex()[:DIGEST_CHARS]
        if first_digest is None:
            first_digest = digest
        elif digest != first_digest:
            raise RuntimeError(
                f"sweep rows disagree on the found prime: m={m} found {digest}, "
                f"earlier rows found {first_digest}"
            )
        rows.append(SweepRow(m, min(walls[m]), passes, candidates, digest))
    best = min(rows, key=lambda row: row.wall_time_s)
    return SweepReport(
        start_hex=start.to_hex(),
        start_bits=tuple(start.bit_positions()),
        rounds=cfg.rounds,
        base_strategy=cfg.base_strategy,
        seed=cfg.seed,
        rows=tuple(rows),
        best_m=best.m,
        calibration=calibration,
    )


def sweep_to_csv(report: SweepReport) -> str:
    lines = ["m,wall_time_s,mr_passes,candidates,digest"]
    lines.extend(
        f"{row.m},{row.wall_time_s!r},{row.mr_passes},{row.candidates},{row.digest}"
        for row in report.rows
    )
    return "\n".join(lines) + "\n"


def sweep_rows_from_csv(text: str) -> tuple[SweepRow, ...]:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines or lines[0] != "m,wall_time_s,mr_passes,candidates,digest":
        raise ValueError("missing or malformed sweep CSV header")
    rows = []
    for line in lines[1:]:
        parts = line.split(",")
        if len(parts) != 5:
            raise ValueError(f"malformed sweep CSV row: {line!r}")
        rows.append(
            SweepRow(int(parts[0]), float(parts[1]), int(parts[2]), int(parts[3]), parts[4])
        )
    return tuple(rows)


def sweep_to_json(report: SweepReport) -> str:
    payload = {
        "start_hex": report.start_hex,
        "start_bits": list(report.start_bits),
        "rounds": report.rounds,
        "base_strategy": report.base_strategy,
        "seed": report.seed,
        "best_m": report.best_m,
        "rows": [
            {
                "m": row.m,
                "wall_time_s": row.wall_time_s,
                "mr_passes": row.mr_passes,
                "candidates": row.candidates,
                "digest": row.digest,
            }
            for row in report.rows
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


@dataclass(frozen=True)
class PredictionCheck:
    best_m: int
    best_wall_s: float
    m_argmax: int
    argmax_wall_s: float | None
    argmax_ratio: float | None
    m_ratio: int
    ratio_wall_s: float | None
    ratio_ratio: float | None
    threshold: float
    ok: bool


def validate_prediction(
    report: SweepReport,
    cal: CalibrationReport,
    threshold: float = PREDICTION_THRESHOLD,
) -> PredictionCheck:
    """How close the calibration's two recommendations come to the sweep's
    actual best wall time. Ratios are wall(recommended) / wall(best); a
    recommendation missing from the sweep grid leaves its ratio as None and
    the check not ok."""
    if report.start_hex != cal.curve.start_hex:
        raise ValueError("sweep and calibration describe different start values")
    by_m = {row.m: row for row in report.rows}
    best_wall = min(row.wall_time_s for row in report.rows)

    def lookup(m: int) -> tuple[float | None, float | None]:
        row = by_m.get(m)
        if row is None:
            return None, None
        return row.wall_time_s, row.wall_time_s / best_wall

    argmax_wall, argmax_ratio = lookup(cal.m_argmax)
    # B may recommend more primes than the table holds; divide by all of them
    usable_m_ratio = min(cal.m_ratio, cal.table_size)
    ratio_wall, ratio_ratio = lookup(usable_m_ratio)
    ok = (
        argmax_ratio is not None
        and ratio_ratio is not None
        and argmax_ratio <= threshold
        and ratio_ratio <= threshold
    )
    return PredictionCheck(
        best_m=report.best_m,
        best_wall_s=best_wall,
        m_argmax=cal.m_argmax,
        argmax_wall_s=argmax_wall,
        argmax_ratio=argmax_ratio,
        m_ratio=cal.m_ratio,
        ratio_wall_s=ratio_wall,
        ratio_ratio=ratio_ratio,
        threshold=threshold,
        ok=ok,
    )

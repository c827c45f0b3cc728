"""Command-line front end for probable-prime generation and calibration.

Subcommands: gen, sweep, usefulness, calibrate, selftest. Pass counts in all
outputs tally candidates submitted to the primality decision, not individual
witness rounds. Exit codes: 0 success, 1 invariant or fixture failure,
2 input error, 3 candidate cap exceeded.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from divstar.bignum import Natural
from divstar.calibration import (
    DEFAULT_REPETITIONS,
    DEFAULT_SURVIVOR_BUDGET,
    CalibrationReport,
    argmax_usefulness,
    calibrate,
    curve_to_csv,
    measure_usefulness,
    random_odd_start,
    ratio_bound,
)
from divstar.experiment import (
    DEFAULT_CANDIDATE_CAP,
    CandidateCapExceeded,
    find_probable_prime,
    sweep,
    sweep_to_csv,
    sweep_to_json,
)
from divstar.plot import line_chart_svg
from divstar.primality import MrConfig, is_probable_prime, witness
from divstar.primetable import (
    DEFAULT_TABLE_SIZE,
    PrimeTable,
    count_odd_primes_below,
)
from divstar.sieve import DivStarStream
from divstar import refdata

EXIT_OK = 0
EXIT_INVARIANT = 1
EXIT_INPUT = 2
EXIT_CAP = 3


def parse_pattern_text(text: str) -> list[int]:
    """One line of comma-separated, strictly ascending bit positions;
    whitespace and # comments are ignored."""
    payload = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            payload.append(line)
    if not payload:
        raise ValueError("pattern file holds no bit positions")
    if len(payload) > 1:
        raise ValueError("pattern file must hold a single line of bit positions")
    positions = []
    for field in payload[0].split(","):
        field = field.strip()
        try:
            positions.append(int(field))
        except ValueError:
            raise ValueError(f"bad bit position {field!r}") from None
    for a, b in zip(positions, positions[1:]):
        if b <= a:
            raise ValueError("bit positions must be strictly ascending")
    if positions[0] < 0:
        raise ValueError("bit positions must be non-negative")
    return positions


def load_pattern(path: str) -> Natural:
    return Natural.from_bits(parse_pattern_text(Path(path).read_text()))


def parse_m_list(text: str) -> list[int]:
    try:
        return [int(field.strip()) for field in text.split(",")]
    except ValueError:
        raise ValueError(f"bad m list {text!r}; expected comma-separated ints") from None


def _write_output(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _default_grid(table: PrimeTable) -> list[int]:
    return sorted({m for m in (0, 1, 2, 3, 10, 20, len(table)) if m <= len(table)})


def cmd_gen(args: argparse.Namespace) -> int:
    table = PrimeTable(args.table_size)
    seed = args.seed
    if seed is None:
        seed = random.SystemRandom().getrandbits(63)
    if args.pattern is not None and args.bits is not None:
        raise ValueError("pass either --bits or --pattern, not both")
    if args.pattern is not None:
        start = load_pattern(args.pattern)
    elif args.bits is not None:
        if args.bits < 16:
            raise ValueError("--bits must be at least 16")
        start = random_odd_start(args.bits, seed)
    else:
        raise ValueError("gen needs --bits or --pattern")

    cfg = MrConfig(rounds=args.rounds, base_strategy="seeded", seed=seed)
    if args.calibration:
        report = CalibrationReport.from_text(Path(args.calibration).read_text())
        m = min(report.m_argmax, len(table))
    else:
        report = calibrate(
            table,
            start=start,
            survivor_budget=args.survivors,
            repetitions=args.reps,
        )
        m = report.m_argmax

    prime, passes, candidates = find_probable_prime(start, m, table, cfg, cap=args.cap)
    print(f"prime_hex: {prime.to_hex()}")
    print(f"bits: {prime.bit_length()}")
    print(f"m: {m}")
    print(f"mr_passes: {passes}")
    print(f"candidates: {candidates}")
    print(f"seed: {seed}")
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    table = PrimeTable(args.table_size)
    start = load_pattern(args.pattern)
    ms = parse_m_list(args.m_list) if args.m_list else _default_grid(table)
    cfg = MrConfig(rounds=args.rounds, base_strategy="fixed")
    report = sweep(start, ms, table, cfg, cap=args.cap)
    text = sweep_to_json(report) if args.format == "json" else sweep_to_csv(report)
    _write_output(text, args.out)
    if args.plot:
        svg = line_chart_svg(
            [(row.m, row.wall_time_s) for row in report.rows],
            title="search wall time by trial-division count",
            x_label="m (first odd primes divided by)",
            y_label="wall time (s)",
        )
        Path(args.plot).write_text(svg)
    return EXIT_OK


def cmd_usefulness(args: argparse.Namespace) -> int:
    table = PrimeTable(args.table_size)
    start = load_pattern(args.pattern)
    ms = parse_m_list(args.m_list) if args.m_list else range(1, len(table) + 1)
    curve = measure_usefulness(start, ms, args.survivors, table, args.reps)
    _write_output(curve_to_csv(curve, mark_argmax=True), args.out)
    if args.plot:
        svg = line_chart_svg(
            [(row.m, row.u_seconds) for row in curve.rows],
            title="div* usefulness by trial-division count",
            x_label="m (first odd primes divided by)",
            y_label="U(m) = T(m)/m (s)",
        )
        Path(args.plot).write_text(svg)
    return EXIT_OK


def cmd_calibrate(args: argparse.Namespace) -> int:
    table = PrimeTable(args.table_size)
    if args.pattern is not None and args.bits is not None:
        raise ValueError("pass either --bits or --pattern, not both")
    if args.pattern is not None:
        report = calibrate(
            table,
            start=load_pattern(args.pattern),
            survivor_budget=args.survivors,
            repetitions=args.reps,
        )
    elif args.bits is not None:
        report = calibrate(
            table,
            bits=args.bits,
            survivor_budget=args.survivors,
            repetitions=args.reps,
            seed=args.seed,
        )
    else:
        raise ValueError("calibrate needs --bits or --pattern")
    text = report.to_csv() if args.format == "csv" else report.to_text()
    _write_output(text, args.out)
    return EXIT_OK


def selftest_checks(table: PrimeTable) -> list[tuple[str, object]]:
    """Timing-free fixture checks; each callable raises AssertionError on failure."""

    def check_prime_table() -> None:
        assert table[0] == 3, f"table starts at {table[0]}, expected 3"
        for i, p in enumerate(table):
            assert p % 2 == 1, f"even entry {p} in the odd-prime table"
            d = 3
            while d * d <= p:
                assert p % d != 0, f"composite entry {p} in the prime table"
                d += 2
            assert count_odd_primes_below(p + 1) == i + 1, (
                f"gap or duplicate near table entry {p}"
            )

    def check_legacy_curve_a() -> None:
        curve = refdata.legacy_curve_a()
        assert argmax_usefulness(curve) == refdata.LEGACY_ARGMAX_A, (
            f"curve A peaks at {argmax_usefulness(curve)}, "
            f"expected {refdata.LEGACY_ARGMAX_A}"
        )
        for m, t, u_printed in refdata.LEGACY_CURVE_A_ROWS:
            assert abs(t / m - u_printed) <= 0.006, (
                f"curve A row m={m}: recomputed U {t / m:.4f} is not the "
                f"recorded {u_printed}"
            )
        anchor = curve.row(20)
        assert abs(anchor.u_seconds - 0.18) <= 0.005, "curve A anchor row m=20 drifted"

    def check_legacy_curve_b() -> None:
        curve = refdata.legacy_curve_b()
        assert argmax_usefulness(curve) == refdata.LEGACY_ARGMAX_B
        assert curve.row(2).u_seconds == refdata.LEGACY_PEAK_B

    def check_legacy_quotients() -> None:
        (e1, d1), b1 = refdata.LEGACY_QUOTIENTS[0]
        (e2, d2), b2 = refdata.LEGACY_QUOTIENTS[1]
        got1, count1 = ratio_bound(e1, d1)
        got2, count2 = ratio_bound(e2, d2)
        assert abs(got1 - b1) <= 1, f"quotient {got1:.2f} is not near {b1}"
        assert abs(got2 - b2) <= 1, f"quotient {got2:.2f} is not near {b2}"
        assert count1 == 22, f"odd primes below {got1:.2f}: {count1}, expected 22"
        assert count2 == 31, f"odd primes below {got2:.2f}: {count2}, expected 31"

    def check_small_primality() -> None:
        limit = 2048
        composite = bytearray(limit)
        for i in range(3, limit, 2):
            if not composite[i]:
                for k in range(i * i, limit, 2 * i):
                    composite[k] = 1
        cfg = MrConfig(rounds=8)
        for n in range(3, limit, 2):
            verdict = is_probable_prime(Natural(n), cfg)
            assert verdict.probable_prime == (not composite[n]), (
                f"primality disagrees with the sieve at {n}"
            )

    def check_witness_fixtures() -> None:
        assert witness(Natural(2), Natural(9)) is True
        assert witness(Natural(2), Natural(7)) is False
        assert witness(Natural(21), Natural(221)) is False, "21 is a strong liar for 221"
        assert witness(Natural(2), Natural(221)) is True

    def check_sieve_fixtures() -> None:
        stream = DivStarStream(Natural(115), table, 2)
        assert int(stream.next_survivor()) == 119
        assert int(DivStarStream(Natural(3), table, 1).next_survivor()) == 3
        incremental = DivStarStream(Natural(10**9 + 7), table, 10, "incremental")
        naive = DivStarStream(Natural(10**9 + 7), table, 10, "naive")
        for _ in range(25):
            assert incremental.next_survivor() == naive.next_survivor()

    def check_search_fixtures() -> None:
        cfg = MrConfig(rounds=8)
        prime, passes, candidates = find_probable_prime(Natural(90), 0, table, cfg)
        assert (int(prime), passes, candidates) == (97, 4, 4)
        prime, passes, _ = find_probable_prime(Natural(90), 2, table, cfg)
        assert (int(prime), passes) == (97, 2)
        prime, passes, _ = find_probable_prime(Natural(97), len(table), table, cfg)
        assert (int(prime), passes) == (97, 1)

    def check_codec_fixtures() -> None:
        assert int(Natural.from_bits([0, 1, 2, 3, 4, 5, 6, 7, 10])) == 1279
        assert int(Natural.from_bits([0, 2, 3, 5, 8, 10])) == 1325
        assert Natural((1 << 255) + 1).rem_small(3) == 0

    return [
        ("prime table integrity", check_prime_table),
        ("legacy curve A fixtures", check_legacy_curve_a),
        ("legacy curve B fixtures", check_legacy_curve_b),
        ("legacy bound quotients", check_legacy_quotients),
        ("small-number primality oracle", check_small_primality),
        ("witness fixtures", check_witness_fixtures),
        ("div* stream fixtures", check_sieve_fixtures),
        ("search fixtures", check_search_fixtures),
        ("codec fixtures", check_codec_fixtures),
    ]


def cmd_selftest(args: argparse.Namespace) -> int:
    table = PrimeTable(args.table_size)
    failures = 0
    for name, check in selftest_checks(table):
        try:
            check()
        except AssertionError as exc:
            failures += 1
            print(f"FAIL {name}: {exc}")
        else:
            print(f"PASS {name}")
    if failures:
        print(f"{failures} selftest check(s) failed")
        return EXIT_INVARIANT
    print("all selftest checks passed")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="divstar",
        description=(
            "Generate large probable primes with a calibrated trial-division "
            "pre-filter. Reported pass counts are candidates submitted to the "
            "primality decision, not witness rounds."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--table-size",
            type=int,
            default=DEFAULT_TABLE_SIZE,
            help="how many odd primes the trial-division table holds (default 59)",
        )

    p_gen = sub.add_parser("gen", help="calibrate, then search for a probable prime")
    add_common(p_gen)
    p_gen.add_argument("--bits", type=int, help="width of the random start (>= 16)")
    p_gen.add_argument("--pattern", help="file with the start's bit positions")
    p_gen.add_argument("--seed", type=int, help="seed for the start and witness bases")
    p_gen.add_argument("--rounds", type=int, default=40, help="witness rounds (default 40)")
    p_gen.add_argument(
        "--survivors",
        type=int,
        default=DEFAULT_SURVIVOR_BUDGET,
        help="survivor budget per calibration timing run (default 64)",
    )
    p_gen.add_argument(
        "--reps",
        type=int,
        default=DEFAULT_REPETITIONS,
        help="timing repetitions per measurement (default 5)",
    )
    p_gen.add_argument(
        "--cap",
        type=int,
        default=DEFAULT_CANDIDATE_CAP,
        help="abort after this many submitted candidates (default 10^6)",
    )
    p_gen.add_argument(
        "--calibration",
        help="reuse a saved calibration report instead of measuring",
    )
    p_gen.set_defaults(func=cmd_gen)

    p_sweep = sub.add_parser("sweep", help="search once per m and compare costs")
    add_common(p_sweep)
    p_sweep.add_argument("--pattern", required=True, help="file with the start's bit positions")
    p_sweep.add_argument("--m-list", help="comma-separated m values (default small grid)")
    p_sweep.add_argument("--rounds", type=int, default=40, help="witness rounds (default 40)")
    p_sweep.add_argument("--cap", type=int, default=DEFAULT_CANDIDATE_CAP)
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.add_argument("--out", help="write the report here instead of stdout")
    p_sweep.add_argument("--plot", help="write an SVG of wall time vs m")
    p_sweep.set_defaults(func=cmd_sweep)

    p_use = sub.add_parser("usefulness", help="measure the div* usefulness curve")
    add_common(p_use)
    p_use.add_argument("--pattern", required=True, help="file with the start's bit positions")
    p_use.add_argument("--m-list", help="comma-separated m values (default 1..table size)")
    p_use.add_argument("--survivors", type=int, default=DEFAULT_SURVIVOR_BUDGET)
    p_use.add_argument("--reps", type=int, default=DEFAULT_REPETITIONS)
    p_use.add_argument("--out", help="write the CSV here instead of stdout")
    p_use.add_argument("--plot", help="write an SVG of U(m) vs m")
    p_use.set_defaults(func=cmd_usefulness)

    p_cal = sub.add_parser("calibrate", help="measure E, the curve, and both bounds")
    add_common(p_cal)
    p_cal.add_argument("--bits", type=int, help="width of the random start (>= 16)")
    p_cal.add_argument("--pattern", help="file with the start's bit positions")
    p_cal.add_argument("--seed", type=int, help="seed for the random start")
    p_cal.add_argument("--survivors", type=int, default=DEFAULT_SURVIVOR_BUDGET)
    p_cal.add_argument("--reps", type=int, default=DEFAULT_REPETITIONS)
    p_cal.add_argument("--format", choices=("text", "csv"), default="text")
    p_cal.add_argument("--out", help="write the report here instead of stdout")
    p_cal.set_defaults(func=cmd_calibrate)

    p_self = sub.add_parser("selftest", help="run the timing-free fixture checks")
    add_common(p_self)
    p_self.set_defaults(func=cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CandidateCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())

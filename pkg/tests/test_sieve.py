import pytest
from hypothesis import given, settings, strategies as st

from divstar.bignum import Natural
from divstar.primetable import PrimeTable
from divstar.sieve import DivStarStream

TABLE = PrimeTable()


def survivors(start: int, m: int, count: int, mode: str = "incremental") -> list[int]:
    stream = DivStarStream(Natural(start), TABLE, m, mode)
    return [int(stream.next_survivor()) for _ in range(count)]


def test_initial_positioning():
    assert survivors(9, 0, 1) == [9]
    assert survivors(10, 0, 1) == [11]
    assert survivors(0, 0, 3) == [1, 3, 5]


def test_known_survivor_sequence():
    # 115 divisible by 5, 117 by 3; 119 = 7*17 is coprime to both
    assert survivors(115, 2, 1) == [119]
    assert survivors(115, 2, 1, mode="naive") == [119]


def test_candidate_equal_to_active_prime_survives():
    assert survivors(3, 1, 3) == [3, 5, 7]
    assert survivors(3, 59, 5) == [3, 5, 7, 11, 13]
    assert survivors(3, 59, 5, mode="naive") == [3, 5, 7, 11, 13]
    # once past the table, ordinary filtering applies
    assert 283 in survivors(281, 59, 2)


def test_m_zero_yields_every_odd():
    assert survivors(91, 0, 5) == [91, 93, 95, 97, 99]


def test_survivor_correctness_and_completeness():
    stream = DivStarStream(Natural(1001), TABLE, 10)
    primes = TABLE.prefix(10)
    prev = 999
    for _ in range(50):
        v = int(stream.next_survivor())
        assert all(v % p != 0 for p in primes)
        for skipped in range(prev + 2, v, 2):
            assert any(skipped % p == 0 for p in primes)
        prev = v


def test_counters_and_cost():
    stream = DivStarStream(Natural(115), TABLE, 2)
    assert stream.filter_seconds == 0.0
    assert stream.candidates_examined == 0 and stream.survivors_yielded == 0
    stream.next_survivor()
    assert stream.candidates_examined == 3
    assert stream.survivors_yielded == 1
    assert stream.filter_seconds > 0.0
    cost_one = stream.filter_seconds
    stream.next_survivor()
    assert stream.filter_seconds >= cost_one
    assert stream.candidates_examined >= stream.survivors_yielded


def test_residue_invariant_holds_while_streaming():
    start = Natural.from_bits([0, 1, 2, 8, 10, 50, 100, 127])
    stream = DivStarStream(start, TABLE, 59)
    for _ in range(10):
        stream.next_survivor()
        expected = [stream.current.rem_small(p) for p in TABLE.prefix(59)]
        assert list(stream.residues) == expected


def test_monotone_survivor_count_in_m():
    counts = []
    for m in range(0, 60, 7):
        stream = DivStarStream(Natural(10001), TABLE, m)
        n = 0
        while int(stream.current) < 12001 or n == 0:
            if int(stream.next_survivor()) >= 12001:
                break
            n += 1
        counts.append(n)
    assert counts == sorted(counts, reverse=True)


def test_validation():
    with pytest.raises(ValueError):
        DivStarStream(Natural(9), TABLE, 60)
    with pytest.raises(ValueError):
        DivStarStream(Natural(9), TABLE, -1)
    with pytest.raises(ValueError):
        DivStarStream(Natural(9), TABLE, 1, mode="fast")  # type: ignore[arg-type]
    with pytest.raises(ValueError):
        DivStarStream(9, TABLE, 1)  # type: ignore[arg-type]


def test_iteration_protocol():
    stream = DivStarStream(Natural(91), TABLE, 2)
    got = []
    for v in stream:
        got.append(int(v))
        if len(got) == 3:
            break
    assert got == [91, 97, 101]


@settings(max_examples=60, deadline=None)
@given(
    st.integers(min_value=0, max_value=1 << 80),
    st.integers(min_value=0, max_value=59),
)
def test_mode_equivalence(start, m):
    a = DivStarStream(Natural(start), TABLE, m, "incremental")
    b = DivStarStream(Natural(start), TABLE, m, "naive")
    for _ in range(20):
        assert a.next_survivor() == b.next_survivor()
    assert a.candidates_examined == b.candidates_examined


def test_take_matches_one_at_a_time():
    cases = [(3, 3), (115, 2), (90, 0), (90, 59), (2**127 + 9, 20)]
    for start, m in cases:
        one = DivStarStream(Natural(start), TABLE, m)
        bulk = DivStarStream(Natural(start), TABLE, m)
        expected = [one.next_survivor() for _ in range(40)]
        assert bulk.take(40) == expected, f"start={start} m={m}"
        assert bulk.candidates_examined == one.candidates_examined
        assert bulk.survivors_yielded == 40
        assert bulk.residues == one.residues


def test_take_mixed_consumption_resumes():
    reference = DivStarStream(Natural(2**64 + 1), TABLE, 10)
    expected = [reference.next_survivor() for _ in range(30)]
    mixed = DivStarStream(Natural(2**64 + 1), TABLE, 10)
    got = mixed.take(7)
    got.append(mixed.next_survivor())
    got.extend(mixed.take(22))
    assert got == expected
    assert mixed.take(0) == []


def test_take_rejects_bad_count():
    stream = DivStarStream(Natural(9), TABLE, 1)
    with pytest.raises(ValueError):
        stream.take(-1)
    with pytest.raises(ValueError):
        stream.take(2.0)  # type: ignore[arg-type]


@settings(max_examples=30, deadline=None)
@given(
    st.integers(min_value=0, max_value=1 << 80),
    st.integers(min_value=0, max_value=59),
)
def test_take_equivalence_property(start, m):
    one = DivStarStream(Natural(start), TABLE, m)
    bulk = DivStarStream(Natural(start), TABLE, m)
    expected = [one.next_survivor() for _ in range(12)]
    assert bulk.take(12) == expected
    assert bulk.candidates_examined == one.candidates_examined

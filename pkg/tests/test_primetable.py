import pytest

from divstar.primetable import (
    DEFAULT_TABLE_SIZE,
    MAX_TABLE_SIZE,
    PrimeTable,
    count_odd_primes_below,
    first_primes,
)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def test_default_table():
    table = PrimeTable()
    assert len(table) == DEFAULT_TABLE_SIZE == 59
    assert table[0] == 3 and table[1] == 5 and table[2] == 7
    assert table.largest == 281
    assert 2 not in table
    assert 281 in table and 283 not in table


def test_entries_are_exactly_the_odd_primes():
    table = PrimeTable(100)
    assert all(_is_prime(p) for p in table)
    assert list(table) == sorted(table)
    odd_primes = [n for n in range(3, table.largest + 1, 2) if _is_prime(n)]
    assert list(table) == odd_primes


def test_prefix():
    table = PrimeTable(5)
    assert table.prefix(0) == ()
    assert table.prefix(3) == (3, 5, 7)
    assert table.prefix(5) == (3, 5, 7, 11, 13)
    with pytest.raises(ValueError):
        table.prefix(6)
    with pytest.raises(ValueError):
        table.prefix(-1)


def test_size_validation():
    for bad in (0, -1, MAX_TABLE_SIZE + 1, 2.0, "3", None):
        with pytest.raises(ValueError):
            PrimeTable(bad)  # type: ignore[arg-type]
    assert len(PrimeTable(1)) == 1
    assert PrimeTable(1).primes == (3,)


def test_count_odd_primes_below():
    assert count_odd_primes_below(3) == 0
    assert count_odd_primes_below(3.5) == 1
    assert count_odd_primes_below(4) == 1
    assert count_odd_primes_below(88) == 22
    assert count_odd_primes_below(88.22) == 22
    assert count_odd_primes_below(136) == 31
    assert count_odd_primes_below(136.07) == 31
    assert count_odd_primes_below(-5) == 0
    with pytest.raises(ValueError):
        count_odd_primes_below(float("inf"))
    with pytest.raises(ValueError):
        count_odd_primes_below(float("nan"))


def test_count_below_matches_table_positions():
    table = PrimeTable(200)
    for i, p in enumerate(table):
        assert count_odd_primes_below(p + 1) == i + 1
        assert count_odd_primes_below(p) == i


def test_first_primes():
    assert first_primes(0) == []
    assert first_primes(1) == [2]
    assert first_primes(5) == [2, 3, 5, 7, 11]
    assert all(_is_prime(p) for p in first_primes(50))
    with pytest.raises(ValueError):
        first_primes(-1)

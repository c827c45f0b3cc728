import random
from statistics import median

import pytest
from hypothesis import given, settings, strategies as st

from divstar.bignum import Natural
from divstar.primality import (
    MrConfig,
    Verdict,
    decompose,
    is_probable_prime,
    timed_single_pass,
    witness,
)

FIXED8 = MrConfig(rounds=8)


def _sieve(limit: int) -> bytearray:
    composite = bytearray(limit)
    for i in range(3, limit, 2):
        if not composite[i]:
            for k in range(i * i, limit, 2 * i):
                composite[k] = 1
    return composite


def test_decompose_known():
    assert decompose(Natural(9)) == (3, Natural(1))
    assert decompose(Natural(13)) == (2, Natural(3))
    assert decompose(Natural(17)) == (4, Natural(1))


@given(st.integers(min_value=1, max_value=1 << 256))
def test_decompose_round_trip(k):
    n = Natural(2 * k + 1)
    s, r = decompose(n)
    assert r.is_odd()
    assert (r << s).add_small(1) == n


def test_decompose_validation():
    for bad in (Natural(8), Natural(1), Natural(0)):
        with pytest.raises(ValueError):
            decompose(bad)


def test_witness_known_cases():
    assert witness(Natural(2), Natural(7)) is False
    assert witness(Natural(2), Natural(9)) is True
    # 221 = 13 * 17; its strong liars include 21
    assert witness(Natural(21), Natural(221)) is False
    assert witness(Natural(47), Natural(221)) is False
    assert witness(Natural(2), Natural(221)) is True


def test_witness_base_range():
    with pytest.raises(ValueError):
        witness(Natural(1), Natural(9))
    with pytest.raises(ValueError):
        witness(Natural(8), Natural(9))
    with pytest.raises(ValueError):
        witness(Natural(2), Natural(3))


def test_witness_implies_composite_on_word_sized():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randrange(5, 1 << 16) | 1
        a = rng.randrange(2, n - 1)
        if witness(Natural(a), Natural(n)):
            assert any(n % d == 0 for d in range(2, int(n**0.5) + 1))


def test_verdicts_on_small_numbers():
    assert is_probable_prime(Natural(2), FIXED8).probable_prime
    assert is_probable_prime(Natural(3), FIXED8).probable_prime
    v4 = is_probable_prime(Natural(4), FIXED8)
    assert not v4.probable_prime and v4.witness == Natural(2)
    v25 = is_probable_prime(Natural(25), FIXED8)
    assert not v25.probable_prime and v25.witness == Natural(2)
    with pytest.raises(ValueError):
        is_probable_prime(Natural(1), FIXED8)


def test_agreement_with_sieve_up_to_4096():
    limit = 4096
    composite = _sieve(limit)
    for n in range(3, limit, 2):
        verdict = is_probable_prime(Natural(n), FIXED8)
        assert verdict.probable_prime == (not composite[n]), n


def test_no_prime_declared_composite_with_random_bases():
    limit = 3000
    composite = _sieve(limit)
    cfg = MrConfig(rounds=10, base_strategy="seeded", seed=99)
    for n in range(5, limit, 2):
        if not composite[n]:
            assert is_probable_prime(Natural(n), cfg).probable_prime, n


def test_determinism():
    n = Natural.from_bits([0, 1, 2, 8, 10, 50, 100, 127])
    fixed = MrConfig(rounds=6)
    seeded = MrConfig(rounds=6, base_strategy="seeded", seed=1234)
    assert is_probable_prime(n, fixed) == is_probable_prime(n, fixed)
    assert is_probable_prime(n, seeded) == is_probable_prime(n, seeded)


def test_seeded_strategy_draws_in_range():
    # tiny n exercises the reduction into [2, n-2]
    cfg = MrConfig(rounds=50, base_strategy="seeded", seed=7)
    assert is_probable_prime(Natural(5), cfg).probable_prime
    assert not is_probable_prime(Natural(9), cfg).probable_prime


def test_config_validation():
    with pytest.raises(ValueError):
        MrConfig(rounds=0)
    with pytest.raises(ValueError):
        MrConfig(base_strategy="prime")  # type: ignore[arg-type]
    with pytest.raises(ValueError):
        MrConfig(base_strategy="seeded")
    with pytest.raises(ValueError):
        MrConfig(base_strategy="seeded", seed=1 << 64)
    with pytest.raises(ValueError):
        MrConfig(seed=5)


def test_verdict_invariant():
    with pytest.raises(ValueError):
        Verdict(probable_prime=False)


def test_rounds_used_reporting():
    v = is_probable_prime(Natural(97), MrConfig(rounds=5))
    assert v.probable_prime and v.rounds_used == 5
    v = is_probable_prime(Natural(221), MrConfig(rounds=5))
    assert not v.probable_prime and v.rounds_used == 1


def test_timed_single_pass():
    small = Natural.from_bits([0, 1, 2, 8, 10, 50, 100, 127])
    assert timed_single_pass(small) > 0.0
    with pytest.raises(ValueError):
        timed_single_pass(Natural(8))


@settings(max_examples=5, deadline=None)
@given(st.randoms(use_true_random=False))
def test_timed_pass_grows_with_width(rng):
    small = Natural((rng.getrandbits(254) << 1) | (1 << 255) | 1)
    big = Natural((rng.getrandbits(1022) << 1) | (1 << 1023) | 1)
    t_small = median(timed_single_pass(small) for _ in range(5))
    t_big = median(timed_single_pass(big) for _ in range(5))
    assert t_big > t_small

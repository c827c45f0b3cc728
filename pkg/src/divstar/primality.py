"""Strong-pseudoprime testing with deterministic or seeded base schedules."""

from __future__ import annotations

import random
from dataclasses import dataclass
from time import perf_counter

from divstar.bignum import ONE, TWO, Natural, mod_pow
from divstar.primetable import first_primes

BASE_STRATEGIES = ("fixed", "seeded")

_THREE = Natural(3)


@dataclass(frozen=True)
class MrConfig:
    """Test parameters: round count and how witness bases are chosen.

    "fixed" draws bases from the first `rounds` primes (2, 3, 5, ...), which
    makes verdicts and pass counts fully reproducible. "seeded" draws uniform
    bases from a PRNG and requires a seed.
    """

    rounds: int = 40
    base_strategy: str = "fixed"
    seed: int | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.rounds, int) or self.rounds < 1:
            raise ValueError(f"rounds must be a positive int, got {self.rounds!r}")
        if self.base_strategy not in BASE_STRATEGIES:
            raise ValueError(
                f"base_strategy must be one of {BASE_STRATEGIES}, got {self.base_strategy!r}"
            )
        if self.base_strategy == "seeded":
            if self.seed is None:
                raise ValueError("the seeded base strategy requires a seed")
            if not isinstance(self.seed, int) or not 0 <= self.seed < 1 << 64:
                raise ValueError(f"seed must be a 64-bit int, got {self.seed!r}")
        elif self.seed is not None:
            raise ValueError("a seed is only meaningful with the seeded base strategy")


@dataclass(frozen=True)
class Verdict:
    probable_prime: bool
    witness: Natural | None = None
    rounds_used: int = 0

    def __post_init__(self) -> None:
        if not self.probable_prime and self.witness is None:
            raise ValueError("a composite verdict must carry its witness")


def _require_odd_candidate(n: Natural) -> None:
    if not isinstance(n, Natural):
        raise ValueError(f"expected a Natural, got {n!r}")
    if not n.is_odd() or n < _THREE:
        raise ValueError(f"n must be odd and at least 3, got {n}")


def decompose(n: Natural) -> tuple[int, Natural]:
    """Write n - 1 as 2**s * r with r odd; returns (s, r)."""
    _require_odd_candidate(n)
    n_minus_one = n - ONE
    s = n_minus_one.trailing_zeros()
    return s, n_minus_one >> s


def witness(a: Natural, n: Natural) -> bool:
    """True iff base a proves n composite in one strong-pseudoprime round."""
    _require_odd_candidate(n)
    if not isinstance(a, Natural):
        raise ValueError(f"base must be a Natural, got {a!r}")
    n_minus_one = n - ONE
    if a < TWO or a > n - TWO:
        raise ValueError(f"base must lie in [2, n-2], got {a}")
    s, r = decompose(n)
    x = mod_pow(a, r, n)
    if x == ONE or x == n_minus_one:
        return False
    for _ in range(s - 1):
        x = (x * x).div_rem(n)[1]
        if x == n_minus_one:
            return False
    return True


def _bases(cfg: MrConfig, n: Natural):
    n_minus_two = n - TWO
    if cfg.base_strategy == "fixed":
        for p in first_primes(cfg.rounds):
            a = Natural(p)
            if a > n_minus_two:
                a = a.div_rem(n)[1]
                if a < TWO or a > n_minus_two:
                    continue
            yield a
    else:
        rng = random.Random(cfg.seed)
        span = n - _THREE
        bits = n.bit_length() + 64
        for _ in range(cfg.rounds):
            draw = Natural(rng.getrandbits(bits))
            yield draw.div_rem(span)[1].add_small(2)


def is_probable_prime(n: Natural, cfg: MrConfig) -> Verdict:
    """Run cfg.rounds witness rounds; any witness yields a composite verdict.

    Bases that reduce to 0, 1, or n-1 for tiny n are skipped as inconclusive,
    so rounds_used may fall short of cfg.rounds for single-word candidates.
    """
    if not isinstance(n, Natural) or n < TWO:
        raise ValueError(f"n must be a Natural >= 2, got {n!r}")
    if n == TWO or n == _THREE:
        return Verdict(True)
    if not n.is_odd():
        return Verdict(False, witness=TWO)
    rounds_used = 0
    for a in _bases(cfg, n):
        rounds_used += 1
        if witness(a, n):
            return Verdict(False, witness=a, rounds_used=rounds_used)
    return Verdict(True, rounds_used=rounds_used)


def timed_single_pass(n: Natural) -> float:
    """Wall time of one full witness round on n: the modular exponentiation
    plus every squaring, with no early exit."""
    s, r = decompose(n)
    t0 = perf_counter()
    x = mod_pow(TWO, r, n)
    for _ in range(s - 1):
        x = (x * x).div_rem(n)[1]
    return perf_counter() - t0

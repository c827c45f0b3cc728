"""Probable-prime generation with a calibrated trial-division pre-filter."""

from divstar.bignum import Natural, mod_pow
from divstar.calibration import (
    CalibrationReport,
    CurveRow,
    UsefulnessCurve,
    argmax_usefulness,
    calibrate,
    measure_usefulness,
    random_odd_start,
    ratio_bound,
)
from divstar.experiment import (
    CandidateCapExceeded,
    PredictionCheck,
    SweepReport,
    SweepRow,
    find_probable_prime,
    sweep,
    validate_prediction,
)
from divstar.primality import (
    MrConfig,
    Verdict,
    decompose,
    is_probable_prime,
    timed_single_pass,
    witness,
)
from divstar.primetable import PrimeTable, count_odd_primes_below, first_primes
from divstar.sieve import DivStarStream

__all__ = [
    "CalibrationReport",
    "CandidateCapExceeded",
    "CurveRow",
    "DivStarStream",
    "MrConfig",
    "Natural",
    "PredictionCheck",
    "PrimeTable",
    "SweepReport",
    "SweepRow",
    "UsefulnessCurve",
    "Verdict",
    "argmax_usefulness",
    "calibrate",
    "count_odd_primes_below",
    "decompose",
    "find_probable_prime",
    "first_primes",
    "is_probable_prime",
    "measure_usefulness",
    "mod_pow",
    "random_odd_start",
    "ratio_bound",
    "sweep",
    "timed_single_pass",
    "validate_prediction",
    "witness",
]

"""Reference measurements recorded on a legacy machine.

The absolute seconds are specific to that machine and are never reproduced
here; what these rows pin down is machine-independent structure: where the
usefulness curve peaks, and the bound quotients B = E/D that the curve
implies. The printed usefulness values were truncated to two decimals in the
original report, so recomputing T/m can differ from the printed figure by a
little more than half a cent (rows m=11 and m=59 of the first curve).
"""

from __future__ import annotations

from divstar.calibration import CurveRow, UsefulnessCurve

# 256-bit workload: (m, T_seconds, U_printed)
LEGACY_CURVE_A_ROWS = (
    (1, 0.0, 0.0),
    (2, 0.25, 0.12),
    (3, 0.25, 0.08),
    (4, 0.35, 0.09),
    (5, 0.45, 0.09),
    (6, 0.53, 0.09),
    (7, 0.64, 0.09),
    (8, 0.73, 0.09),
    (9, 0.84, 0.09),
    (10, 0.85, 0.08),
    (11, 0.94, 0.08),
    (12, 1.05, 0.09),
    (13, 1.17, 0.09),
    (14, 1.26, 0.09),
    (15, 1.36, 0.09),
    (16, 1.46, 0.09),
    (17, 1.56, 0.09),
    (18, 1.64, 0.09),
    (19, 1.75, 0.09),
    (20, 3.6, 0.18),
    (21, 3.7, 0.18),
    (22, 3.82, 0.17),
    (25, 4.17, 0.17),
    (30, 4.7, 0.16),
    (35, 5.18, 0.15),
    (45, 6.08, 0.14),
    (59, 7.42, 0.12),
)

# 128-bit workload: (m, U_seconds); only usefulness was recorded
LEGACY_CURVE_B_ROWS = (
    (1, 0.0),
    (2, 0.085),
    (3, 0.05),
    (4, 0.055),
    (10, 0.055),
    (25, 0.062),
    (35, 0.063),
    (45, 0.064),
    (59, 0.063),
)

# (E_seconds, D_seconds) -> reported bound
LEGACY_QUOTIENTS = (
    ((15.88, 0.18), 88),
    ((15.92, 0.117), 136),
)

# The curve-A peak and the curve-B peak as reported
LEGACY_ARGMAX_A = 20
LEGACY_ARGMAX_B = 2
LEGACY_PEAK_B = 0.085


def legacy_curve_a() -> UsefulnessCurve:
    """Curve A with usefulness recomputed as T/m (m=1 has T=0, so U=0)."""
    rows = tuple(CurveRow(m, t, t / m) for m, t, _ in LEGACY_CURVE_A_ROWS)
    return UsefulnessCurve(rows, start_hex="legacy-a", survivor_budget=0)


def legacy_curve_b() -> UsefulnessCurve:
    """Curve B reconstructed from the recorded usefulness column."""
    rows = tuple(CurveRow(m, u * m, u) for m, u in LEGACY_CURVE_B_ROWS)
    return UsefulnessCurve(rows, start_hex="legacy-b", survivor_budget=0)

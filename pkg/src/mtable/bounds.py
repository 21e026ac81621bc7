"""Explicit upper bounds for d(n) and sigma(n), and checks built on them.

Two classical effective bounds are implemented with fixed constants:

    nicolas_bound(n) = n ** ((ln 2 / ln ln n) * (1 + c / ln ln n)),
        c = 387/200, an upper bound for the divisor count d(n), n >= 3;
    robin_bound(n)   = e**gamma * n * ln ln n + c * n / ln ln n,
        c = 3241/5000, compared against sigma(n), n >= 3.

Sweep verifiers report every argument whose value crosses its bound.  A
comparison only counts as a violation when it fails by more than a
relative slack of 1e-12; anything inside the band is flagged borderline
instead, so float rounding can never manufacture or hide a violation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .divisors import divisor_sieve, incomplete_divisor_integral

__all__ = [
    "BoundReport",
    "nicolas_bound",
    "robin_bound",
    "verify_divisor_bound",
    "verify_sigma_bound",
    "verify_integral_bracket",
    "verify_theorem_lower_bound",
    "verify_mean_bound",
    "nicolas_monotonicity_check",
    "nicolas_floor_check",
    "reference_densities",
]

NICOLAS_C = Fraction(387, 200)
ROBIN_C = Fraction(3241, 5000)
# Alternate constant seen in the literature for the sigma bound; with it
# the n = 12 near-miss lands on the other side of the bound.
ROBIN_C_ALTERNATE = Fraction(6483, 10000)

# Euler-Mascheroni constant, fixed at 10 significant digits so every
# build produces identical binary64 results.
EULER_GAMMA = 0.5772156649

RELATIVE_SLACK = 1e-12

_LN2 = math.log(2)

# Exponent used by the reference density curves below, together with the
# value more commonly quoted for the same asymptotic; they differ, so
# both are exposed and the curves are descriptive only.
ERDOS_EXPONENT = 1 + math.log(_LN2) / _LN2
ERDOS_EXPONENT_COMMON = 1 - (1 + math.log(_LN2)) / _LN2


def _default_constants() -> dict:
    return {"nicolas_c": NICOLAS_C, "robin_c": ROBIN_C, "gamma": EULER_GAMMA}


@dataclass(frozen=True)
class BoundReport:
    """Outcome of one bound comparison.

    value is the exact integer side of the inequality; bound is the
    binary64 side (a pair for brackets, where margin is instead the
    distance from value to the nearest edge, positive inside).  For
    single bounds margin = bound - value, so its healthy sign depends on
    the direction of the inequality: positive for upper bounds
    (divisor_count, divisor_sum, the scaled mean check), negative for
    the lower bound on the distinct count.  violated is True only when
    the failure exceeds the relative slack; borderline marks any
    comparison inside the slack band.
    """

    argument: int
    quantity: str
    value: int | float
    bound: float | tuple[float, float]
    margin: float
    violated: bool
    borderline: bool
    constants_used: dict = field(default_factory=_default_constants)


def _slack(scale: float) -> float:
    return RELATIVE_SLACK * max(1.0, abs(scale))


def _classify_upper(margin: float, scale: float) -> tuple[bool, bool]:
    # value must stay at or below bound: healthy margin is positive
    s = _slack(scale)
    return margin < -s, abs(margin) <= s


def _classify_lower(margin: float, scale: float) -> tuple[bool, bool]:
    # value must stay at or above bound: healthy margin is negative
    s = _slack(scale)
    return margin > s, abs(margin) <= s


def _require_n(n: int, least: int):
    if n < least:
        raise ValueError(f"n must be >= {least}, got {n}")


def nicolas_bound(n: int, c: Fraction | float = NICOLAS_C) -> float:
    """Upper bound for d(n), valid for n >= 3."""
    _require_n(n, 3)
    loglog = math.log(math.log(n))
    return math.exp(math.log(n) * (_LN2 / loglog) * (1.0 + float(c) / loglog))


def robin_bound(n: int, c: Fraction | float = ROBIN_C) -> float:
    """Upper bound compared against sigma(n), for n >= 3."""
    _require_n(n, 3)
    loglog = math.log(math.log(n))
    return math.exp(EULER_GAMMA) * n * loglog + float(c) * n / loglog


def _nicolas_values(ns: np.ndarray, c: float) -> np.ndarray:
    logs = np.log(ns)
    loglogs = np.log(logs)
    return np.exp(logs * (_LN2 / loglogs) * (1.0 + c / loglogs))


def _robin_values(ns: np.ndarray, c: float) -> np.ndarray:
    loglogs = np.log(np.log(ns))
    return math.exp(EULER_GAMMA) * ns * loglogs + c * ns / loglogs


def _upper_sweep(
    lo: int,
    values: np.ndarray,
    bounds: np.ndarray,
    quantity: str,
    constants: dict,
) -> list[BoundReport]:
    margins = bounds - values
    slack = RELATIVE_SLACK * np.maximum(1.0, np.abs(bounds))
    flagged = np.nonzero(margins <= slack)[0]
    reports = []
    for idx in flagged:
        margin = float(margins[idx])
        violated, borderline = _classify_upper(margin, float(bounds[idx]))
        reports.append(
            BoundReport(
                argument=lo + int(idx),
                quantity=quantity,
                value=int(values[idx]),
                bound=float(bounds[idx]),
                margin=margin,
                violated=violated,
                borderline=borderline,
                constants_used=constants,
            )
        )
    return reports


def verify_divisor_bound(
    lo: int = 3, hi: int = 10**6, c: Fraction | float = NICOLAS_C
) -> list[BoundReport]:
    """Check d(n) <= nicolas_bound(n) for every n in [lo, hi].

    Returns only the arguments that violate the bound or land inside the
    slack band; an empty list means the bound held everywhere.
    """
    _require_n(lo, 3)
    if hi < lo:
        raise ValueError(f"empty range [{lo}, {hi}]")
    d, _ = divisor_sieve(hi)
    ns = np.arange(lo, hi + 1, dtype=np.float64)
    bounds = _nicolas_values(ns, float(c))
    constants = dict(_default_constants(), nicolas_c=Fraction(c))
    return _upper_sweep(lo, d[lo:].astype(np.float64), bounds, "divisor_count", constants)


def verify_sigma_bound(
    lo: int = 3, hi: int = 10**6, c: Fraction | float = ROBIN_C
) -> list[BoundReport]:
    """Check sigma(n) < robin_bound(n, c) for every n in [lo, hi].

    With the default constant the sweep to 1e6 reports exactly one
    violation, at n = 12; with ROBIN_C_ALTERNATE it reports none.
    """
    _require_n(lo, 3)
    if hi < lo:
        raise ValueError(f"empty range [{lo}, {hi}]")
    _, sigma = divisor_sieve(hi)
    ns = np.arange(lo, hi + 1, dtype=np.float64)
    bounds = _robin_values(ns, float(c))
    constants = dict(_default_constants(), robin_c=Fraction(c))
    return _upper_sweep(lo, sigma[lo:].astype(np.float64), bounds, "divisor_sum", constants)


def verify_integral_bracket(
    k: int,
    robin_c: Fraction | float = ROBIN_C,
    nicolas_c: Fraction | float = NICOLAS_C,
) -> BoundReport:
    """Bracket k*d(k) - sigma(k) strictly between 2k - robin_bound(k)
    and k*nicolas_bound(k) - k - 1, for k >= 3."""
    _require_n(k, 3)
    middle = incomplete_divisor_integral(k)
    lower = 2.0 * k - robin_bound(k, robin_c)
    upper = k * nicolas_bound(k, nicolas_c) - k - 1.0
    margin = min(middle - lower, upper - middle)
    s = _slack(max(abs(middle), 1.0))
    return BoundReport(
        argument=k,
        quantity="integral",
        value=middle,
        bound=(lower, upper),
        margin=margin,
        violated=margin < -s,
        borderline=abs(margin) <= s,
        constants_used=dict(
            _default_constants(), robin_c=Fraction(robin_c), nicolas_c=Fraction(nicolas_c)
        ),
    )


def verify_theorem_lower_bound(n: int, m: int) -> BoundReport:
    """Check M(n) >= n^2 / nicolas_bound(n^2), for n >= 2.

    m is the distinct-product count M(n), supplied by the caller; the
    healthy margin (bound - value) is negative here.
    """
    _require_n(n, 2)
    floor = n * n / nicolas_bound(n * n)
    margin = floor - m
    violated, borderline = _classify_lower(margin, floor)
    return BoundReport(
        argument=n,
        quantity="table_count",
        value=m,
        bound=floor,
        margin=margin,
        violated=violated,
        borderline=borderline,
    )


def verify_mean_bound(n: int, m: int) -> BoundReport:
    """Check n^2 / M(n) <= nicolas_bound(n^2) for n >= 2.

    The inequality is scaled by m so the compared value n^2 stays an
    exact integer: n^2 <= m * nicolas_bound(n^2).  The chain step
    max(12, bound) = bound is verified on the way (the bound never dips
    to 12 on this domain).
    """
    _require_n(n, 2)
    cap = nicolas_bound(n * n)
    if max(12.0, cap) != cap:
        raise RuntimeError(f"nicolas_bound({n * n}) = {cap} fell below 12")
    value = n * n
    bound = m * cap
    margin = bound - value
    violated, borderline = _classify_upper(margin, bound)
    return BoundReport(
        argument=n,
        quantity="table_count",
        value=value,
        bound=bound,
        margin=margin,
        violated=violated,
        borderline=borderline,
    )


def nicolas_monotonicity_check(lo: int = 114, hi: int = 10**6) -> bool:
    """True iff nicolas_bound(n+1) > nicolas_bound(n) for every integer
    n in [lo, hi).  The bound is increasing from n = 114 on, so lo must
    be at least 114."""
    _require_n(lo, 114)
    if hi <= lo:
        raise ValueError(f"empty range [{lo}, {hi})")
    ns = np.arange(lo, hi + 1, dtype=np.float64)
    vals = _nicolas_values(ns, float(NICOLAS_C))
    return bool(np.all(np.diff(vals) > 0.0))


def nicolas_floor_check(lo: int = 3, hi: int = 10**6, floor: float = 114.1) -> bool:
    """True iff nicolas_bound(n) > floor for every integer n in [lo, hi].

    The bound reaches its minimum near n = 114 yet stays above 114.1.
    """
    _require_n(lo, 3)
    if hi < lo:
        raise ValueError(f"empty range [{lo}, {hi}]")
    ns = np.arange(lo, hi + 1, dtype=np.float64)
    vals = _nicolas_values(ns, float(NICOLAS_C))
    return bool(np.all(vals > floor))


def reference_densities(n: int) -> dict:
    """Descriptive density curves for the distinct-product ratio M(n)/n^2.

    Uses the exponent c = 1 + ln(ln 2)/ln 2 (about 0.4712) in both
    curves; note the exponent usually quoted for this asymptotic is
    1 - (1 + ln(ln 2))/ln 2 (about 0.0861), exposed separately as
    ERDOS_EXPONENT_COMMON.  These values are reported for side-by-side
    comparison only and are never asserted against measured densities.
    """
    _require_n(n, 3)
    logn = math.log(n)
    erdos = logn ** (-ERDOS_EXPONENT)
    ford = erdos * math.log(logn) ** (-1.5)
    return {
        "erdos_paper_c": ERDOS_EXPONENT,
        "erdos_density": erdos,
        "ford_density": ford,
    }

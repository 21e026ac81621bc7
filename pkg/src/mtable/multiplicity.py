"""Multiplicity of products in an n-by-n multiplication table.

The multiplicity of k in the n-table is the number of ordered pairs
(a, b) with 1 <= a, b <= n and a*b = k.  Two independent routes compute
it: direct enumeration over the divisors of k, and a closed form built
from incomplete divisor counts plus a boundary indicator.  The closed
form is only valid inside the table (k <= n*n) and is rejected outside
that domain.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .divisors import _divisor_tuple, divisor_count, incomplete_divisor_count

__all__ = [
    "MultiplicityRecord",
    "multiplicity_direct",
    "multiplicity_formula",
    "boundary_indicator",
    "universal_multiplicity",
    "table_multiplicities",
    "table_multiplicities_formula",
    "table_sum_checks",
]

# Full-table arrays hold n*n + 1 int64 entries; 4096 keeps that under 135 MB.
TABLE_N_MAX = 4096

# table_sum_checks switches from per-k divisor enumeration to per-row
# product enumeration above this n (the divisor route is O(n^2 sqrt(n))).
_DIVISORWISE_MAX = 64

# Row sums in the product-wise route stay within int64 for n up to 1e5.
_SUM_CHECK_N_MAX = 100_000


@dataclass(frozen=True)
class MultiplicityRecord:
    n: int
    k: int
    count: int
    method: Literal["direct", "formula"]

    @classmethod
    def compute(cls, n: int, k: int, method: str) -> "MultiplicityRecord":
        if method == "direct":
            count = multiplicity_direct(n, k)
        elif method == "formula":
            count = multiplicity_formula(n, k)
        else:
            raise ValueError(f"method must be 'direct' or 'formula', got {method!r}")
        return cls(n=n, k=k, count=count, method=method)


def _check_args(n: int, k: int):
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")


def multiplicity_direct(n: int, k: int) -> int:
    """Number of ordered pairs (a, b) in [1, n]^2 with a*b = k.

    Counts divisors a of k whose cofactor k/a also lies in [1, n]; this
    is the enumeration route the closed form is tested against.
    """
    _check_args(n, k)
    return sum(1 for a in _divisor_tuple(k) if a <= n and k // a <= n)


def boundary_indicator(n: int, k: int) -> int:
    """1 if n divides k, else 0.

    Evaluated both as the floor difference floor(k/n) - floor((k-1)/n)
    and as a direct divisibility test; the two must agree.
    """
    _check_args(n, k)
    by_floor = k // n - (k - 1) // n
    by_division = 1 if k % n == 0 else 0
    if by_floor != by_division:
        raise RuntimeError(
            f"floor-difference {by_floor} disagrees with divisibility "
            f"{by_division} at n={n}, k={k}"
        )
    return by_floor


def multiplicity_formula(n: int, k: int) -> int:
    """Closed-form multiplicity d(k; n) - d(k; k/n) + [n | k], for k <= n*n.

    The subtracted term is evaluated with the exact integer test a*n <= k
    rather than a float division, so no divisor is misclassified at the
    k/n boundary.  Outside the table the identity does not hold (at n=2,
    k=12 it would give -2 instead of 0), hence the domain check.
    """
    _check_args(n, k)
    if k > n * n:
        raise ValueError(
            f"multiplicity_formula requires k <= n*n, got n={n}, k={k}"
        )
    within = incomplete_divisor_count(k, n)
    below_quotient = sum(1 for a in _divisor_tuple(k) if a * n <= k)
    return within - below_quotient + boundary_indicator(n, k)


def universal_multiplicity(k: int, *, verify: bool = False) -> int:
    """Multiplicity of k once the table is large enough to stop growing.

    For n >= k every divisor pair of k fits, so the count equals d(k).
    verify=True re-derives the value by direct enumeration at n = k and
    n = k + 1 and checks stabilization.
    """
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    d = divisor_count(k)
    if verify:
        at_k = multiplicity_direct(k, k)
        past_k = multiplicity_direct(k + 1, k)
        if not (at_k == past_k == d):
            raise RuntimeError(
                f"multiplicity failed to stabilize at d(k): "
                f"k={k}, d={d}, at n=k: {at_k}, at n=k+1: {past_k}"
            )
    return d


def _check_table_n(n: int):
    if not 1 <= n <= TABLE_N_MAX:
        raise ValueError(f"n must be in [1, {TABLE_N_MAX}], got {n}")


def table_multiplicities(n: int) -> np.ndarray:
    """Multiplicities of every k in [0, n*n] by direct product marking.

    Row a contributes one count at each of a, 2a, ..., na; entry 0 is
    always 0.
    """
    _check_table_n(n)
    counts = np.zeros(n * n + 1, dtype=np.int64)
    for a in range(1, n + 1):
        counts[a : a * n + 1 : a] += 1
    return counts


def table_multiplicities_formula(n: int) -> np.ndarray:
    """Same table as table_multiplicities, via the closed form.

    For each a <= n: +1 at every multiple of a (the d(k; n) term), -1 at
    multiples of a that are >= a*n (the d(k; k/n) term, using the exact
    a*n <= k test), and +1 at multiples of n (the boundary indicator).
    All three passes are integer strided writes, so the result is exact.
    """
    _check_table_n(n)
    top = n * n
    counts = np.zeros(top + 1, dtype=np.int64)
    for a in range(1, n + 1):
        counts[a :: a] += 1
        counts[a * n :: a] -= 1
    counts[n :: n] += 1
    return counts


def table_sum_checks(
    n: int, method: Literal["auto", "divisor", "product"] = "auto"
) -> tuple[int, int]:
    """(sum of k * multiplicity, sum of multiplicities) over the n-table.

    Both sums are accumulated exactly and should equal (n*(n+1)/2)^2 and
    n^2 respectively; callers compare against those closed forms.  The
    divisor route walks every k in [1, n*n], the product route walks
    every row, and 'auto' picks by size.
    """
    if not 1 <= n <= _SUM_CHECK_N_MAX:
        raise ValueError(f"n must be in [1, {_SUM_CHECK_N_MAX}], got {n}")
    if method == "auto":
        method = "divisor" if n <= _DIVISORWISE_MAX else "product"
    if method == "divisor":
        plain = 0
        weighted = 0
        for k in range(1, n * n + 1):
            m = multiplicity_direct(n, k)
            plain += m
            weighted += k * m
        return weighted, plain
    if method == "product":
        row = np.arange(1, n + 1, dtype=np.int64)
        plain = 0
        weighted = 0
        for a in range(1, n + 1):
            products = a * row
            plain += products.size
            weighted += int(products.sum())
        return weighted, plain
    raise ValueError(f"method must be 'auto', 'divisor' or 'product', got {method!r}")

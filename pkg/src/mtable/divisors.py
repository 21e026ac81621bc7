"""Exact divisor arithmetic.

Single-value routines enumerate divisors by trial division up to sqrt(k);
ranged routines sieve d(m) and sigma(m) for every m up to a limit in one
pass.  The incomplete divisor count d(k; x) restricts to divisors <= x,
and its integral over [1, k] has the closed form k*d(k) - sigma(k), which
this module can cross-check against the raw step-function sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "DivisorProfile",
    "divisor_list",
    "divisor_count",
    "divisor_sum",
    "incomplete_divisor_count",
    "divisor_sieve",
    "incomplete_divisor_integral",
]

# Scalar routines accept any k whose divisors trial division can reach;
# beyond 2**63 - 1 callers are out of the supported range.
MAX_K = 2**63 - 1


@dataclass(frozen=True)
class DivisorProfile:
    """All divisors of one integer, with the count and sum precomputed.

    Direct construction checks that the tuple is ascending, bracketed by
    1 and k, made of actual divisors, and consistent with d and sigma;
    completeness is not re-derived, so build through from_k unless the
    full divisor tuple is already known.
    """

    k: int
    divisors: tuple[int, ...]
    d: int
    sigma: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k}")
        if list(self.divisors) != sorted(set(self.divisors)):
            raise ValueError("divisors must be strictly ascending")
        if not self.divisors or self.divisors[0] != 1 or self.divisors[-1] != self.k:
            raise ValueError("divisors must start at 1 and end at k")
        if any(self.k % m for m in self.divisors):
            raise ValueError("divisors must all divide k")
        if self.d != len(self.divisors) or self.sigma != sum(self.divisors):
            raise ValueError("d/sigma inconsistent with the divisor tuple")

    @classmethod
    def from_k(cls, k: int) -> "DivisorProfile":
        divs = _divisor_tuple(k)
        return cls(k=k, divisors=divs, d=len(divs), sigma=sum(divs))


@lru_cache(maxsize=1 << 15)
def _divisor_tuple(k: int) -> tuple[int, ...]:
    if not 1 <= k <= MAX_K:
        raise ValueError(f"k must be in [1, 2**63 - 1], got {k}")
    small = []
    large = []
    i = 1
    while i * i <= k:
        if k % i == 0:
            small.append(i)
            if i != k // i:
                large.append(k // i)
        i += 1
    return tuple(small + large[::-1])


def divisor_list(k: int) -> list[int]:
    """Ascending list of all divisors of k."""
    return list(_divisor_tuple(k))


def divisor_count(k: int) -> int:
    """d(k), the number of divisors of k."""
    return len(_divisor_tuple(k))


def divisor_sum(k: int) -> int:
    """sigma(k), the sum of divisors of k.  Exact (arbitrary precision)."""
    return sum(_divisor_tuple(k))


def incomplete_divisor_count(k: int, x: float) -> int:
    """d(k; x), the number of divisors of k that are <= x.

    x may be any real number; the integer-vs-real comparison is exact, so
    no divisor is ever miscounted at a boundary.  0 when x < 1, d(k) when
    x >= k.
    """
    return sum(1 for m in _divisor_tuple(k) if m <= x)


@lru_cache(maxsize=4)
def divisor_sieve(limit: int) -> tuple[np.ndarray, np.ndarray]:
    """(d, sigma) arrays for every m in [1, limit], index 0 unused.

    One pass over divisor pairs (i, m/i) with i <= sqrt(m), so each i
    strides only from i*i upward.  Arrays are returned read-only because
    they are cached and shared between callers.
    """
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    d = np.zeros(limit + 1, dtype=np.int64)
    sigma = np.zeros(limit + 1, dtype=np.int64)
    for i in range(1, math.isqrt(limit) + 1):
        # perfect square: i pairs with itself, counted once
        d[i * i] += 1
        sigma[i * i] += i
        start = i * (i + 1)
        if start <= limit:
            d[start :: i] += 2
            cof = np.arange(i + 1, limit // i + 1, dtype=np.int64)
            sigma[start :: i] += i + cof
    d.setflags(write=False)
    sigma.setflags(write=False)
    return d, sigma


def _step_sum(divisors: tuple[int, ...]) -> int:
    # sum of (d_{i+1} - d_i) * i over consecutive divisor pairs; this is
    # the area under the step function counting divisors <= x on [1, k]
    return sum((divisors[i + 1] - divisors[i]) * (i + 1) for i in range(len(divisors) - 1))


def incomplete_divisor_integral(k: int, *, verify: bool = False) -> int:
    """Integral of d(k; x) over x in [1, k], which equals k*d(k) - sigma(k).

    With verify=True the step-function sum is evaluated independently and
    any disagreement with the closed form raises.
    """
    divs = _divisor_tuple(k)
    value = k * len(divs) - sum(divs)
    if verify:
        steps = _step_sum(divs)
        if steps != value:
            raise RuntimeError(
                f"step sum {steps} != k*d(k) - sigma(k) = {value} at k={k}"
            )
    return value

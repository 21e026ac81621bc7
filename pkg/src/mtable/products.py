"""Counting distinct products in an n-by-n multiplication table.

M(n) is the number of distinct values a*b with 1 <= a, b <= n.  The dense
counter marks one bitmap of size n*n + 1; the segmented counter sweeps the
product range in fixed-size windows so memory stays bounded, and its
windows are independent, which makes the parallel variant a plain map over
windows followed by an integer sum.  Either way the count is exact.
"""

from __future__ import annotations

import csv
import math
import os
import time
import warnings
from dataclasses import dataclass
from multiprocessing import Pool
from pathlib import Path
from typing import Iterable, Literal

import numpy as np

__all__ = [
    "TableCensus",
    "count_distinct_dense",
    "count_distinct_segmented",
    "census",
    "load_cache",
    "save_cache",
]

# Census and the CLI pick the dense bitmap up to here and switch to the
# segmented sweep above.
DENSE_AUTO_MAX = 8192

# Policy guard for the dense route.  The mark array uses one byte per
# value (numpy bool), not one bit, so the top of this range needs real
# memory; an allocation failure redirects to the segmented variant.
DENSE_N_MAX = 1 << 17

# Window length (number of product values per window) for the segmented
# sweep, and the smallest length accepted.
SEGMENT_BITS_DEFAULT = 1 << 20
SEGMENT_BITS_MIN = 1 << 16

_MAX_WORKERS = 8


@dataclass(frozen=True)
class TableCensus:
    """One census point: the distinct count and its derived ratios."""

    n: int
    distinct_count: int
    density: float
    mean_multiplicity: float
    algorithm: Literal["dense", "segmented"]
    elapsed: float

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n}")
        if not 2 * self.n - 1 <= self.distinct_count <= self.n * self.n:
            raise ValueError(
                f"M({self.n}) = {self.distinct_count} is outside [2n-1, n^2]"
            )

    @classmethod
    def from_count(
        cls, n: int, m: int, algorithm: str, elapsed: float
    ) -> "TableCensus":
        square = n * n
        return cls(
            n=n,
            distinct_count=m,
            density=m / square,
            mean_multiplicity=square / m,
            algorithm=algorithm,
            elapsed=elapsed,
        )


def count_distinct_dense(n: int) -> int:
    """M(n) by marking every product in one bitmap.

    Only the upper triangle a <= b is visited: row a marks a*a, a*(a+1),
    ..., a*n, one strided write per row.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if n > DENSE_N_MAX:
        raise ValueError(
            f"n={n} exceeds the dense bitmap policy (n <= {DENSE_N_MAX}); "
            f"use count_distinct_segmented"
        )
    try:
        seen = np.zeros(n * n + 1, dtype=bool)
    except MemoryError:
        raise MemoryError(
            f"cannot allocate the dense bitmap for n={n}; "
            f"use count_distinct_segmented"
        ) from None
    for a in range(1, n + 1):
        seen[a * a : a * n + 1 : a] = True
    return int(np.count_nonzero(seen))


def _window_ranges(n: int, width: int) -> list[tuple[int, int]]:
    top = n * n
    return [(lo, min(lo + width - 1, top)) for lo in range(1, top + 1, width)]


def _count_window(args: tuple[int, int, int]) -> int:
    """Distinct products of the n-table that land in [lo, hi]."""
    n, lo, hi = args
    window = np.zeros(hi - lo + 1, dtype=bool)
    # row a contributes products in [a*a, a*n]; skip rows entirely
    # outside the window; ceilings via integer arithmetic only
    a_lo = max(1, -(-lo // n))
    a_hi = min(n, math.isqrt(hi))
    for a in range(a_lo, a_hi + 1):
        b_lo = max(a, -(-lo // a))
        b_hi = min(n, hi // a)
        if b_lo > b_hi:
            continue
        window[a * b_lo - lo : a * b_hi - lo + 1 : a] = True
    return int(np.count_nonzero(window))


def count_distinct_segmented(
    n: int, segment_bits: int = SEGMENT_BITS_DEFAULT, parallel: bool = False
) -> int:
    """M(n) by sweeping [1, n^2] in windows of segment_bits values.

    Peak memory is one window regardless of n.  The per-window counts
    are exact integers, so the total is independent of the window length
    and of whether the windows run in parallel.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if segment_bits < SEGMENT_BITS_MIN:
        raise ValueError(
            f"segment_bits must be >= {SEGMENT_BITS_MIN}, got {segment_bits}"
        )
    jobs = [(n, lo, hi) for lo, hi in _window_ranges(n, segment_bits)]
    if parallel and len(jobs) > 1:
        workers = min(len(jobs), os.cpu_count() or 1, _MAX_WORKERS)
        with Pool(processes=workers) as pool:
            counts = pool.map(_count_window, jobs)
    else:
        counts = [_count_window(job) for job in jobs]
    return sum(counts)


class _CacheError(Exception):
    pass


def load_cache(path: str | Path) -> dict[int, int]:
    """Read a census cache CSV (columns n,m) into a dict.

    Raises _CacheError on any malformed content; census() treats that as
    a corrupt cache and recomputes.
    """
    entries: dict[int, int] = {}
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != ["n", "m"]:
            raise _CacheError(f"unexpected header {header!r}")
        for row in reader:
            if len(row) != 2:
                raise _CacheError(f"malformed row {row!r}")
            try:
                n, m = int(row[0]), int(row[1])
            except ValueError as exc:
                raise _CacheError(f"non-integer row {row!r}") from exc
            if n < 1 or not 2 * n - 1 <= m <= n * n:
                raise _CacheError(f"implausible entry n={n}, m={m}")
            if entries.get(n, m) != m:
                raise _CacheError(f"conflicting entries for n={n}")
            entries[n] = m
    return entries


def save_cache(path: str | Path, entries: dict[int, int]):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "m"])
        for n in sorted(entries):
            writer.writerow([n, entries[n]])


def census(
    n_values: Iterable[int],
    cache_path: str | Path | None = None,
    *,
    algorithm: Literal["auto", "dense", "segmented"] = "auto",
    segment_bits: int = SEGMENT_BITS_DEFAULT,
    parallel: bool = False,
) -> list[TableCensus]:
    """Census points for each n, using (and updating) an optional cache.

    The cache stores n,m pairs only; density and mean multiplicity are
    always rederived, and the algorithm choice never changes a stored
    value.  A cache that fails to parse is recomputed and overwritten.
    """
    cached: dict[int, int] = {}
    if cache_path is not None and os.path.exists(cache_path):
        try:
            cached = load_cache(cache_path)
        except (_CacheError, OSError) as exc:
            warnings.warn(
                f"census cache {cache_path} is unreadable ({exc}); recomputing",
                stacklevel=2,
            )
            cached = {}
    out = []
    for n in n_values:
        if algorithm == "auto":
            chosen = "dense" if n <= DENSE_AUTO_MAX else "segmented"
        else:
            chosen = algorithm
        start = time.perf_counter()
        if n in cached:
            m = cached[n]
        elif chosen == "dense":
            m = count_distinct_dense(n)
        else:
            m = count_distinct_segmented(n, segment_bits, parallel)
        elapsed = time.perf_counter() - start
        cached[n] = m
        out.append(TableCensus.from_count(n, m, chosen, elapsed))
    if cache_path is not None:
        save_cache(cache_path, cached)
    return out

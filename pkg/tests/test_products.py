"""Distinct-product counting: dense vs segmented routes, census, cache."""

import pytest

from mtable.products import (
    DENSE_AUTO_MAX,
    DENSE_N_MAX,
    SEGMENT_BITS_DEFAULT,
    SEGMENT_BITS_MIN,
    TableCensus,
    _CacheError,
    _window_ranges,
    census,
    count_distinct_dense,
    count_distinct_segmented,
    load_cache,
    save_cache,
)

KNOWN_COUNTS = {1: 1, 2: 3, 3: 6, 4: 9, 5: 14, 10: 42, 50: 800, 100: 2906}


def brute_count(n):
    return len({a * b for a in range(1, n + 1) for b in range(1, n + 1)})


def test_dense_known_counts():
    for n, m in KNOWN_COUNTS.items():
        assert count_distinct_dense(n) == m


def test_dense_matches_brute_force():
    for n in range(1, 101):
        assert count_distinct_dense(n) == brute_count(n), n


def test_dense_rejects_out_of_range():
    with pytest.raises(ValueError):
        count_distinct_dense(0)
    with pytest.raises(ValueError):
        count_distinct_dense(DENSE_N_MAX + 1)


def test_window_ranges_partition():
    for n in (10, 300, 2000):
        ranges = _window_ranges(n, SEGMENT_BITS_MIN)
        assert ranges[0][0] == 1
        assert ranges[-1][1] == n * n
        for (_, hi), (lo, _) in zip(ranges, ranges[1:]):
            assert lo == hi + 1


def test_segmented_equals_dense():
    for n in (1, 2, 17, 256, 257, 1000):
        expect = count_distinct_dense(n)
        for bits in (SEGMENT_BITS_MIN, SEGMENT_BITS_DEFAULT):
            assert count_distinct_segmented(n, bits) == expect, (n, bits)


def test_segmented_rejects_small_window():
    with pytest.raises(ValueError):
        count_distinct_segmented(100, SEGMENT_BITS_MIN - 1)
    with pytest.raises(ValueError):
        count_distinct_segmented(0)


def test_parallel_invariant():
    for n in (100, 1500):
        serial = count_distinct_segmented(n)
        assert count_distinct_segmented(n, parallel=True) == serial


def test_census_point_fields():
    (point,) = census([100])
    assert point.n == 100
    assert point.distinct_count == 2906
    assert point.density == 2906 / 10000
    assert point.mean_multiplicity == 10000 / 2906
    assert point.algorithm == "dense"
    assert point.elapsed >= 0.0


def test_census_trivial_table():
    (point,) = census([1])
    assert point.distinct_count == 1
    assert point.density == 1.0


def test_census_switches_to_segmented():
    (point,) = census([DENSE_AUTO_MAX + 1])
    assert point.algorithm == "segmented"
    assert 2 * point.n - 1 <= point.distinct_count <= point.n * point.n


def test_census_forced_segmented():
    (point,) = census([100], algorithm="segmented")
    assert point.algorithm == "segmented"
    assert point.distinct_count == 2906


def test_census_rejects_implausible_count():
    with pytest.raises(ValueError):
        TableCensus.from_count(10, 9, "dense", 0.0)
    with pytest.raises(ValueError):
        TableCensus.from_count(10, 101, "dense", 0.0)


def test_cache_round_trip(tmp_path):
    path = tmp_path / "census.csv"
    save_cache(path, {100: 2906, 10: 42})
    assert path.read_text() == "n,m\n10,42\n100,2906\n"
    assert load_cache(path) == {10: 42, 100: 2906}


def test_census_extends_cache(tmp_path):
    path = tmp_path / "census.csv"
    census([10, 100], cache_path=path)
    assert load_cache(path) == {10: 42, 100: 2906}
    census([50], cache_path=path)
    assert load_cache(path) == {10: 42, 50: 800, 100: 2906}


def test_census_trusts_stored_counts(tmp_path):
    # the cache stores raw counts only; a plausible entry is not
    # second-guessed, so a stale value survives until it is deleted
    path = tmp_path / "census.csv"
    path.write_text("n,m\n10,41\n")
    (point,) = census([10], cache_path=path)
    assert point.distinct_count == 41


def test_census_recovers_from_corrupt_cache(tmp_path):
    path = tmp_path / "census.csv"
    path.write_text("n;m\n10;42\n")
    with pytest.warns(UserWarning, match="recomputing"):
        (point,) = census([10], cache_path=path)
    assert point.distinct_count == 42
    assert load_cache(path) == {10: 42}


def test_load_cache_accepts_consistent_duplicates(tmp_path):
    path = tmp_path / "cache.csv"
    path.write_text("n,m\n10,42\n10,42\n")
    assert load_cache(path) == {10: 42}


@pytest.mark.parametrize(
    "body",
    [
        "k,m\n10,42\n",
        "n,m\n10\n",
        "n,m\n10,forty\n",
        "n,m\n10,9\n",
        "n,m\n10,101\n",
        "n,m\n0,1\n",
        "n,m\n10,42\n10,43\n",
    ],
)
def test_load_cache_rejects_malformed(tmp_path, body):
    path = tmp_path / "cache.csv"
    path.write_text(body)
    with pytest.raises(_CacheError):
        load_cache(path)

"""Divisor arithmetic against brute-force oracles."""

import pytest

from mtable.divisors import (
    DivisorProfile,
    divisor_count,
    divisor_list,
    divisor_sieve,
    divisor_sum,
    incomplete_divisor_count,
    incomplete_divisor_integral,
)


def brute_divisors(k):
    return [i for i in range(1, k + 1) if k % i == 0]


def test_divisor_list_small():
    assert divisor_list(1) == [1]
    assert divisor_list(12) == [1, 2, 3, 4, 6, 12]
    assert divisor_list(28) == [1, 2, 4, 7, 14, 28]
    assert divisor_list(97) == [1, 97]


def test_divisor_list_matches_brute_force():
    for k in range(1, 2001):
        assert divisor_list(k) == brute_divisors(k), k


def test_count_and_sum_known_values():
    assert divisor_count(12) == 6
    assert divisor_sum(12) == 28
    assert divisor_count(100) == 9
    assert divisor_sum(100) == 217
    assert divisor_count(1) == divisor_sum(1) == 1


def test_count_and_sum_perfect_square():
    assert divisor_count(36) == 9
    assert divisor_sum(36) == 91


def test_rejects_nonpositive():
    for bad in (0, -5):
        with pytest.raises(ValueError):
            divisor_list(bad)


def test_profile_consistent():
    p = DivisorProfile.from_k(60)
    assert p.divisors == (1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60)
    assert p.d == 12
    assert p.sigma == 168


def test_profile_rejects_non_divisors():
    with pytest.raises(ValueError):
        DivisorProfile(k=6, divisors=(1, 4, 6), d=3, sigma=11)
    with pytest.raises(ValueError):
        DivisorProfile(k=6, divisors=(1, 2, 3, 6), d=5, sigma=12)


def test_incomplete_count_boundaries():
    assert incomplete_divisor_count(12, 0.5) == 0
    assert incomplete_divisor_count(12, 1) == 1
    assert incomplete_divisor_count(12, 3.5) == 3
    # a divisor sitting exactly at x counts
    assert incomplete_divisor_count(12, 4) == 4
    assert incomplete_divisor_count(12, 11.99) == 5
    assert incomplete_divisor_count(12, 12) == divisor_count(12)
    assert incomplete_divisor_count(12, 1e9) == divisor_count(12)


def test_incomplete_count_matches_brute_force():
    for k in (7, 30, 360):
        divs = brute_divisors(k)
        for tenths in range(0, 10 * k + 11):
            x = tenths / 10
            assert incomplete_divisor_count(k, x) == sum(1 for m in divs if m <= x)


def test_sieve_matches_scalar_routines():
    limit = 5000
    d, sigma = divisor_sieve(limit)
    assert d[0] == sigma[0] == 0
    for k in range(1, limit + 1):
        assert d[k] == divisor_count(k), k
        assert sigma[k] == divisor_sum(k), k


def test_sieve_large_spot_values():
    d, sigma = divisor_sieve(10**6)
    # a prime, a highly composite number, and the top of the range
    assert d[999983] == 2 and sigma[999983] == 999984
    assert d[720720] == 240 and sigma[720720] == 3249792
    assert d[10**6] == 49 and sigma[10**6] == 2480437


def test_sieve_arrays_read_only():
    d, _ = divisor_sieve(100)
    with pytest.raises(ValueError):
        d[5] = 0


def test_sieve_rejects_bad_limit():
    with pytest.raises(ValueError):
        divisor_sieve(0)


def test_integral_closed_form():
    assert incomplete_divisor_integral(1) == 0
    assert incomplete_divisor_integral(7) == 7 * 2 - 8
    assert incomplete_divisor_integral(12) == 12 * 6 - 28


def test_integral_step_sum_sweep():
    # verify=True recomputes the area under the divisor-counting step
    # function and raises on any disagreement with k*d(k) - sigma(k)
    for k in range(1, 3001):
        incomplete_divisor_integral(k, verify=True)

"""Partial zeta sums and the three-route square identity."""

import math

import pytest

from mtable import series


def test_zeta_partial_exact_paths():
    assert series.zeta_partial(0, 7) == 7
    assert series.zeta_partial(-1, 7) == 28
    assert series.zeta_partial(0, 500) == 500
    assert series.zeta_partial(-1, 500) == 500 * 501 // 2


def test_zeta_partial_harmonic():
    h4 = series.zeta_partial(1, 4)
    assert h4.imag == 0.0
    assert h4.real == pytest.approx(25 / 12, rel=1e-15)


def test_zeta_partial_tail_behavior():
    # zeta(2) minus the partial to N is 1/N - 1/(2 N^2) + O(N^-3)
    p = series.zeta_partial(2, 10**4).real
    assert abs(math.pi**2 / 6 - p - 1e-4 + 0.5e-8) < 1e-9


def test_zeta_partial_rejects_bad_n():
    with pytest.raises(ValueError):
        series.zeta_partial(2, 0)


def test_identity_exact_exponents():
    for n in (1, 2, 10, 37):
        for s in (0, -1):
            cmp = series.verify_square_identity(s, n)
            assert cmp.max_abs_deviation == 0.0, (s, n)
            assert cmp.grid_sum == cmp.zeta_partial_squared == cmp.multiplicity_sum
    assert series.verify_square_identity(0, 10).grid_sum == 100
    assert series.verify_square_identity(-1, 10).grid_sum == 55**2


def test_identity_float_exponents():
    for s in (2, 3, 2 + 3j):
        cmp = series.verify_square_identity(s, 100)
        assert cmp.max_abs_deviation <= 1e-12 * abs(cmp.zeta_partial_squared), s


def test_identity_rejects_oversize_table():
    with pytest.raises(ValueError):
        series.verify_square_identity(2, series.IDENTITY_N_MAX + 1)
    with pytest.raises(ValueError):
        series.verify_square_identity(2, 0)


def test_conjugate_symmetry_spot():
    a = series.zeta_partial(2 + 3j, 1000)
    b = series.zeta_partial(2 - 3j, 1000)
    assert abs(b - a.conjugate()) <= 1e-15 * abs(a)


def test_truncation_gap_decreases():
    gaps = [
        series.zeta_square_truncation(2, k_max)["gap"]
        for k_max in (100, 1000, 10**4)
    ]
    assert gaps[0] > gaps[1] > gaps[2] > 0


def test_truncation_at_even_reference():
    out = series.zeta_square_truncation(2, 10**4)
    assert out["reference"] == (math.pi**2 / 6) ** 2
    assert out["gap"] == pytest.approx(0.0011362769787996996, rel=1e-10)


def test_truncation_validation():
    with pytest.raises(ValueError):
        series.zeta_square_truncation(1.0, 100)
    with pytest.raises(ValueError):
        series.zeta_square_truncation(2, 9)


def test_zeta_reference_closed_forms():
    assert series._zeta_reference(2.0) == math.pi**2 / 6
    assert series._zeta_reference(4.0) == math.pi**4 / 90
    assert series._zeta_reference(6.0) == math.pi**6 / 945


def test_zeta_reference_summed_path():
    # no closed form at s = 3; the long partial sum plus tail must land
    # on the known value
    assert series._zeta_reference(3.0) == pytest.approx(
        1.2020569031595943, rel=1e-12
    )

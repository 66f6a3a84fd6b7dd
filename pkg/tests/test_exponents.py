import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pathramsey.errors import ParameterError
from pathramsey.exponents import (chernoff_bound, df_one_hole_da, df_two_holes_dt,
                                  f_binomial_two_holes, f_kst, f_one_hole, f_two_holes_regular,
                                  g_one_hole, g_two_holes_regular, kst_optimum, log_perfect_matchings,
                                  log_x_one_hole, log_x_two_holes, max_g_two_holes, min_c_one_hole,
                                  multicolour_constants, multicolour_exponent,
                                  one_hole_stationary_point, search_one_hole_constants,
                                  two_holes_rate, two_holes_stationary_t, verify_max_location, xlogx)
from pathramsey.optimize import golden_section_minimize, grid_then_golden_max, refine_grid_max


def central_diff(f, x, h=1e-6):
    return (f(x + h) - f(x - h)) / (2 * h)


def test_xlogx_limit():
    assert xlogx(0.0) == 0.0
    assert xlogx(1.0) == 0.0
    np.testing.assert_allclose(xlogx(np.array([0.0, 2.0])), [0.0, 2 * math.log(2)])


def test_log_perfect_matchings_integer_oracle():
    assert log_perfect_matchings(0) == pytest.approx(0.0, abs=1e-14)
    assert log_perfect_matchings(2) == pytest.approx(0.0, abs=1e-14)
    assert log_perfect_matchings(4) == pytest.approx(math.log(3), rel=1e-12)
    assert log_perfect_matchings(6) == pytest.approx(math.log(15), rel=1e-12)
    for i in range(2, 31, 2):
        exact = math.factorial(i) // (math.factorial(i // 2) * 2 ** (i // 2))
        assert log_perfect_matchings(i) == pytest.approx(math.log(exact), rel=1e-12, abs=1e-14)
    with pytest.raises(ParameterError):
        log_perfect_matchings(5)


# one hole


def test_one_hole_derivative_matches_finite_difference():
    for c in (3.0, 5.219, 8.0):
        q = (c - 2) / 4
        for a in np.linspace(0.05 * q, 0.95 * q, 7):
            fd = central_diff(lambda x: f_one_hole(x, c, 30), a)
            assert df_one_hole_da(a, c, 30) == pytest.approx(fd, abs=1e-6)


def test_one_hole_stationary_point():
    c, d = 5.219, 30
    a0 = one_hole_stationary_point(c)
    assert a0 == pytest.approx(c / 2 - math.sqrt(2 * c * c + 8) / 4)
    assert abs(central_diff(lambda x: f_one_hole(x, c, d), a0)) < 1e-6
    assert df_one_hole_da(a0 - 1e-3, c, d) > 0 > df_one_hole_da(a0 + 1e-3, c, d)


def test_one_hole_constant():
    assert g_one_hole(5.219, 30) < -0.0005
    assert Fraction("5.219") * 30 / 2 == Fraction("78.285")


@given(st.floats(2.1, 12), st.floats(0, 1))
@settings(max_examples=100, deadline=None)
def test_g_dominates_f(c, u):
    a = u * (c - 2) / 4
    assert g_one_hole(c, 30) >= f_one_hole(a, c, 30) - 1e-12


def test_g_one_hole_decreasing_in_d():
    for c in (4.0, 5.219, 7.0):
        vals = [g_one_hole(c, d) for d in range(5, 60, 5)]
        assert all(x > y for x, y in zip(vals, vals[1:]))


def test_one_hole_domain():
    with pytest.raises(ParameterError):
        f_one_hole(1.0, 5.0, 30)
    with pytest.raises(ParameterError):
        g_one_hole(2.0, 30)


def test_constant_search_recovers_published_pair():
    res = search_one_hole_constants()
    assert res.d == 30
    assert res.c == pytest.approx(5.219, abs=1e-3)
    assert res.edges_per_n < 78.3
    assert g_one_hole(min_c_one_hole(30), 30) == pytest.approx(0.0, abs=1e-9)


def test_stirling_convergence_one_hole():
    c, d = 5.219, 30
    a = one_hole_stationary_point(c)
    gaps = []
    for n in (50, 100, 200):
        approx = (log_x_one_hole(a, c, d, n) + 1.5 * math.log(n)) / n
        gaps.append(abs(approx - f_one_hole(a, c, d)))
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] <= 0.15


# Kovari-Sos-Turan limit


def test_kst_optimum():
    opt = kst_optimum()
    assert opt.point[0] == pytest.approx(5.633, abs=0.005)
    assert opt.value == pytest.approx(26.415, abs=0.005)
    assert opt.value == pytest.approx(f_kst(opt.point[0]), abs=1e-12)
    c = opt.point[0]
    alpha = (c - 2) / (4 * c)
    assert 1 - alpha == pytest.approx((3 * c + 2) / (4 * c))
    assert f_kst(c) == pytest.approx(c / 2 * (math.log(alpha) / math.log(1 - alpha) - 1))


# two holes, binomial


def test_binomial_two_holes():
    assert f_binomial_two_holes(5.28, 6) < 0
    assert Fraction("5.28") ** 2 * 6 / 2 == Fraction("83.6352")
    assert 5.28**2 * 6 / 2 < 83.7
    for c in (5.0, 5.28, 5.5):
        assert f_binomial_two_holes(c, 0) > 0


# two holes, regular


def test_t0_is_root_and_stationary():
    c, d = 5.4806, 27
    for a in np.linspace(0.01, (c - 2) / 4 - 0.05, 9):
        t0 = two_holes_stationary_t(a, c)
        assert t0 * t0 - (c - 4 * a) * t0 + (c - 2 - 4 * a) == pytest.approx(0, abs=1e-8)
        assert df_two_holes_dt(a, t0, c, d) == pytest.approx(0, abs=1e-8)
        fd = central_diff(lambda t: f_two_holes_regular(a, t, c, d), t0)
        assert abs(fd) < 1e-6


def test_two_holes_dt_matches_finite_difference():
    c, d = 5.4806, 27
    for a, t in ((0.1, 0.3), (0.4, 0.6), (0.2, 1.0)):
        fd = central_diff(lambda x: f_two_holes_regular(a, x, c, d), t)
        assert df_two_holes_dt(a, t, c, d) == pytest.approx(fd, abs=1e-6)


def test_two_holes_constant():
    res = max_g_two_holes(5.4806, 27)
    assert res.value < -0.0001
    assert res.value == pytest.approx(g_two_holes_regular(res.point[0], 5.4806, 27), abs=1e-12)
    assert Fraction("5.4806") * 27 / 2 == Fraction("73.9881")


def test_two_holes_envelope():
    c, d = 5.4806, 27
    for a in np.linspace(0, (c - 2) / 4, 11):
        g = g_two_holes_regular(a, c, d)
        tmax = min((c - 2) / 2 - 2 * a, 2)
        for t in np.linspace(0, tmax, 21):
            assert g >= f_two_holes_regular(a, t, c, d) - 1e-12


def test_full_rate_reduces_to_printed_form():
    c, d = 5.4806, 27
    s = (c - 2) / 4
    for a, t in ((0.1, 0.5), (0.177, 0.677), (0.3, 1.0)):
        assert two_holes_rate(s, a, a, t, c, d) == pytest.approx(f_two_holes_regular(a, t, c, d), abs=1e-9)


def test_full_rate_symmetric():
    c, d = 5.4806, 27
    assert two_holes_rate(0.8, 0.1, 0.3, 0.5, c, d) == pytest.approx(two_holes_rate(0.8, 0.3, 0.1, 0.5, c, d))


def test_full_rate_stirling():
    c, d = 5.4806, 27
    args = (0.8, 0.15, 0.2, 0.6, c, d)
    gaps = [abs(log_x_two_holes(*args, n) / n - two_holes_rate(*args)) for n in (50, 100, 200, 400)]
    assert all(x > y for x, y in zip(gaps, gaps[1:]))


def test_max_location():
    c, d = 5.4806, 27
    res = verify_max_location(c, d)
    s, a, b, t = res.point
    assert abs(a - b) <= 1e-4
    assert s == pytest.approx((c - 2) / 4, abs=1e-4)
    assert res.value == pytest.approx(max_g_two_holes(c, d).value, abs=1e-6)
    assert res.value == pytest.approx(two_holes_rate(*res.point, c, d), abs=1e-12)


def test_discriminant_positive_everywhere():
    for c in (2.5, 5.4806, 10.0):
        for a in np.linspace(0, (c - 2) / 4, 15):
            two_holes_stationary_t(a, c)


@given(st.floats(2.001, 40), st.floats(0, 1))
@settings(max_examples=300, deadline=None)
def test_stationary_points_stay_in_domain(c, u):
    a = u * (c - 2) / 4
    t0 = two_holes_stationary_t(a, c)
    assert -1e-12 <= t0 <= min((c - 2) / 2 - 2 * a, 2) + 1e-12
    assert 0 <= one_hole_stationary_point(c) <= (c - 2) / 4


# more colours


def test_multicolour_constants():
    mc = multicolour_constants(2)
    assert (mc.c, mc.d, mc.edges_per_n) == (8, 16, 1024)
    assert mc.edges_per_n == 32 * 2 * 16
    mc = multicolour_constants(3)
    assert (mc.c, mc.d) == (16, 24) and mc.exponent_ratio == 12
    for r in range(2, 12):
        mc = multicolour_constants(r)
        assert mc.edges_per_n < mc.claimed_bound
        assert multicolour_exponent(r, mc.c, mc.d) < 0
    with pytest.raises(ParameterError):
        multicolour_constants(1)


# Chernoff


def test_chernoff_values():
    assert chernoff_bound(300, 0.1) == pytest.approx(2 / math.e)
    assert chernoff_bound(300, 1e-9) == pytest.approx(2.0)
    with pytest.raises(ParameterError):
        chernoff_bound(10, 1.5)
    with pytest.raises(ParameterError):
        chernoff_bound(0, 0.5)


def test_chernoff_dominates_empirical_frequency():
    rng = np.random.default_rng(2024)
    n, p, eps = 2000, 0.05, 0.2
    mean = n * p
    x = rng.binomial(n, p, size=20000)
    freq = np.mean(np.abs(x - mean) >= eps * mean)
    assert freq <= chernoff_bound(mean, eps)


# optimisers


def test_golden_section():
    res = golden_section_minimize(lambda x: (x - 1.25) ** 2 + 3, -4, 9, tol=1e-10)
    assert res.point[0] == pytest.approx(1.25, abs=1e-7)  # sqrt(eps) limit
    assert res.value == pytest.approx(3.0)
    assert res.tolerance <= 1e-10


def test_grid_then_golden_handles_two_bumps():
    f = lambda x: math.exp(-((x - 1) ** 2) * 20) + 2 * math.exp(-((x - 3) ** 2) * 20)
    res = grid_then_golden_max(f, 0, 4)
    assert res.point[0] == pytest.approx(3.0, abs=1e-6)


def test_refine_grid_finds_boundary_max():
    f = lambda x, y: -(x - 1) ** 2 - (y + 0.3) ** 2 + x
    res = refine_grid_max(f, [(0, 1), (-1, 1)], tol=1e-9)
    assert res.point[0] == pytest.approx(1.0, abs=1e-8)
    assert res.point[1] == pytest.approx(-0.3, abs=1e-8)

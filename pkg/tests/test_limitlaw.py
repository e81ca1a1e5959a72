import math
from fractions import Fraction

import numpy as np
import pytest
from scipy.integrate import quad

from riffleguess.limitlaw import (
    LIMIT_LAW,
    LinExpLaw,
    central_binomial_scaled,
    four_l_leading_term,
    gamma_half,
    gamma_half_exact,
    half_normal_moment,
    limit_cdf,
    limit_density,
    limit_density_erf_form,
    limit_moment,
    limit_moment_exact,
    limit_quantile,
    linexp_cdf,
    moment_asymptotic_main_term,
)

SQPI = math.sqrt(math.pi)


def test_gamma_half_exact_values():
    assert gamma_half_exact(2) == (Fraction(1), 0)      # Gamma(1)
    assert gamma_half_exact(1) == (Fraction(1), 1)      # Gamma(1/2)
    assert gamma_half_exact(3) == (Fraction(1, 2), 1)   # Gamma(3/2)
    assert gamma_half_exact(5) == (Fraction(3, 4), 1)   # Gamma(5/2)
    assert gamma_half_exact(6) == (Fraction(2), 0)      # Gamma(3)
    assert gamma_half(4) == pytest.approx(1.0)
    assert gamma_half(1) == pytest.approx(SQPI)


def test_half_normal_moments():
    assert half_normal_moment(0) == pytest.approx(1.0)
    assert half_normal_moment(1) == pytest.approx(1 / SQPI)
    assert half_normal_moment(2) == pytest.approx(0.5)
    assert half_normal_moment(3) == pytest.approx(1 / SQPI)
    assert half_normal_moment(4) == pytest.approx(0.75)
    assert half_normal_moment(5) == pytest.approx(2 / SQPI)


def test_half_normal_moment_integral():
    for s in range(6):
        value, _ = quad(lambda x, s=s: x**s * 2 / SQPI * math.exp(-x * x), 0, 12)
        assert half_normal_moment(s) == pytest.approx(value, abs=1e-9)


def test_limit_moments_closed_forms_exact():
    # exact rational decomposition a + b/sqrt(pi) + c/pi
    assert limit_moment_exact(0) == (1, 0, 0)
    assert limit_moment_exact(1) == (0, 2, 0)
    assert limit_moment_exact(2) == (1, 0, 2)
    assert limit_moment_exact(3) == (0, 5, 0)
    assert limit_moment_exact(4) == (3, 0, 8)
    assert limit_moment_exact(5) == (0, Fraction(43, 2), 0)


def test_limit_moment_is_half_normal_convolution():
    for s in range(11):
        expected = sum(
            math.comb(s, k) * half_normal_moment(k) * half_normal_moment(s - k)
            for k in range(s + 1)
        )
        assert limit_moment(s) == pytest.approx(expected, rel=1e-12)


def test_limit_moment_growth_bound():
    for s in range(1, 21):
        assert limit_moment(s) <= math.factorial(2 * s)


def test_density_basics():
    assert limit_density(0.0) == 0.0
    assert limit_density(-1.0) == 0.0
    assert limit_density(2 / SQPI) == pytest.approx(0.62548, abs=5e-5)
    xs = np.linspace(0, 8, 10_000)
    values = [limit_density(x) for x in xs]
    assert all(v >= 0 for v in values)


def test_density_two_closed_forms_agree():
    for x in np.linspace(0, 8, 10_000):
        assert abs(limit_density(x) - limit_density_erf_form(x)) <= 1e-12


def test_density_normalization_and_moments():
    total, _ = quad(limit_density, 0, 10, epsabs=1e-12, limit=200)
    assert abs(total - 1.0) <= 1e-10
    for s in range(9):
        upper = 8 + math.sqrt(2 * s) + 4
        value, _ = quad(lambda x, s=s: x**s * limit_density(x), 0, upper,
                        epsabs=1e-10, limit=200)
        assert abs(value - limit_moment(s)) <= 1e-6


def test_density_is_half_normal_self_convolution():
    # trapezoid convolution of the half-normal density with itself
    step = 1e-3
    grid = np.arange(0, 8 + step, step)
    half = 2 / SQPI * np.exp(-grid * grid)
    for x_index in range(0, len(grid), 500):
        x = grid[x_index]
        inner = half[: x_index + 1] * half[: x_index + 1][::-1]
        estimate = np.trapezoid(inner, dx=step) if x_index else 0.0
        assert abs(estimate - limit_density(x)) < 1e-6, f"x={x}"


def test_cdf_monotone_and_matches_integral():
    xs = np.linspace(0, 10, 10_000)
    values = [limit_cdf(x) for x in xs]
    assert values[0] == 0.0
    assert all(b >= a for a, b in zip(values, values[1:]))
    assert values[-1] == pytest.approx(1.0, abs=1e-10)
    for x in (0.3, 1.0, 2.2, 4.0):
        integral, _ = quad(limit_density, 0, x, epsabs=1e-12)
        assert limit_cdf(x) == pytest.approx(integral, abs=1e-10)


def test_quantile_inverts_cdf():
    for p in (0.01, 0.25, 0.5, 0.9, 0.999):
        x = limit_quantile(p)
        assert limit_cdf(x) == pytest.approx(p, abs=1e-9)
    assert limit_quantile(0.0) == 0.0


def test_law_object():
    assert LIMIT_LAW.cdf(1.0) == limit_cdf(1.0)
    assert LIMIT_LAW.density(1.0) == limit_density(1.0)
    assert LIMIT_LAW.moment(1) == pytest.approx(2 / SQPI)
    assert LIMIT_LAW.moments(2) == (limit_moment(0), limit_moment(1), limit_moment(2))


def test_linexp_cdf_values():
    assert linexp_cdf(0.0, 1.0) == 0.0
    assert linexp_cdf(2.0, 0.0) == pytest.approx(1 - math.exp(-1))
    assert linexp_cdf(80.0, 1.0) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        linexp_cdf(1.0, -0.5)


def test_linexp_law_density_integrates_to_cdf():
    law = LinExpLaw(t=1.4)
    for z in (0.5, 1.0, 2.5):
        integral, _ = quad(law.density, 0, z, epsabs=1e-12)
        assert law.cdf(z) == pytest.approx(integral, abs=1e-10)


def test_moment_main_term():
    assert moment_asymptotic_main_term(123, 0) == pytest.approx(1.0)
    n = 2000
    assert moment_asymptotic_main_term(n, 3) == pytest.approx(5 / SQPI * n**1.5, rel=1e-12)


def test_four_l_leading_terms_small_l_sanity():
    # at L = 2 (n = 8) the forms are exact rationals by construction
    assert four_l_leading_term(1, 2) == Fraction(8 * 6, 16)
    with pytest.raises(ValueError):
        four_l_leading_term(6, 10)
    with pytest.raises(ValueError):
        four_l_leading_term(2, 0)


def test_central_binomial_bridge():
    L = 500
    bridge = float(central_binomial_scaled(L))
    target = math.sqrt(4 * L) / SQPI
    assert abs(bridge - target) / target < 0.02

import math

import numpy as np
import pytest
from scipy import special

from infofluct.errors import BracketError, ConvergenceError, DomainError
from infofluct.stats import (regularized_incomplete_beta, solve_scalar_root,
                             std_normal_cdf, std_normal_quantile,
                             student_t_cdf, student_t_quantile)

# frozen from tests/oracles.py (mpmath quadrature, 40 digits)
PHI_1_959964 = 0.9750000009035576
Z_975 = 1.959963984540054
Z_95 = 1.6448536269514723
T_975_DF1 = 12.706204736174693
T_95_DF3 = 2.353363434801823


def test_normal_cdf_examples():
    assert std_normal_cdf(0.0) == 0.5
    assert std_normal_cdf(1.959964) == pytest.approx(PHI_1_959964, abs=1e-12)
    for z in np.linspace(-9, 9, 181):
        assert std_normal_cdf(z) + std_normal_cdf(-z) == pytest.approx(1.0, abs=1e-14)
    with pytest.raises(DomainError):
        std_normal_cdf(math.inf)


def test_normal_cdf_monotone_and_tails():
    grid = np.linspace(-10, 10, 10_000)
    vals = [std_normal_cdf(z) for z in grid]
    assert all(a <= b for a, b in zip(vals, vals[1:]))
    assert std_normal_cdf(-8) < 1e-15
    assert std_normal_cdf(8) > 1 - 1e-15


def test_normal_quantile_examples():
    assert std_normal_quantile(0.5) == 0.0
    assert std_normal_quantile(0.975) == pytest.approx(Z_975, abs=1e-12)
    assert std_normal_quantile(0.95) == pytest.approx(Z_95, abs=1e-12)
    for p in (0.0, 1.0, -1, 2):
        with pytest.raises(DomainError):
            std_normal_quantile(p)


def test_normal_round_trip(rng):
    for p in rng.random(1000):
        assert std_normal_cdf(std_normal_quantile(p)) == pytest.approx(p, abs=1e-12)
    for p in (1e-300, 1e-20, 1e-10, 1 - 1e-10):
        assert std_normal_cdf(std_normal_quantile(p)) == pytest.approx(p, rel=1e-9)


def test_incomplete_beta_examples():
    assert regularized_incomplete_beta(2.5, 3.0, 0.0) == 0.0
    assert regularized_incomplete_beta(2.5, 3.0, 1.0) == 1.0
    for x in (0.1, 0.37, 0.9):
        assert regularized_incomplete_beta(1, 1, x) == pytest.approx(x, abs=1e-15)
    assert regularized_incomplete_beta(2, 2, 0.5) == pytest.approx(0.5, abs=1e-15)
    assert regularized_incomplete_beta(2, 2, 0.3) == pytest.approx(3 * 0.09 - 2 * 0.027, abs=1e-15)
    for args in ((0, 1, 0.5), (1, -1, 0.5), (1, 1, 1.5)):
        with pytest.raises(DomainError):
            regularized_incomplete_beta(*args)


def test_incomplete_beta_against_scipy(rng):
    for _ in range(2000):
        a, b = rng.uniform(0.05, 300, 2)
        x = rng.random()
        assert regularized_incomplete_beta(a, b, x) == pytest.approx(special.betainc(a, b, x), abs=1e-12)


def test_t_quantile_examples():
    for df in (1, 4, 1000):
        assert student_t_quantile(0.5, df) == 0.0
    assert student_t_quantile(0.975, 1) == pytest.approx(T_975_DF1, abs=1e-9)
    assert student_t_quantile(0.95, 3) == pytest.approx(T_95_DF3, abs=1e-12)
    assert student_t_quantile(0.95, 10**6) == pytest.approx(std_normal_quantile(0.95), abs=1e-3)
    for p, df in ((0.0, 3), (1.0, 3), (0.5, 0), (0.5, 0.5)):
        with pytest.raises(DomainError):
            student_t_quantile(p, df)


@pytest.mark.parametrize("df", [1, 2, 5, 30, 1000])
def test_t_round_trip(df, rng):
    for p in rng.random(1000):
        t = student_t_quantile(p, df)
        assert student_t_cdf(t, df) == pytest.approx(p, abs=1e-9)


def test_t_cauchy_closed_form(rng):
    for p in rng.random(1000):
        expected = math.tan(math.pi * (p - 0.5))
        assert student_t_quantile(p, 1) == pytest.approx(expected, abs=1e-8, rel=1e-12)


def test_root_examples():
    assert solve_scalar_root(lambda x: x - 0.3, 0, 1) == pytest.approx(0.3, abs=1e-14)
    x = solve_scalar_root(lambda x: math.tanh(1 / x) - x, 0.5, 0.99)
    assert x == pytest.approx(0.8335565596, abs=1e-10)
    assert solve_scalar_root(lambda x: x * x - 2, 1, 2, tol=1e-12) == pytest.approx(math.sqrt(2), abs=1e-12)


def test_root_errors_and_determinism():
    with pytest.raises(BracketError):
        solve_scalar_root(lambda x: x * x + 1, -1, 1)
    with pytest.raises(BracketError):
        solve_scalar_root(lambda x: x, 1, -1)
    f = lambda x: math.cos(x) - x
    assert solve_scalar_root(f, 0, 1) == solve_scalar_root(f, 0, 1)


def test_root_iteration_cap():
    # a sign change with no zero: bisection never reaches a tiny |f|
    with pytest.raises(ConvergenceError):
        solve_scalar_root(lambda x: -1.0 if x < 1e-3 else 1.0, 0.0, 1.0, tol=0.0)

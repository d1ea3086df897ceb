import math

import numpy as np
import pytest
from pytest import approx, raises
from scipy.special import gamma as sp_gamma
from scipy.special import gammaln

from mlcheck.errors import DomainError, GammaOverflowError
from mlcheck.services.gamma_core import (
    gamma,
    gamma_ratio,
    is_pole,
    log_abs_recip_gamma,
    log_gamma,
    recip_gamma,
    sin_pi,
)


@pytest.mark.parametrize("x, expected", [
    (1.0, 1.0),
    (3.0, 2.0),
    (1.5, 0.886226925452758),
    (0.5, math.sqrt(math.pi)),
    (-0.5, -2.0 * math.sqrt(math.pi)),
])
def test_gamma_known_values(x, expected):
    assert gamma(x) == approx(expected, rel=1e-13)


def test_gamma_exact_at_positive_integers():
    for n in range(1, 172):
        assert gamma(float(n)) == float(math.factorial(n - 1))
    assert gamma(1.0) == 1.0 and gamma(2.0) == 1.0
    assert recip_gamma(1.0) == 1.0
    assert recip_gamma(3.0) == 0.5
    assert log_gamma(1.0) == 0.0 and log_gamma(2.0) == 0.0


def test_gamma_relative_error_across_range():
    xs = np.linspace(-169.9, 170.0, 2001)
    for x in xs:
        if is_pole(x):
            continue
        expected = float(sp_gamma(x))
        assert abs(gamma(x) - expected) <= 1e-13 * abs(expected), x


@pytest.mark.parametrize("x", [-19.7, -7.25, -2.5, -0.3, 0.1, 0.9, 2.2, 7.7, 19.5, 33.3, 101.1, 150.5, 170.2])
def test_gamma_against_scipy(x):
    assert gamma(x) == approx(float(sp_gamma(x)), rel=1e-13)


@pytest.mark.parametrize("x", [-169.5, -150.3, -120.7])
def test_gamma_far_left(x):
    assert gamma(x) == approx(float(sp_gamma(x)), rel=1e-12)


def test_gamma_recurrence():
    for x in np.linspace(0.1, 50.0, 1001):
        assert gamma(x + 1.0) == approx(x * gamma(x), rel=1e-12)


def test_gamma_reflection():
    for x in np.linspace(0.01, 0.99, 99):
        assert gamma(x) * gamma(1.0 - x) * math.sin(math.pi * x) / math.pi == approx(1.0, rel=1e-11)


def test_gamma_below_one_between_one_and_two():
    xs = np.linspace(1.001, 1.999, 999)
    values = np.array([gamma(x) for x in xs])
    assert np.all(values < 1.0)
    assert values.min() == approx(0.8856031944108887, rel=1e-6)
    assert xs[values.argmin()] == approx(1.4616, abs=2e-3)


@pytest.mark.parametrize("x", [0.0, -1.0, -2.0, -37.0])
def test_gamma_pole(x):
    with raises(DomainError):
        gamma(x)


def test_gamma_overflow():
    with raises(GammaOverflowError):
        gamma(172.0)


def test_gamma_rejects_non_finite():
    with raises(DomainError):
        gamma(math.nan)


@pytest.mark.parametrize("x, expected", [(1.0, 0.0), (2.0, 0.0)])
def test_log_gamma_trivial(x, expected):
    assert log_gamma(x) == approx(expected, abs=1e-15)


@pytest.mark.parametrize("x", [0.3, 2.5, 10.5, 14.9, 15.1, 50.0, 171.5, 500.0, 1e4])
def test_log_gamma_against_scipy(x):
    expected = float(gammaln(x))
    assert abs(log_gamma(x) - expected) <= 1e-13 * max(1.0, abs(expected))


def test_log_gamma_domain():
    with raises(DomainError):
        log_gamma(0.0)
    with raises(DomainError):
        log_gamma(-1.5)


@pytest.mark.parametrize("x", [0.0, -1.0, -2.0, -100.0])
def test_recip_gamma_poles_are_exact_zero(x):
    assert recip_gamma(x) == 0.0


def test_recip_gamma_half():
    assert recip_gamma(0.5) == approx(0.564189583547756, rel=1e-14)


def test_recip_gamma_times_gamma():
    for x in [-30.5, -4.2, -0.7, 0.2, 1.0, 3.3, 60.0, 170.0]:
        assert recip_gamma(x) * gamma(x) == approx(1.0, rel=1e-12)


def test_recip_gamma_beyond_gamma_overflow():
    # Gamma overflows past 171.6, its reciprocal drops into the subnormal range
    assert recip_gamma(171.7) == approx(math.exp(-float(gammaln(171.7))), rel=1e-10)
    assert recip_gamma(171.7) > 0.0
    assert recip_gamma(200.0) == 0.0
    sign, log_mag = log_abs_recip_gamma(200.0)
    assert sign == 1.0
    assert log_mag == approx(-float(gammaln(200.0)), rel=1e-14)


def test_log_abs_recip_gamma():
    assert log_abs_recip_gamma(-3.0) == (0.0, -math.inf)
    sign, log_mag = log_abs_recip_gamma(-0.5)
    assert sign == -1.0
    assert math.exp(log_mag) == approx(1.0 / (2.0 * math.sqrt(math.pi)), rel=1e-13)
    sign, log_mag = log_abs_recip_gamma(-1.5)
    assert sign == 1.0
    assert sign * math.exp(log_mag) == approx(float(1.0 / sp_gamma(-1.5)), rel=1e-13)


def test_gamma_ratio_log_path():
    assert gamma_ratio(180.5, 179.5) == approx(179.5, rel=1e-11)
    assert gamma_ratio(3.0, 1.5) == approx(2.0 / (math.sqrt(math.pi) / 2.0), rel=1e-13)


def test_sin_pi_and_poles():
    assert sin_pi(3.0) == 0.0
    assert sin_pi(-7.0) == 0.0
    assert sin_pi(0.5) == 1.0
    assert sin_pi(-2.5) == approx(-1.0)
    assert is_pole(0.0) and is_pole(-4.0)
    assert not is_pole(-4.5) and not is_pole(2.0)

import math

import mpmath
import pytest
from hypothesis import settings
from scipy.special import erfcx

from mlcheck.store import ReportStore

settings.register_profile('mlcheck', max_examples=100, derandomize=True, deadline=None)
settings.load_profile('mlcheck')


def ml_half(z: float) -> float:
    """E_{1/2}(z) = exp(z^2) erfc(-z), through the scaled complementary error function"""
    return float(erfcx(-z))


def ml_half_half(z: float) -> float:
    """E_{1/2,1/2}(z) = 1/sqrt(pi) + z E_{1/2}(z)"""
    return 1.0 / math.sqrt(math.pi) + z * ml_half(z)


def ml_reference(alpha: float, beta: float, z: float, digits: int = 30) -> float:
    """Power series summed in mpmath with enough digits to cover the cancellation"""
    r = abs(z) ** (1.0 / alpha) if z else 0.0
    dps = digits + int(r / math.log(10.0)) + 10
    with mpmath.workdps(dps):
        zz = mpmath.mpf(z)
        a = mpmath.mpf(alpha)
        b = mpmath.mpf(beta)
        eps = mpmath.mpf(10) ** (-digits)
        total = mpmath.mpf(0)
        k = 0
        # past the peak at alpha k ~ r the terms shrink monotonically
        while True:
            term = zz ** k * mpmath.rgamma(a * k + b)
            total += term
            if alpha * k > r + 10 and abs(term) < eps:
                break
            k += 1
        return float(total)


@pytest.fixture
def store(tmp_path):
    return ReportStore(str(tmp_path / 'out'), svg_salt='tests')

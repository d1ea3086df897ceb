"""
Real-argument Gamma, log-Gamma and reciprocal Gamma

Lanczos approximation in the exp(g)-scaled rational form with 13 terms:
Gamma(x) = L(x) * ((x + g - 0.5) / e)^(x - 0.5) for x > 0. The rounding of
x + g - 0.5 is corrected to first order, so the power does not amplify it.
Negative arguments use Gamma(x) Gamma(-x) = -pi / (x sin(pi x)), which needs
no rounded 1 - x, and the reciprocal Gamma maps the poles to exact zeros.
Positive integers go through exact factorials.
"""

import math
from typing import Sequence, Tuple

from mlcheck.errors import DomainError, GammaOverflowError

LANCZOS_G = 6.024680040776729583740234375
LANCZOS_G_MINUS_HALF = LANCZOS_G - 0.5

# highest degree first
LANCZOS_NUM = (
    0.006061842346248906525783753964555936883222,
    0.5098416655656676188125178644804694509993,
    19.51992788247617482847860966235652136208,
    449.9445569063168119446858607650988409623,
    6955.999602515376140356310115515198987526,
    75999.29304014542649875303443598909137092,
    601859.6171681098786670226533699352302507,
    3481712.15498064590882071018964774556468,
    14605578.08768506808414169982791359218571,
    43338889.32467613834773723740590533316085,
    86363131.28813859145546927288977868422342,
    103794043.1163445451906271053616070238554,
    56906521.91347156388090791033559122686859,
)
LANCZOS_DENOM = (
    1.0,
    66.0,
    1925.0,
    32670.0,
    357423.0,
    2637558.0,
    13339535.0,
    45995730.0,
    105258076.0,
    150917976.0,
    120543840.0,
    39916800.0,
    0.0,
)

GAMMA_MAX_ARG = 171.61447887182298
MAX_FACTORIAL_ARG = 171
RATIO_LOG_THRESHOLD = 20.0

_LOG_PI = math.log(math.pi)


def _check_finite(x: float) -> None:
    if not math.isfinite(x):
        raise DomainError(f"Gamma argument must be finite, got {x}")


def is_pole(x: float) -> bool:
    """True for the non-positive integers, where Gamma has its poles"""
    return x <= 0 and x == math.floor(x)


def _exact_integer(x: float) -> bool:
    return x == math.floor(x) and 1 <= x <= MAX_FACTORIAL_ARG


def sin_pi(x: float) -> float:
    """sin(pi * x) with exact argument reduction, so sin_pi(n) == 0 for integers"""
    r = math.fmod(x, 2.0)
    if r > 1.0:
        r -= 2.0
    elif r < -1.0:
        r += 2.0
    if r > 0.5:
        r = 1.0 - r
    elif r < -0.5:
        r = -1.0 - r
    return math.sin(math.pi * r)


def _ratevl(x: float, num: Sequence[float], denom: Sequence[float]) -> float:
    # equal degrees; above 1 evaluate in 1/x so Horner stays bounded
    if x > 1.0:
        y = 1.0 / x
        num, denom = num[::-1], denom[::-1]
    else:
        y = x
    n = 0.0
    d = 0.0
    for a, b in zip(num, denom):
        n = n * y + a
        d = d * y + b
    return n / d


def _lanczos_scaled(x: float) -> float:
    return _ratevl(x, LANCZOS_NUM, LANCZOS_DENOM)


def _shifted(x: float) -> Tuple[float, float]:
    """y = fl(x + g - 1/2) and its rounding error y - (x + g - 1/2), exact"""
    y = x + LANCZOS_G_MINUS_HALF
    if x > LANCZOS_G_MINUS_HALF:
        err = (y - x) - LANCZOS_G_MINUS_HALF
    else:
        err = (y - LANCZOS_G_MINUS_HALF) - x
    return y, err


def _gamma_positive(x: float) -> float:
    # x > 0
    if x > GAMMA_MAX_ARG:
        raise GammaOverflowError(f"Gamma({x}) overflows a double")
    if _exact_integer(x):
        return float(math.factorial(int(x) - 1))
    y, err = _shifted(x)
    p = x - 0.5
    # first-order correction of y^p for the rounding of y
    scale = _lanczos_scaled(x) * (1.0 - err * p / y)
    half_power = y ** (p / 2.0)
    value = scale * (half_power * math.exp(-p)) * half_power
    if math.isinf(value):
        raise GammaOverflowError(f"Gamma({x}) overflows a double")
    return value


def _log_gamma_positive(x: float) -> float:
    if _exact_integer(x):
        return math.log(float(math.factorial(int(x) - 1)))
    y, err = _shifted(x)
    p = x - 0.5
    return math.log(_lanczos_scaled(x)) + p * (math.log(y) - 1.0) - p * err / y


def gamma(x: float) -> float:
    """Gamma function for finite real x away from the poles.

    Raises:
        DomainError: x is a non-positive integer or not finite
        GammaOverflowError: the value does not fit in a double
    """
    _check_finite(x)
    if is_pole(x):
        raise DomainError(f"Gamma has a pole at {x}")
    if x > 0:
        return _gamma_positive(x)

    # Gamma(x) = -pi / (x sin(pi x) Gamma(-x))
    s = sin_pi(x)
    head = -math.pi / (x * s)
    if -x <= GAMMA_MAX_ARG:
        return head / _gamma_positive(-x)
    # far left: Gamma(x) underflows towards zero, keep the sign
    log_mag = math.log(abs(head)) - _log_gamma_positive(-x)
    return math.copysign(math.exp(log_mag), head)


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0"""
    _check_finite(x)
    if x <= 0:
        raise DomainError(f"log_gamma needs x > 0, got {x}")
    if x < 15.0:
        return math.log(gamma(x))
    return _log_gamma_positive(x)


def recip_gamma(x: float) -> float:
    """1/Gamma(x), the entire continuation: exactly 0.0 at the poles."""
    _check_finite(x)
    if is_pole(x):
        return 0.0
    if x > 0:
        if x > GAMMA_MAX_ARG:
            return math.exp(-_log_gamma_positive(x))
        return 1.0 / _gamma_positive(x)

    # 1/Gamma(x) = -x sin(pi x) Gamma(-x) / pi
    head = -x * sin_pi(x) / math.pi
    if -x <= 170.0:
        return head * _gamma_positive(-x)
    log_mag = math.log(abs(head)) + _log_gamma_positive(-x)
    if log_mag > 709.0:
        raise GammaOverflowError(f"1/Gamma({x}) overflows a double")
    return math.copysign(math.exp(log_mag), head)


def log_abs_recip_gamma(x: float) -> Tuple[float, float]:
    """Return (sign, ln|1/Gamma(x)|); sign is 0.0 at the poles (log part -inf)."""
    _check_finite(x)
    if is_pole(x):
        return 0.0, -math.inf
    if x > 0:
        return 1.0, -log_gamma(x)
    s = sin_pi(x)
    return math.copysign(1.0, s), math.log(-x) + math.log(abs(s)) + log_gamma(-x) - _LOG_PI


def gamma_ratio(a: float, b: float) -> float:
    """Gamma(a) / Gamma(b), through log-Gamma differences when both exceed 20."""
    if a > RATIO_LOG_THRESHOLD and b > RATIO_LOG_THRESHOLD:
        return math.exp(log_gamma(a) - log_gamma(b))
    return gamma(a) * recip_gamma(b)

"""
Mittag-Leffler functions E_{alpha,beta}(z) on the real line

Three regimes, chosen on the scaled magnitude r = |z|**(1/alpha):
  - power series in double precision with compensated accumulation (z > 0, or r small)
  - power series in extended precision (mpmath) where the alternating series cancels
  - optimally truncated asymptotic expansion far down the negative axis
alpha = 1 and alpha = 2 with beta in {1, 2, 3} go through exp/cosh/cos closed forms.
"""

import cmath
import logging
import math
from functools import lru_cache
from typing import Optional

import mpmath

from mlcheck.errors import AccuracyError, DomainError, MLOverflowError
from mlcheck.models import AsymptoticValue, EvalPolicy, MLParams
from mlcheck.services.gamma_core import is_pole, log_abs_recip_gamma, log_gamma, recip_gamma
from mlcheck.services.summation import CompensatedSum

logger = logging.getLogger(__name__)

DEFAULT_POLICY = EvalPolicy()
MAX_ALPHA = 2.0
POSITIVE_R_LIMIT = 700.0

_LN10 = math.log(10.0)
_LOG_PI = math.log(math.pi)


def _scaled_magnitude(alpha: float, z: float) -> float:
    log_r = math.log(abs(z)) / alpha
    return math.exp(log_r) if log_r < 709.0 else math.inf


def _cancellation_exponent(alpha: float, r: float) -> float:
    # log of the largest series term, about ln(exp(r) / alpha)
    return r + max(0.0, -math.log(alpha))


def _series_term(k: int, alpha: float, beta: float, z: float, log_abs_z: float) -> float:
    x = alpha * k + beta
    if x <= 150.0 and k * log_abs_z < 600.0:
        return z ** k * recip_gamma(x)
    log_mag = k * log_abs_z - log_gamma(x)
    if log_mag > 709.0:
        raise MLOverflowError(f"series term {k} of E_{alpha},{beta}({z}) overflows a double")
    sign = -1.0 if (z < 0 and k % 2) else 1.0
    return sign * math.exp(log_mag)


def ml_series(params: MLParams, z: float, policy: EvalPolicy = DEFAULT_POLICY) -> float:
    """Truncated power series sum_k z^k / Gamma(alpha k + beta).

    Stops once the geometric tail majorant |t_k| q/(1 - q), q = |t_k / t_{k-1}|,
    drops below target_abs_error * max(1, |sum|). The term ratios decrease
    monotonically (log-convexity of Gamma), so the majorant is a true bound.

    Raises:
        AccuracyError: max_terms reached first; carries the last tail bound
        MLOverflowError: terms or sum beyond double range
    """
    alpha, beta = params.alpha, params.beta
    if z == 0:
        return recip_gamma(beta)

    log_abs_z = math.log(abs(z))
    acc = CompensatedSum()
    prev_mag = 0.0
    tail = math.inf
    for k in range(policy.max_terms):
        term = _series_term(k, alpha, beta, z, log_abs_z)
        acc.add(term)
        mag = abs(term)
        if k > 0 and mag == 0.0:
            return acc.value
        if prev_mag > 0.0:
            q = mag / prev_mag
            if q < 1.0:
                tail = mag * q / (1.0 - q)
                if tail <= policy.target_abs_error * max(1.0, abs(acc.value)):
                    value = acc.value
                    if not math.isfinite(value):
                        raise MLOverflowError(f"E_{alpha},{beta}({z}) overflows a double")
                    return value
        prev_mag = mag

    logger.warning(f"⚠️ series for E_{alpha},{beta}({z}) hit max_terms={policy.max_terms}")
    raise AccuracyError(
        f"power series for E_{alpha},{beta}({z}) did not reach {policy.target_abs_error:g} "
        f"within {policy.max_terms} terms",
        achieved_bound=tail,
    )


def ml_series_extended(params: MLParams, z: float, policy: EvalPolicy = DEFAULT_POLICY) -> float:
    """Power series summed in mpmath with enough digits to absorb the cancellation.

    The largest term is about exp(r), r = |z|**(1/alpha), so r / ln(10) digits
    are lost to cancellation; the working precision adds them on top of double.
    """
    alpha, beta = params.alpha, params.beta
    if z == 0:
        return recip_gamma(beta)

    r = _scaled_magnitude(alpha, z)
    dps = 25 + int(math.ceil(r / _LN10))
    logger.debug(f"extended series for E_{alpha},{beta}({z}) at {dps} digits")

    with mpmath.workdps(dps):
        zz = mpmath.mpf(z)
        a = mpmath.mpf(alpha)
        b = mpmath.mpf(beta)
        tol = mpmath.mpf(policy.target_abs_error)
        total = mpmath.mpf(0)
        power = mpmath.mpf(1)
        prev_mag = None
        tail = mpmath.inf
        for k in range(policy.max_terms):
            term = power * mpmath.rgamma(a * k + b)
            total += term
            mag = abs(term)
            if prev_mag:
                q = mag / prev_mag
                if q < 1:
                    tail = mag * q / (1 - q)
                    if tail <= tol:
                        return float(total)
            prev_mag = mag
            power *= zz

    raise AccuracyError(
        f"extended series for E_{alpha},{beta}({z}) did not converge in {policy.max_terms} terms",
        achieved_bound=float(tail),
    )


def _log_recip_gamma_envelope(x: float) -> float:
    """ln of an upper bound for |1/Gamma(x)|: Gamma(1 - x)/pi below 1/2, 1/Gamma(x) above"""
    if x >= 0.5:
        return -log_gamma(x)
    return log_gamma(1.0 - x) - _LOG_PI


def _exponential_pair(alpha: float, beta: float, r: float) -> float:
    # conjugate pair (1/alpha) zeta^(1-beta) exp(zeta), zeta = r exp(+-i pi/alpha)
    zeta = cmath.rect(r, math.pi / alpha)
    return 2.0 / alpha * (zeta ** (1.0 - beta) * cmath.exp(zeta)).real


def ml_asymptotic(params: MLParams, z: float, policy: EvalPolicy = DEFAULT_POLICY) -> AsymptoticValue:
    """Asymptotic expansion -sum_{k>=1} z^(-k) / Gamma(beta - alpha k) for z -> -inf.

    The divergent series is cut before its smallest term; a bound on the
    first omitted term is returned as the error estimate. For
    1 < alpha <= 2 the oscillating exponential pair is added.

    Raises:
        DomainError: z >= 0 or alpha outside (0, 2]
        AccuracyError: the smallest term is above target_abs_error at this |z|
    """
    alpha, beta = params.alpha, params.beta
    if z >= 0:
        raise DomainError(f"asymptotic expansion is for z < 0, got {z}")
    if alpha > MAX_ALPHA:
        raise DomainError(f"asymptotic expansion supports alpha <= {MAX_ALPHA}, got {alpha}")

    log_abs_z = math.log(-z)
    acc = CompensatedSum()
    prev_bound = math.inf
    error_estimate = 0.0
    n_terms = 0
    integer_alpha = float(alpha).is_integer()
    for k in range(1, policy.max_terms + 1):
        x = beta - alpha * k
        if integer_alpha and is_pole(x):
            # every later argument is a pole as well
            break
        # truncation is decided on the envelope, which drops the oscillating
        # sin(pi x) factor of 1/Gamma(x); it is log-convex in k and bounds |term|
        log_bound = _log_recip_gamma_envelope(x) - k * log_abs_z
        bound = math.exp(log_bound) if log_bound > -745.0 else 0.0
        if bound < policy.target_abs_error * 1e-3 or bound > prev_bound:
            error_estimate = bound
            break
        prev_bound = bound
        if is_pole(x):
            continue
        sign, log_recip = log_abs_recip_gamma(x)
        log_mag = log_recip - k * log_abs_z
        mag = math.exp(log_mag) if log_mag > -745.0 else 0.0
        # z^(-k) has sign (-1)^k on the negative axis
        z_sign = -1.0 if k % 2 else 1.0
        acc.add(-z_sign * sign * mag)
        n_terms += 1
    else:
        error_estimate = prev_bound

    if error_estimate > policy.target_abs_error:
        raise AccuracyError(
            f"asymptotic expansion of E_{alpha},{beta}({z}) bottoms out at {error_estimate:.3e}",
            achieved_bound=error_estimate,
        )

    value = acc.value
    if alpha > 1.0:
        value += _exponential_pair(alpha, beta, _scaled_magnitude(alpha, z))
    return AsymptoticValue(value=value, error_estimate=error_estimate, n_terms=n_terms)


def _closed_form(alpha: float, beta: float, z: float) -> Optional[float]:
    """exp/cosh/cos closed forms for alpha in {1, 2}, beta in {1, 2, 3}"""
    if beta not in (1.0, 2.0, 3.0) or alpha not in (1.0, 2.0):
        return None
    # (e^z - 1 - z)/z^2 style forms cancel near zero; leave those to the series
    if beta == 3.0 and abs(z) < 1.0:
        return None
    try:
        if alpha == 1.0:
            if beta == 1.0:
                return math.exp(z)
            if beta == 2.0:
                return math.expm1(z) / z
            return (math.expm1(z) - z) / (z * z)
        if z > 0:
            s = math.sqrt(z)
            if beta == 1.0:
                return math.cosh(s)
            if beta == 2.0:
                return math.sinh(s) / s
            return (math.cosh(s) - 1.0) / z
        s = math.sqrt(-z)
        if beta == 1.0:
            return math.cos(s)
        if beta == 2.0:
            return math.sin(s) / s
        return (1.0 - math.cos(s)) / (-z)
    except OverflowError as e:
        raise MLOverflowError(f"E_{alpha},{beta}({z}) overflows a double") from e


@lru_cache(maxsize=1 << 16)
def _evaluate(alpha: float, beta: float, z: float, policy: EvalPolicy) -> float:
    if z == 0:
        return recip_gamma(beta)
    closed = _closed_form(alpha, beta, z)
    if closed is not None:
        return closed

    params = MLParams(alpha=alpha, beta=beta)
    r = _scaled_magnitude(alpha, z)
    if z > 0:
        if r > POSITIVE_R_LIMIT:
            raise MLOverflowError(f"E_{alpha},{beta}({z}) needs z <= 700**alpha")
        value = ml_series(params, z, policy)
    elif _cancellation_exponent(alpha, r) <= policy.series_cutoff:
        value = ml_series(params, z, policy)
    elif r < policy.asymptotic_cutoff:
        value = ml_series_extended(params, z, policy)
    else:
        value = ml_asymptotic(params, z, policy).value

    if not math.isfinite(value):
        raise MLOverflowError(f"E_{alpha},{beta}({z}) overflows a double")
    return value


def ml_eval(params: MLParams, z: float, policy: EvalPolicy = DEFAULT_POLICY) -> float:
    """E_{alpha,beta}(z) for real z, dispatching over the evaluation regimes.

    Raises:
        DomainError: z not finite, or alpha above 2
        MLOverflowError: value beyond double range
        AccuracyError: propagated from the selected regime
    """
    z = float(z)
    if not math.isfinite(z):
        raise DomainError(f"Mittag-Leffler argument must be finite, got {z}")
    if params.alpha > MAX_ALPHA:
        raise DomainError(f"alpha above {MAX_ALPHA} is not supported, got {params.alpha}")
    return _evaluate(float(params.alpha), float(params.beta), z, policy)


def mittag_leffler(alpha: float, z: float, beta: float = 1.0,
                   policy: EvalPolicy = DEFAULT_POLICY) -> float:
    """Shorthand for ml_eval(MLParams(alpha=alpha, beta=beta), z)"""
    return ml_eval(MLParams(alpha=alpha, beta=beta), z, policy)


def ml_deriv_factor(alpha: float, lam: float, t: float) -> float:
    """E_{alpha,alpha}(lam t^alpha), the factor in d/dt E_alpha(lam t^alpha) = lam t^(alpha-1) E_{alpha,alpha}(lam t^alpha)"""
    if t < 0:
        raise DomainError(f"t must be non-negative, got {t}")
    if not 0 < alpha <= 1:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")
    return mittag_leffler(alpha, lam * t ** alpha, beta=alpha)

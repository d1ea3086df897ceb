"""
Numerical instances of the Mittag-Leffler product identities

Each *_gap function returns lhs - rhs of an identity that holds for the
exponential (alpha = 1) and fails for 0 < alpha < 1:
  - E(-2x) = E(-x)^2                                  (squared identity)
  - (n+1) E(-n x) = sum_j E(-(n-j) x) E(-j x)         (Cauchy-product family)
  - E_{a,a}(-2x) = E_{a,a}(-x) E(-x)                  (time-derivative form)
  - E(a (t+s)^alpha) = E(a t^alpha) E(a s^alpha)      (semigroup property)
with x = k^alpha t^alpha. The series coefficients a_n, b_n behind the
squared identity and their n = 2 ratio test are exposed as well.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List, Tuple

import numpy as np

from mlcheck.errors import DomainError
from mlcheck.models import CoeffSeq, GapReport, GapSample, Identity, UniformGrid
from mlcheck.services.gamma_core import gamma, log_gamma, recip_gamma
from mlcheck.services.mittag_leffler import mittag_leffler
from mlcheck.services.summation import CompensatedSum

logger = logging.getLogger(__name__)

LOG_GAMMA_FROM_N = 30


def _check_identity_args(alpha: float, k: float, t: float) -> None:
    if not 0 < alpha <= 1:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")
    if k <= 0:
        raise DomainError(f"k must be positive, got {k}")
    if t < 0:
        raise DomainError(f"t must be non-negative, got {t}")


def _scaled_time(alpha: float, k: float, t: float) -> float:
    return k ** alpha * t ** alpha


def _check_coeff_args(n: int, alpha: float) -> None:
    if n < 0:
        raise DomainError(f"coefficient index must be non-negative, got {n}")
    if alpha <= 0:
        raise DomainError(f"alpha must be positive, got {alpha}")


def coeff_a(n: int, alpha: float) -> float:
    """a_n = 1 / Gamma(n alpha + 1), the coefficient of (-2x)^n in E(-2x)"""
    _check_coeff_args(n, alpha)
    return recip_gamma(n * alpha + 1.0)


def coeff_b(n: int, alpha: float) -> float:
    """b_n = 2^-n sum_j 1 / (Gamma((n-j) alpha + 1) Gamma(j alpha + 1)), the coefficient of (-2x)^n in E(-x)^2"""
    _check_coeff_args(n, alpha)
    acc = CompensatedSum()
    if n <= LOG_GAMMA_FROM_N:
        for j in range(n + 1):
            acc.add(recip_gamma((n - j) * alpha + 1.0) * recip_gamma(j * alpha + 1.0))
        return acc.value * 2.0 ** (-n)

    log_half = n * math.log(2.0)
    for j in range(n + 1):
        acc.add(math.exp(-log_half - log_gamma((n - j) * alpha + 1.0) - log_gamma(j * alpha + 1.0)))
    return acc.value


def coeff_ratio(alpha: float) -> float:
    """Gamma(2 alpha + 1) / (4 Gamma(alpha + 1)^2); equals 1/2 exactly when a_2 == b_2"""
    if alpha <= 0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    if alpha > 20:
        return math.exp(log_gamma(2.0 * alpha + 1.0) - 2.0 * log_gamma(alpha + 1.0)) / 4.0
    g = gamma(alpha + 1.0)
    return gamma(2.0 * alpha + 1.0) / (4.0 * g * g)


def coeff_seq_a(alpha: float, length: int) -> CoeffSeq:
    return CoeffSeq(alpha=alpha, values=[coeff_a(n, alpha) for n in range(length)])


def coeff_seq_b(alpha: float, length: int) -> CoeffSeq:
    return CoeffSeq(alpha=alpha, values=[coeff_b(n, alpha) for n in range(length)])


def cauchy_product(a: CoeffSeq, b: CoeffSeq, n_max: int) -> CoeffSeq:
    """c_n = sum_{j<=n} a_j b_{n-j} for n = 0..n_max"""
    if not math.isclose(a.alpha, b.alpha, rel_tol=0.0, abs_tol=1e-15):
        raise DomainError(f"sequences belong to different orders: {a.alpha} vs {b.alpha}")
    if n_max < 0:
        raise DomainError(f"n_max must be non-negative, got {n_max}")
    if a.length <= n_max or b.length <= n_max:
        raise DomainError(
            f"need more than {n_max} coefficients, got lengths {a.length} and {b.length}"
        )
    c = np.convolve(np.asarray(a.values[:n_max + 1]), np.asarray(b.values[:n_max + 1]))
    return CoeffSeq(alpha=a.alpha, values=c[:n_max + 1].tolist())


def coeff_mismatch(alpha: float, n_max: int) -> np.ndarray:
    """Rows (n, a_n, b_n, a_n - b_n) for n = 0..n_max"""
    rows = []
    for n in range(n_max + 1):
        a_n = coeff_a(n, alpha)
        b_n = coeff_b(n, alpha)
        rows.append((float(n), a_n, b_n, a_n - b_n))
    return np.array(rows, dtype=float)


def identity6_sides(alpha: float, k: float, t: float) -> Tuple[float, float]:
    _check_identity_args(alpha, k, t)
    x = _scaled_time(alpha, k, t)
    e1 = mittag_leffler(alpha, -x)
    return mittag_leffler(alpha, -2.0 * x), e1 * e1


def identity6_gap(alpha: float, k: float, t: float) -> float:
    """E_alpha(-2 k^a t^a) - E_alpha(-k^a t^a)^2"""
    lhs, rhs = identity6_sides(alpha, k, t)
    return lhs - rhs


def lemma5_lhs_rhs(n: int, alpha: float, k: float, t: float) -> Tuple[float, float]:
    """(n+1) E(-n x) and sum_j E(-(n-j) x) E(-j x), both at the same t"""
    _check_identity_args(alpha, k, t)
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    x = _scaled_time(alpha, k, t)
    e = [mittag_leffler(alpha, -j * x) for j in range(n + 1)]
    rhs = CompensatedSum()
    for j in range(n + 1):
        rhs.add(e[n - j] * e[j])
    return (n + 1) * e[n], rhs.value


def lemma5_residual(n: int, alpha: float, k: float, t: float) -> float:
    lhs, rhs = lemma5_lhs_rhs(n, alpha, k, t)
    return lhs - rhs


def derivative_identity_sides(alpha: float, k: float, t: float) -> Tuple[float, float]:
    _check_identity_args(alpha, k, t)
    x = _scaled_time(alpha, k, t)
    lhs = mittag_leffler(alpha, -2.0 * x, beta=alpha)
    rhs = mittag_leffler(alpha, -x, beta=alpha) * mittag_leffler(alpha, -x)
    return lhs, rhs


def derivative_identity_gap(alpha: float, k: float, t: float) -> float:
    """E_{a,a}(-2x) - E_{a,a}(-x) E_a(-x), x = k^a t^a"""
    lhs, rhs = derivative_identity_sides(alpha, k, t)
    return lhs - rhs


def semigroup_sides(alpha: float, a: float, t: float, s: float) -> Tuple[float, float]:
    if not 0 < alpha <= 1:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")
    if t < 0 or s < 0:
        raise DomainError(f"t and s must be non-negative, got t={t}, s={s}")
    lhs = mittag_leffler(alpha, a * (t + s) ** alpha)
    rhs = mittag_leffler(alpha, a * t ** alpha) * mittag_leffler(alpha, a * s ** alpha)
    return lhs, rhs


def semigroup_gap(alpha: float, a: float, t: float, s: float) -> float:
    """E(a (t+s)^alpha) - E(a t^alpha) E(a s^alpha)"""
    lhs, rhs = semigroup_sides(alpha, a, t, s)
    return lhs - rhs


def _semigroup_on_diagonal(alpha: float, k: float, t: float) -> Tuple[float, float]:
    # scans use a = -k^alpha and s = t
    return semigroup_sides(alpha, -(k ** alpha), t, t)


IDENTITY_SIDES: Dict[Identity, Callable[[float, float, float], Tuple[float, float]]] = {
    Identity.EQ6: identity6_sides,
    Identity.REMARK: derivative_identity_sides,
    Identity.SEMIGROUP: _semigroup_on_diagonal,
}


def scan_gap(alpha: float, k: float, t_grid: UniformGrid, which: Identity = Identity.EQ6,
             workers: int = 1) -> GapReport:
    """Tabulate lhs, rhs and gap of an identity over the grid.

    Points may be evaluated on worker threads; samples come back in grid order.
    """
    which = Identity(which)
    sides = IDENTITY_SIDES[which]
    times = [float(t) for t in t_grid.points()]

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            pairs = list(pool.map(lambda t: sides(alpha, k, t), times))
    else:
        pairs = [sides(alpha, k, t) for t in times]

    samples: List[GapSample] = [
        GapSample(t=t, lhs=lhs, rhs=rhs, gap=lhs - rhs) for t, (lhs, rhs) in zip(times, pairs)
    ]
    report = GapReport.from_samples(which.value, alpha, k, samples)
    logger.debug(f"{which.value} scan alpha={alpha} k={k}: sup gap {report.sup_gap:.3e} at t={report.argmax_t}")
    return report

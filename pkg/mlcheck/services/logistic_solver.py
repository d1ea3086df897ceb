"""
Fractional logistic equation D^alpha u = k^alpha u (1 - u), u(0) = u0

West's candidate series u(t) = sum_n c^n E_alpha(-n k^alpha t^alpha),
c = (u0 - 1) / u0, its term-wise Caputo derivative and the residual it
leaves in the equation, checked against a fractional Adams-Bashforth-Moulton
(PECE) reference solution. At alpha = 1 the series is the logistic closed
form; for 0 < alpha < 1 the residual does not vanish.
"""

import logging
import math
from typing import List, Optional

import numpy as np

from mlcheck.errors import AccuracyError, DivergenceError, DomainError, NumericalFailure
from mlcheck.models import (
    GapReport,
    GapSample,
    GridFunction,
    LogisticProblem,
    ResidualReport,
    ResidualSample,
    UniformGrid,
    WestSeriesConfig,
)
from mlcheck.services.caputo import T_CUT_STEPS, caputo_l1
from mlcheck.services.gamma_core import gamma
from mlcheck.services.identity_lab import lemma5_residual
from mlcheck.services.mittag_leffler import mittag_leffler
from mlcheck.services.summation import CompensatedSum

logger = logging.getLogger(__name__)

DEFAULT_WEST_CONFIG = WestSeriesConfig()
WEST_VS_FABM = 'west-vs-fabm'


def closed_form_logistic(k: float, u0: float, t: float) -> float:
    """u0 / (u0 + (1 - u0) exp(-k t)), the solution at alpha = 1"""
    if k <= 0:
        raise DomainError(f"k must be positive, got {k}")
    if not 0 <= u0 <= 1:
        raise DomainError(f"u0 must lie in [0, 1], got {u0}")
    if t < 0:
        raise DomainError(f"t must be non-negative, got {t}")
    if u0 == 0:
        return 0.0
    return u0 / (u0 + (1.0 - u0) * math.exp(-k * t))


def series_ratio(u0: float) -> float:
    """c = (u0 - 1) / u0; the series converges for |c| < 1, i.e. u0 > 1/2

    Raises:
        DomainError: u0 == 0
        DivergenceError: u0 <= 1/2
    """
    if u0 == 0:
        raise DomainError("West series is undefined for u0 = 0: c = (u0 - 1)/u0 has no value")
    c = (u0 - 1.0) / u0
    if abs(c) >= 1.0:
        raise DivergenceError(
            f"West series diverges for u0={u0}: needs |(u0 - 1)/u0| < 1 (u0 > 1/2), got {abs(c):.6g}"
        )
    return c


def _truncation_order(q: float, cfg: WestSeriesConfig, weighted: bool) -> int:
    """Smallest N whose tail majorant sum_{n>N} w_n q^n drops below tail_tol.

    0 < E_alpha(-x) <= 1, so q^n (or n q^n when weighted) bounds the n-th term.
    """
    if cfg.truncation_n is not None:
        return cfg.truncation_n
    if q == 0.0:
        return 0
    for n in range(cfg.max_terms + 1):
        nxt = q ** (n + 1)
        if weighted:
            tail = nxt * ((n + 1) - n * q) / (1.0 - q) ** 2
        else:
            tail = nxt / (1.0 - q)
        if tail < cfg.tail_tol:
            return n
    raise AccuracyError(
        f"West series tail stays above {cfg.tail_tol:g} after {cfg.max_terms} terms (|c|={q:.6g})",
        achieved_bound=tail,
    )


def _decay_terms(p: LogisticProblem, t: float, n_max: int) -> List[float]:
    """E_alpha(-n k^alpha t^alpha) for n = 0..n_max"""
    if t < 0:
        raise DomainError(f"t must be non-negative, got {t}")
    x = p.rate * t ** p.alpha
    return [mittag_leffler(p.alpha, -n * x) for n in range(n_max + 1)]


def west_series(p: LogisticProblem, t: float, cfg: WestSeriesConfig = DEFAULT_WEST_CONFIG) -> float:
    """sum_{n=0}^N c^n E_alpha(-n k^alpha t^alpha)"""
    c = series_ratio(p.u0)
    n_max = _truncation_order(abs(c), cfg, weighted=False)
    terms = _decay_terms(p, t, n_max)
    acc = CompensatedSum()
    for n, e in enumerate(terms):
        acc.add(c ** n * e)
    return acc.value


def west_series_caputo(p: LogisticProblem, t: float, cfg: WestSeriesConfig = DEFAULT_WEST_CONFIG) -> float:
    """-k^alpha sum_{n=1}^N n c^n E_alpha(-n k^alpha t^alpha), the term-wise Caputo derivative.

    Each term is an eigenfunction of the Caputo derivative with eigenvalue -n k^alpha.
    """
    c = series_ratio(p.u0)
    n_max = _truncation_order(abs(c), cfg, weighted=True)
    terms = _decay_terms(p, t, n_max)
    acc = CompensatedSum()
    for n in range(1, n_max + 1):
        acc.add(n * c ** n * terms[n])
    return -p.rate * acc.value


def _residual_sample(p: LogisticProblem, t: float, cfg: WestSeriesConfig) -> ResidualSample:
    u = west_series(p, t, cfg)
    lhs = west_series_caputo(p, t, cfg)
    rhs = p.rate * u * (1.0 - u)
    return ResidualSample(t=t, u=u, lhs=lhs, rhs=rhs, residual=lhs - rhs)


def west_residual(p: LogisticProblem, t_grid: UniformGrid,
                  cfg: WestSeriesConfig = DEFAULT_WEST_CONFIG) -> ResidualReport:
    """Residual D^alpha u - k^alpha u (1 - u) of the West series over the grid"""
    series_ratio(p.u0)
    samples = [_residual_sample(p, float(t), cfg) for t in t_grid.points()]
    report = ResidualReport.from_samples(p, samples)
    logger.debug(
        f"west residual alpha={p.alpha} k={p.k} u0={p.u0}: sup {report.sup_residual:.3e} at t={report.argmax_t}"
    )
    return report


def west_residual_via_lemma(p: LogisticProblem, t: float,
                            cfg: WestSeriesConfig = DEFAULT_WEST_CONFIG) -> float:
    """The residual assembled as -k^alpha sum_n c^n R_n(t), R_n the Cauchy-product family residual.

    Independent of west_series_caputo: u - u^2 is expanded term by term, so the
    n-th coefficient of the residual is (n+1) E(-n x) - sum_j E(-(n-j) x) E(-j x).
    """
    c = series_ratio(p.u0)
    if t < 0:
        raise DomainError(f"t must be non-negative, got {t}")
    n_max = _truncation_order(abs(c), cfg, weighted=True)
    acc = CompensatedSum()
    for n in range(2, n_max + 1):
        # R_0 and R_1 vanish identically
        acc.add(c ** n * lemma5_residual(n, p.alpha, p.k, t))
    return -p.rate * acc.value


def west_residual_l1(p: LogisticProblem, grid: UniformGrid,
                     cfg: WestSeriesConfig = DEFAULT_WEST_CONFIG,
                     t_cut: Optional[float] = None) -> ResidualReport:
    """Residual with the Caputo derivative taken by the L1 scheme on sampled series values.

    Agrees with west_residual to O(h^(2 - alpha)) away from t = 0; samples
    before t_cut (default 10 h) are dropped.
    """
    if t_cut is None:
        t_cut = T_CUT_STEPS * grid.h
    u = GridFunction.sample(grid, lambda t: west_series(p, t, cfg))
    derivative = caputo_l1(u, p.alpha).array
    samples = []
    for t, value, lhs in zip(grid.points(), u.array, derivative):
        if t < t_cut - 1e-12 * grid.h or t == grid.t0:
            continue
        rhs = p.rate * value * (1.0 - value)
        samples.append(ResidualSample(t=float(t), u=float(value), lhs=float(lhs), rhs=float(rhs),
                                      residual=float(lhs - rhs)))
    if not samples:
        raise DomainError(f"no grid points at or beyond t_cut={t_cut}")
    return ResidualReport.from_samples(p, samples)


def _logistic_rhs(rate: float, u):
    return rate * u * (1.0 - u)


def fabm_solve(p: LogisticProblem, grid: UniformGrid) -> GridFunction:
    """Fractional Adams-Bashforth-Moulton solution in PECE form.

    Rectangle-rule predictor, product-trapezoid corrector, one correction
    sweep per step. The memory sums are dot products against precomputed
    weight tables, so each step costs O(n).

    Raises:
        NumericalFailure: a predictor or corrector value is not finite
    """
    alpha, rate, u0 = p.alpha, p.rate, p.u0
    n_steps = grid.n_steps
    h = grid.h

    i = np.arange(n_steps + 1, dtype=float)
    predictor_w = (i + 1.0) ** alpha - i ** alpha
    corrector_w = (i + 2.0) ** (alpha + 1.0) + i ** (alpha + 1.0) - 2.0 * (i + 1.0) ** (alpha + 1.0)
    c_pred = h ** alpha / gamma(alpha + 1.0)
    c_corr = h ** alpha / gamma(alpha + 2.0)

    u = np.empty(n_steps + 1, dtype=float)
    f = np.empty(n_steps + 1, dtype=float)
    u[0] = u0
    f[0] = _logistic_rhs(rate, u0)

    for n in range(n_steps):
        predicted = u0 + c_pred * np.dot(predictor_w[n::-1], f[:n + 1])
        if not math.isfinite(predicted):
            raise NumericalFailure(f"predictor is not finite at step {n + 1} (t={grid.t0 + (n + 1) * h})")

        first_w = n ** (alpha + 1.0) - (n - alpha) * (n + 1.0) ** alpha
        memory = first_w * f[0]
        if n > 0:
            memory += np.dot(corrector_w[n - 1::-1], f[1:n + 1])
        corrected = u0 + c_corr * (_logistic_rhs(rate, predicted) + memory)
        if not math.isfinite(corrected):
            raise NumericalFailure(f"corrector is not finite at step {n + 1} (t={grid.t0 + (n + 1) * h})")

        u[n + 1] = corrected
        f[n + 1] = _logistic_rhs(rate, corrected)

    logger.debug(f"fabm alpha={alpha} k={p.k} u0={u0}: {n_steps} steps, h={h:g}, u(T)={u[-1]:.6f}")
    return GridFunction(grid=grid, values=u.tolist())


def fabm_refinement_gap(p: LogisticProblem, grid: UniformGrid) -> float:
    """max |u_h - u_{h/2}| over the nodes of grid, an estimate of the solver error on grid"""
    coarse = fabm_solve(p, grid).array
    fine_grid = UniformGrid(t0=grid.t0, h=grid.h / 2.0, n_steps=2 * grid.n_steps)
    fine = fabm_solve(p, fine_grid).array[::2]
    return float(np.max(np.abs(coarse - fine)))


def compare_west_vs_reference(p: LogisticProblem, grid: UniformGrid,
                              cfg: WestSeriesConfig = DEFAULT_WEST_CONFIG) -> GapReport:
    """Tabulate west_series (lhs) against fabm_solve (rhs) on the grid"""
    series_ratio(p.u0)
    reference = fabm_solve(p, grid).array
    samples = []
    for t, ref in zip(grid.points(), reference):
        west = west_series(p, float(t), cfg)
        samples.append(GapSample(t=float(t), lhs=west, rhs=float(ref), gap=west - float(ref)))
    return GapReport.from_samples(WEST_VS_FABM, p.alpha, p.k, samples, u0=p.u0)

"""
Caputo fractional derivative of order 0 < alpha < 1

Exact power rule for t^b and the L1 scheme on uniform grids. The L1
weights act on first differences, so constants are annihilated exactly and
piecewise-linear data is differentiated without discretization error.
"""

import logging
import math
from typing import Optional, Sequence

import numpy as np

from mlcheck.errors import DivergenceError, DomainError
from mlcheck.models import GridFunction, UniformGrid
from mlcheck.services.gamma_core import gamma, gamma_ratio
from mlcheck.services.mittag_leffler import mittag_leffler

logger = logging.getLogger(__name__)

T_CUT_STEPS = 10


def _check_order(alpha: float) -> None:
    if not 0 < alpha < 1:
        raise DomainError(f"Caputo order must lie in (0, 1), got {alpha}")


def caputo_power_rule(b: float, alpha: float, t: float) -> float:
    """Caputo derivative of t^b: t^(b - alpha) Gamma(b + 1) / Gamma(b + 1 - alpha).

    alpha = 1 is accepted as the integer-order limit b t^(b - 1).

    Raises:
        DomainError: b <= -1, b == 0, t < 0 or alpha outside (0, 1]
        DivergenceError: t == 0 with b < alpha
    """
    if b <= -1 or b == 0:
        raise DomainError(f"power rule needs b > -1 and b != 0, got b={b}")
    if not 0 < alpha <= 1:
        raise DomainError(f"Caputo order must lie in (0, 1], got {alpha}")
    if t < 0:
        raise DomainError(f"t must be non-negative, got {t}")

    coeff = gamma_ratio(b + 1.0, b + 1.0 - alpha)
    if t == 0:
        if b < alpha:
            raise DivergenceError(f"D^{alpha} t^{b} is unbounded at t = 0")
        return coeff if b == alpha else 0.0
    return t ** (b - alpha) * coeff


def l1_weights(n: int, alpha: float) -> np.ndarray:
    """w_j = (j + 1)^(1 - alpha) - j^(1 - alpha) for j = 0..n-1"""
    j = np.arange(n, dtype=float)
    return (j + 1.0) ** (1.0 - alpha) - j ** (1.0 - alpha)


def caputo_l1(f: GridFunction, alpha: float) -> GridFunction:
    """L1 approximation of the Caputo derivative at every grid point.

    D(t_n) = h^-alpha / Gamma(2 - alpha) * sum_{j<n} w_j (f_{n-j} - f_{n-j-1});
    the value at t_0 is 0.
    """
    _check_order(alpha)
    grid = f.grid
    values = f.array
    diffs = np.diff(values)
    n = grid.n_steps

    history = np.convolve(l1_weights(n, alpha), diffs)[:n]
    out = np.empty(n + 1, dtype=float)
    out[0] = 0.0
    out[1:] = history * (grid.h ** (-alpha) / gamma(2.0 - alpha))
    return GridFunction(grid=grid, values=out.tolist())


def eigenfunction_residual(alpha: float, lam: float, grid: UniformGrid,
                           t_cut: Optional[float] = None) -> float:
    """max |L1[E_alpha(lam t^alpha)] - lam E_alpha(lam t^alpha)| over grid points t >= t_cut.

    t_cut defaults to 10 h: the first few L1 values of E_alpha(lam t^alpha)
    carry an O(1) error from the unbounded derivative at t = 0.
    """
    _check_order(alpha)
    if t_cut is None:
        t_cut = T_CUT_STEPS * grid.h

    f = GridFunction.sample(grid, lambda t: mittag_leffler(alpha, lam * t ** alpha))
    derivative = caputo_l1(f, alpha).array
    t = grid.points()
    mask = t >= t_cut - 1e-12 * grid.h
    mask[0] = False
    if not mask.any():
        raise DomainError(f"no grid points at or beyond t_cut={t_cut}")

    residual = np.abs(derivative[mask] - lam * f.array[mask])
    worst = float(residual.max())
    logger.debug(f"eigenfunction residual alpha={alpha} lam={lam} h={grid.h}: {worst:.3e}")
    return worst


def convergence_order(steps: Sequence[float], errors: Sequence[float]) -> float:
    """Least-squares slope of log(error) against log(h)"""
    if len(steps) != len(errors) or len(steps) < 2:
        raise ValueError("need at least two (h, error) pairs")
    slope, _ = np.polyfit(np.log(steps), np.log(errors), 1)
    return float(slope)


def power_rule_error(b: float, alpha: float, grid: UniformGrid, t_eval: Optional[float] = None) -> float:
    """|L1[t^b] - power rule| at t_eval (default: the last grid point)"""
    f = GridFunction.sample(grid, lambda t: t ** b)
    derivative = caputo_l1(f, alpha).array
    t = grid.points()
    if t_eval is None:
        idx = grid.n_steps
    else:
        idx = int(round((t_eval - grid.t0) / grid.h))
        if idx < 1 or idx > grid.n_steps or not math.isclose(t[idx], t_eval, rel_tol=1e-9):
            raise DomainError(f"t_eval={t_eval} is not an interior grid point")
    return abs(derivative[idx] - caputo_power_rule(b, alpha, t[idx]))

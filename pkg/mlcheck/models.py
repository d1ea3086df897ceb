from enum import Enum
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class MLParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    alpha: float = Field(gt=0)
    beta: float = Field(default=1.0, gt=0)


class EvalPolicy(BaseModel):
    """Accuracy budget for Mittag-Leffler evaluation.

    Cutoffs are compared with r = |z|**(1/alpha) on the negative axis. The
    power series is summed in double precision while the log of its largest
    term, r + ln(1/alpha), stays within series_cutoff, in extended precision
    while r < asymptotic_cutoff, and the asymptotic expansion is used beyond.
    """
    model_config = ConfigDict(frozen=True)

    target_abs_error: float = Field(default=1e-12, gt=0, lt=1)
    max_terms: int = Field(default=10_000, ge=1)
    series_cutoff: float = Field(default=8.0, gt=0)
    asymptotic_cutoff: float = Field(default=30.0, gt=0)

    @model_validator(mode='after')
    def check_cutoffs(self):
        if self.series_cutoff >= self.asymptotic_cutoff:
            raise ValueError("series_cutoff must be below asymptotic_cutoff")
        return self


class AsymptoticValue(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: float
    error_estimate: float
    n_terms: int


class LogisticProblem(BaseModel):
    model_config = ConfigDict(frozen=True)

    alpha: float = Field(gt=0, le=1)
    k: float = Field(gt=0)
    u0: float = Field(ge=0, le=1)

    @property
    def rate(self) -> float:
        """k**alpha, the coefficient of the fractional logistic equation"""
        return self.k ** self.alpha


class WestSeriesConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    truncation_n: Optional[int] = Field(default=None, ge=1)  # None means adaptive
    tail_tol: float = Field(default=1e-12, gt=0)
    max_terms: int = Field(default=5_000, ge=1)


class UniformGrid(BaseModel):
    model_config = ConfigDict(frozen=True)

    t0: float = 0.0
    h: float = Field(gt=0)
    n_steps: int = Field(ge=1)

    @classmethod
    def from_span(cls, t_max: float, steps: int, t0: float = 0.0) -> 'UniformGrid':
        if t_max <= t0:
            raise ValueError(f"t_max must exceed t0, got t_max={t_max}, t0={t0}")
        return cls(t0=t0, h=(t_max - t0) / steps, n_steps=steps)

    @property
    def t_max(self) -> float:
        return self.t0 + self.n_steps * self.h

    def points(self) -> np.ndarray:
        return self.t0 + self.h * np.arange(self.n_steps + 1, dtype=float)


class GridFunction(BaseModel):
    model_config = ConfigDict(frozen=True)

    grid: UniformGrid
    values: List[float]

    @field_validator('values')
    @classmethod
    def check_finite(cls, values: List[float]) -> List[float]:
        if not np.all(np.isfinite(values)):
            raise ValueError("grid function values must be finite")
        return values

    @model_validator(mode='after')
    def check_length(self):
        if len(self.values) != self.grid.n_steps + 1:
            raise ValueError(
                f"expected {self.grid.n_steps + 1} values for the grid, got {len(self.values)}"
            )
        return self

    @classmethod
    def sample(cls, grid: UniformGrid, fn) -> 'GridFunction':
        return cls(grid=grid, values=[float(fn(t)) for t in grid.points()])

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)


class CoeffSeq(BaseModel):
    model_config = ConfigDict(frozen=True)

    alpha: float = Field(gt=0)
    values: List[float]

    @field_validator('values')
    @classmethod
    def check_finite(cls, values: List[float]) -> List[float]:
        if not np.all(np.isfinite(values)):
            raise ValueError("coefficients must be finite")
        return values

    @property
    def length(self) -> int:
        return len(self.values)


class Identity(str, Enum):
    EQ6 = 'eq6'
    REMARK = 'remark'
    SEMIGROUP = 'semigroup'


class GapSample(BaseModel):
    t: float
    lhs: float
    rhs: float
    gap: float


class GapReport(BaseModel):
    identity: str
    alpha: float
    k: float
    u0: Optional[float] = None
    samples: List[GapSample]
    sup_gap: float
    argmax_t: float

    @classmethod
    def from_samples(cls, identity: str, alpha: float, k: float, samples: List[GapSample],
                     u0: Optional[float] = None) -> 'GapReport':
        if not samples:
            raise ValueError("a gap report needs at least one sample")
        samples = sorted(samples, key=lambda s: s.t)
        worst = max(samples, key=lambda s: abs(s.gap))
        return cls(identity=identity, alpha=alpha, k=k, u0=u0, samples=samples,
                   sup_gap=abs(worst.gap), argmax_t=worst.t)

    def columns(self) -> np.ndarray:
        return np.array([[s.t, s.lhs, s.rhs, s.gap] for s in self.samples], dtype=float)


class ResidualSample(BaseModel):
    t: float
    u: float
    lhs: float
    rhs: float
    residual: float


class ResidualReport(BaseModel):
    problem: LogisticProblem
    samples: List[ResidualSample]
    sup_residual: float
    argmax_t: float

    @classmethod
    def from_samples(cls, problem: LogisticProblem, samples: List[ResidualSample]) -> 'ResidualReport':
        if not samples:
            raise ValueError("a residual report needs at least one sample")
        samples = sorted(samples, key=lambda s: s.t)
        worst = max(samples, key=lambda s: abs(s.residual))
        return cls(problem=problem, samples=samples,
                   sup_residual=abs(worst.residual), argmax_t=worst.t)

    def columns(self) -> np.ndarray:
        return np.array([[s.t, s.u, s.lhs, s.rhs, s.residual] for s in self.samples], dtype=float)


class Command(str, Enum):
    ML_EVAL = 'ml-eval'
    COEFF_CHECK = 'coeff-check'
    IDENTITY_CHECK = 'identity-check'
    LEMMA_CHECK = 'lemma-check'
    SEMIGROUP_CHECK = 'semigroup-check'
    SOLVE_LOGISTIC = 'solve-logistic'
    WEST_RESIDUAL = 'west-residual'
    FIGURE1 = 'figure1'


class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    command: Command
    alphas: List[float] = Field(min_length=1)
    k: float = Field(default=1.0, gt=0)
    u0: float = Field(default=0.8, ge=0, le=1)
    t_max: float = Field(default=5.0, gt=0)
    steps: int = Field(default=500, ge=1)
    output_path: str
    emit_svg: bool = False
    beta: float = Field(default=1.0, gt=0)
    identity: Identity = Identity.REMARK
    n_max: int = Field(default=4, ge=0)

    @field_validator('alphas')
    @classmethod
    def check_alphas(cls, alphas: List[float]) -> List[float]:
        for alpha in alphas:
            if not alpha > 0:
                raise ValueError(f"alpha must be positive, got {alpha}")
        return alphas

    def grid(self) -> UniformGrid:
        return UniformGrid.from_span(self.t_max, self.steps)

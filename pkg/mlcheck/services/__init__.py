from .mittag_leffler import ml_eval, mittag_leffler
from .logistic_solver import fabm_solve, west_residual, west_series
from .run_logger import RunLogger

__all__ = [
    'ml_eval',
    'mittag_leffler',
    'fabm_solve',
    'west_residual',
    'west_series',
    'RunLogger',
]

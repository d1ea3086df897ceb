"""
Exception hierarchy shared by the numerical services and the CLI.

The CLI maps UsageError to exit code 1, OSError to 2 and every other
MLCheckError (or pydantic ValidationError) to 3.
"""

from typing import Optional


class MLCheckError(Exception):
    """Base class for every error raised by mlcheck"""


class DomainError(MLCheckError, ValueError):
    """Argument outside the domain of an operation (poles, bad parameters)"""


class GammaOverflowError(MLCheckError, OverflowError):
    """Gamma value not representable as a double"""


class MLOverflowError(MLCheckError, OverflowError):
    """Mittag-Leffler value beyond double range"""


class AccuracyError(MLCheckError, ArithmeticError):
    """Truncation budget exhausted before the requested accuracy was met"""

    def __init__(self, message: str, achieved_bound: Optional[float] = None):
        super().__init__(message)
        self.achieved_bound = achieved_bound


class DivergenceError(MLCheckError, ValueError):
    """Series or integral that does not converge for the given parameters"""


class NumericalFailure(MLCheckError, ArithmeticError):
    """Non-finite intermediate value in a time-stepping scheme"""


class UsageError(MLCheckError):
    """Invalid command-line usage"""

"""
Compensated summation built on the error-free two-sum transform.
"""

from typing import Iterable, Tuple


def two_sum(a: float, b: float) -> Tuple[float, float]:
    """Return (s, err) with s + err == a + b exactly."""
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


class CompensatedSum:
    """Running sum carrying its rounding error in a second double (hi, lo)."""

    __slots__ = ('hi', 'lo')

    def __init__(self, value: float = 0.0):
        self.hi = float(value)
        self.lo = 0.0

    def add(self, x: float) -> 'CompensatedSum':
        self.hi, err = two_sum(self.hi, x)
        self.lo += err
        return self

    def extend(self, values: Iterable[float]) -> 'CompensatedSum':
        for x in values:
            self.add(x)
        return self

    @property
    def value(self) -> float:
        return self.hi + self.lo

    def __float__(self) -> float:
        return self.value

import math

from hypothesis import given
from hypothesis.strategies import floats, lists

from mlcheck.services.summation import CompensatedSum, two_sum


@given(floats(min_value=-1e300, max_value=1e300), floats(min_value=-1e300, max_value=1e300))
def test_two_sum_is_error_free(a, b):
    s, err = two_sum(a, b)
    assert s == a + b
    # the pair reproduces the exact sum: fsum of the inputs equals fsum of the outputs
    assert math.fsum([s, err]) == math.fsum([a, b])


def test_compensated_sum_recovers_cancelled_bits():
    acc = CompensatedSum()
    acc.extend([1.0, 1e-16, 1e-16, -1.0])
    assert acc.value == 2e-16
    assert sum([1.0, 1e-16, 1e-16, -1.0]) == 0.0


@given(lists(floats(min_value=-1e6, max_value=1e6), max_size=50))
def test_compensated_sum_matches_fsum(values):
    acc = CompensatedSum().extend(values)
    exact = math.fsum(values)
    assert abs(float(acc) - exact) <= 1e-15 * max(1.0, sum(abs(v) for v in values))


def test_large_terms_do_not_swallow_small_ones():
    acc = CompensatedSum(1e16)
    acc.add(1.0).add(-1e16)
    assert acc.value == 1.0
    assert (1e16 + 1.0) - 1e16 == 0.0

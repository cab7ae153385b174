import io
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eta26 import (
    SeriesBudgetError,
    eta_power_series,
    jacobi_series,
    p26_oracle,
    pentagonal_series,
    write_coefficient_csv,
)

EULER_26 = (1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1,
            0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1)
JACOBI_21 = (1, -3, 0, 5, 0, 0, -7, 0, 0, 0, 9,
             0, 0, 0, 0, -11, 0, 0, 0, 0, 0, 13)


def _convolve(a, b, order):
    out = [0] * (order + 1)
    for i, ai in enumerate(a[: order + 1]):
        if ai:
            for j, bj in enumerate(b[: order + 1 - i]):
                out[i + j] += ai * bj
    return tuple(out)


def test_euler_prefix():
    assert eta_power_series(1, 26).coeffs == EULER_26


def test_jacobi_prefix():
    assert eta_power_series(3, 21).coeffs == JACOBI_21


def test_r26_order1():
    assert eta_power_series(26, 1).coeffs == (1, -26)


def test_pentagonal_examples():
    assert pentagonal_series(7).coeffs == (1, -1, -1, 0, 0, 1, 0, 1)
    assert pentagonal_series(0).coeffs == (1,)
    assert pentagonal_series(15).nonzero_indices() == (0, 1, 2, 5, 7, 12, 15)
    assert pentagonal_series(10).r == 1


def test_jacobi_examples():
    ser = jacobi_series(10)
    assert ser.nonzero_indices() == (0, 1, 3, 6, 10)
    assert [ser[i] for i in (0, 1, 3, 6, 10)] == [1, -3, 5, -7, 9]
    assert jacobi_series(0).coeffs == (1,)
    assert jacobi_series(21)[21] == 13
    assert ser.r == 3


def test_eta1_equals_pentagonal():
    for order in (0, 1, 13, 60):
        assert eta_power_series(1, order).coeffs == pentagonal_series(order).coeffs


def test_eta3_equals_jacobi_and_pentagonal_cubed():
    order = 60
    pent = pentagonal_series(order).coeffs
    cubed = _convolve(_convolve(pent, pent, order), pent, order)
    assert eta_power_series(3, order).coeffs == jacobi_series(order).coeffs == cubed


@given(st.integers(min_value=1, max_value=8), st.integers(min_value=1, max_value=8))
@settings(max_examples=20, deadline=None)
def test_product_property(r, s):
    order = 30
    a = eta_power_series(r, order).coeffs
    b = eta_power_series(s, order).coeffs
    assert eta_power_series(r + s, order).coeffs == _convolve(a, b, order)


@given(st.integers(min_value=1, max_value=40))
@settings(max_examples=20, deadline=None)
def test_low_order_coefficients(r):
    ser = eta_power_series(r, 2)
    assert ser[0] == 1
    assert ser[1] == -r
    # only (1-q)^r and (1-q^2)^r contribute at order 2
    assert ser[2] == math.comb(r, 2) - r


def test_p26_oracle_small_values():
    assert p26_oracle(0) == 1
    assert p26_oracle(1) == -26
    assert p26_oracle(2) == 299 == math.comb(26, 2) - 26


def test_input_validation():
    with pytest.raises(ValueError):
        eta_power_series(0, 5)
    with pytest.raises(ValueError):
        eta_power_series(1, -1)
    with pytest.raises(ValueError):
        p26_oracle(-3)


def test_budget_error():
    with pytest.raises(SeriesBudgetError):
        eta_power_series(26, 2_000_000, budget_mb=1)


def test_csv_export():
    buf = io.StringIO()
    write_coefficient_csv(eta_power_series(26, 3), buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "index,coefficient"
    assert lines[1] == "0,1"
    assert lines[2] == "1,-26"
    assert len(lines) == 5


def test_power_series_shape_validation():
    from eta26 import PowerSeries

    with pytest.raises(ValueError):
        PowerSeries(1, 2, (1, -1))
    ser = PowerSeries(1, 1, (1, -1))
    assert len(ser) == 2

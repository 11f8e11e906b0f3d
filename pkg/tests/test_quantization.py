import math

import pytest

from mmwrx.quantization import ETA_TABLE, QuantizerModel, eta_for_bits


def test_tabulated_values_exact():
    assert eta_for_bits(1) == 0.3634
    assert eta_for_bits(2) == 0.1175
    assert eta_for_bits(3) == 0.03454
    assert eta_for_bits(4) == 0.009497
    assert eta_for_bits(5) == 0.002499


def test_closed_form_beyond_table():
    assert eta_for_bits(6) == pytest.approx(6.642331656e-4, rel=1e-9)
    for b in range(6, 13):
        assert eta_for_bits(b) == pytest.approx(
            (math.pi * math.sqrt(3) / 2) * 2.0 ** (-2 * b), rel=1e-15)


def test_ideal_is_zero():
    assert eta_for_bits("ideal") == 0.0


def test_strictly_decreasing():
    values = [eta_for_bits(b) for b in range(1, 17)]
    assert all(b_next < b_prev for b_prev, b_next in zip(values, values[1:]))


def test_table_to_formula_handover_is_close():
    # the closed form overshoots the tabulated value at b=5 by ~6.3%;
    # the table value wins there and the formula only starts at b=6
    formula_at_5 = (math.pi * math.sqrt(3) / 2) * 2.0 ** (-10)
    assert abs(formula_at_5 - ETA_TABLE[5]) / ETA_TABLE[5] < 0.07
    assert eta_for_bits(5) == ETA_TABLE[5]


def test_rejects_nonpositive_and_noninteger_bits():
    for bad in (0, -1, -7):
        with pytest.raises(ValueError):
            eta_for_bits(bad)
    for bad in (2.5, "8", None, True):
        with pytest.raises(ValueError):
            eta_for_bits(bad)


def test_quantizer_model_carries_eta():
    q = QuantizerModel(bits=3)
    assert q.eta == 0.03454
    assert QuantizerModel(bits="ideal").eta == 0.0
    assert 0.0 <= QuantizerModel(bits=8).eta < 1.0

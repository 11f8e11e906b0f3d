import pytest

from mmwrx.power import ComponentPowerSet, p_adc, p_total_ac, p_total_dc, p_total_hc
from mmwrx.presets import get_component_preset

HPADC = get_component_preset("HPADC")
LPADC = get_component_preset("LPADC")
GHZ = 1e9


def zero_comps(fom=1.0):
    return ComponentPowerSet(p_lna=0, p_sp=0, p_c=0, p_ps=0, p_m=0, p_lo=0,
                             p_lpf=0, p_bb_amp=0, adc_fom=fom)


class TestAdcPower:
    def test_hpadc_one_bit(self):
        assert p_adc(494e-15, GHZ, 1) == pytest.approx(0.988e-3, rel=1e-12)

    def test_hpadc_eight_bits(self):
        assert p_adc(494e-15, GHZ, 8) == pytest.approx(126.464e-3, rel=1e-12)

    def test_lpadc_eight_bits(self):
        assert p_adc(5e-15, GHZ, 8) == pytest.approx(1.28e-3, rel=1e-12)

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            p_adc(0.0, GHZ, 4)
        with pytest.raises(ValueError):
            p_adc(1e-15, 0.0, 4)
        with pytest.raises(ValueError):
            p_adc(1e-15, GHZ, 0)


class TestRfChain:
    def test_chain_power_is_component_sum(self):
        assert HPADC.p_rf_chain == pytest.approx(40.8e-3, rel=1e-12)


class TestTotals:
    def test_dc_reference_value(self):
        total = p_total_dc(16, HPADC, bits=5, bandwidth=GHZ).total
        assert total == pytest.approx(1.782656, rel=1e-12)

    def test_ac_reference_value(self):
        total = p_total_ac(64, HPADC, bits=4, bandwidth=GHZ).total
        assert total == pytest.approx(2.700108, rel=1e-12)

    def test_hc_reference_value(self):
        total = p_total_hc(64, 8, HPADC, bits=6, bandwidth=GHZ).total
        assert total == pytest.approx(5.756256, rel=1e-12)

    def test_dc_only_adc_survives_zero_components(self):
        comps = zero_comps(fom=1.0)
        assert p_total_dc(1, comps, bits=1, bandwidth=1.0).total == pytest.approx(4.0)

    def test_ac_only_adc_survives_zero_components(self):
        comps = zero_comps(fom=1.0)
        assert p_total_ac(1, comps, bits=1, bandwidth=1.0).total == pytest.approx(4.0)

    def test_ac_zero_phase_shifter_pairing(self):
        total = p_total_ac(64, LPADC, bits=4, bandwidth=GHZ).total
        expected = 64 * 39e-3 + 40.8e-3 + 19.5e-3 + 2 * p_adc(5e-15, GHZ, 4)
        assert total == pytest.approx(expected, rel=1e-12)
        assert p_total_ac(64, LPADC, bits=4, bandwidth=GHZ).per_component["phase_shifters"] == 0.0

    def test_hc_chain_increment_is_linear(self):
        for n_rf in (1, 3, 7):
            lo = p_total_hc(64, n_rf, HPADC, bits=6, bandwidth=GHZ).total
            hi = p_total_hc(64, n_rf + 1, HPADC, bits=6, bandwidth=GHZ).total
            increment = (64 * HPADC.p_ps + HPADC.p_rf_chain + HPADC.p_c
                         + 2 * p_adc(HPADC.adc_fom, GHZ, 6))
            assert hi - lo == pytest.approx(increment, rel=1e-12)

    def test_monotone_in_everything(self):
        base = p_total_hc(32, 4, HPADC, bits=4, bandwidth=GHZ).total
        assert p_total_hc(32, 4, HPADC, bits=5, bandwidth=GHZ).total > base
        assert p_total_hc(32, 4, HPADC, bits=4, bandwidth=2 * GHZ).total > base
        assert p_total_hc(33, 4, HPADC, bits=4, bandwidth=GHZ).total > base
        assert p_total_hc(32, 5, HPADC, bits=4, bandwidth=GHZ).total > base

    def test_breakdown_sums_to_total(self):
        for breakdown in (
            p_total_dc(16, HPADC, 5, GHZ),
            p_total_ac(64, HPADC, 4, GHZ),
            p_total_hc(64, 8, LPADC, 6, GHZ),
        ):
            assert breakdown.total == pytest.approx(
                sum(breakdown.per_component.values()), rel=1e-12)

    def test_argument_validation(self):
        with pytest.raises(ValueError):
            p_total_dc(0, HPADC, 4, GHZ)
        with pytest.raises(ValueError):
            p_total_ac(4, HPADC, 0, GHZ)
        with pytest.raises(ValueError):
            p_total_hc(4, 5, HPADC, 4, GHZ)
        with pytest.raises(ValueError):
            p_total_hc(4, 0, HPADC, 4, GHZ)


class TestComponentSet:
    def test_rejects_negative_power(self):
        with pytest.raises(ValueError):
            ComponentPowerSet(p_lna=-1e-3, p_sp=0, p_c=0, p_ps=0, p_m=0, p_lo=0,
                              p_lpf=0, p_bb_amp=0, adc_fom=1e-15)

    def test_rejects_nonpositive_fom(self):
        with pytest.raises(ValueError):
            ComponentPowerSet(p_lna=0, p_sp=0, p_c=0, p_ps=0, p_m=0, p_lo=0,
                              p_lpf=0, p_bb_amp=0, adc_fom=0.0)

    def test_preset_catalog_values(self):
        assert HPADC.adc_fom == pytest.approx(494e-15)
        assert HPADC.p_ps == pytest.approx(2e-3)
        assert LPADC.adc_fom == pytest.approx(5e-15)
        assert LPADC.p_ps == 0.0
        assert get_component_preset("IPADC").adc_fom == pytest.approx(65e-15)

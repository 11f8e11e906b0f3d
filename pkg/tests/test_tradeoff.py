import math
from dataclasses import replace

import numpy as np
import pytest

import mmwrx.tradeoff as tradeoff_mod
from mmwrx.channel import ChannelParams, ChannelRealization
from mmwrx.presets import get_component_preset, get_scenario_preset
from mmwrx.tradeoff import (
    DesignPoint,
    Scenario,
    candidate_grid,
    evaluate_design,
    optimal_set,
    sweep,
    utility_select,
    with_overrides,
)

from oracles import alpha_grid_selected, alpha_grid_winner

HPADC = get_component_preset("HPADC")


def small_scenario(**kwargs):
    defaults = dict(
        name="unit",
        channel=ChannelParams(n_tx=8, n_rx=8),
        bandwidth=1.0,
        snr_db=0.0,
        n_trials=6,
        base_seed=7,
        bit_range=(1, 4, 8),
        nrf_set=(2, 4),
    )
    defaults.update(kwargs)
    return Scenario(**defaults)


def fake_point(arch, bits, n_rf, ee, se):
    return DesignPoint(arch=arch, bits=bits, n_rf=n_rf, mean_rate=se, se=se,
                       total_power=1.0, ee=ee, trial_count=1, rate_std_err=0.0)


def cloud_from_pairs(pairs):
    return [fake_point("DC", i + 1, None, ee, se) for i, (ee, se) in enumerate(pairs)]


class TestScenarioValidation:
    def test_rejects_oversized_nrf(self):
        with pytest.raises(ValueError):
            small_scenario(nrf_set=(2, 99))

    def test_rejects_empty_architectures(self):
        with pytest.raises(ValueError):
            small_scenario(architectures=())

    def test_rejects_unknown_architecture(self):
        with pytest.raises(ValueError):
            small_scenario(architectures=("AC", "XY"))

    def test_rejects_zero_trials(self):
        with pytest.raises(ValueError):
            small_scenario(n_trials=0)

    def test_nrf_ignored_without_hc(self):
        s = small_scenario(architectures=("AC", "DC"), nrf_set=())
        assert "HC" not in s.architectures


class TestGrid:
    def test_ac_only_has_one_point_per_bit(self):
        s = small_scenario(architectures=("AC",), bit_range=tuple(range(1, 9)))
        assert len(candidate_grid(s)) == 8

    def test_default_ul_grid_size(self):
        assert len(candidate_grid(get_scenario_preset("UL-high"))) == 56

    def test_downlink_preset_grid_size(self):
        assert len(candidate_grid(get_scenario_preset("DL-high"))) == 48


class TestEvaluateDesign:
    def test_degenerate_unit_channel(self, monkeypatch):
        def fake_sample(params, seed):
            return ChannelRealization(h=np.array([[1.0 + 0j]]), clusters=[])

        monkeypatch.setattr(tradeoff_mod, "sample_channel", fake_sample)
        s = small_scenario(channel=ChannelParams(n_tx=1, n_rx=1), n_trials=1,
                           bit_range=(1,), architectures=("DC",), nrf_set=())
        pt = evaluate_design("DC", 8, None, s, HPADC)
        # eta(8) is ~4e-5; use the exact formula for the expectation
        eta = 2.0 ** (-16) * math.pi * math.sqrt(3) / 2
        expected = math.log2(1 + (1 - eta) / (1 + eta))
        assert pt.mean_rate == pytest.approx(expected, rel=1e-12)
        assert pt.se == pt.mean_rate
        assert pt.rate_std_err == 0.0

    def test_repeat_evaluation_identical(self):
        s = small_scenario(n_trials=3)
        a = evaluate_design("HC", 4, 2, s, HPADC)
        b = evaluate_design("HC", 4, 2, s, HPADC)
        assert a == b

    def test_matches_sweep_point(self):
        s = small_scenario(n_trials=4)
        result = sweep(s, HPADC)
        grid = candidate_grid(s)
        idx = grid.index(("HC", 4, 2))
        assert evaluate_design("HC", 4, 2, s, HPADC) == result.points[idx]

    def test_mean_rate_nondecreasing_in_bits(self):
        s = small_scenario(n_trials=5, bit_range=(1, 2, 3, 4, 5, 6, 7, 8))
        result = sweep(s, HPADC)
        series = {}
        for pt in result.points:
            series.setdefault((pt.arch, pt.n_rf), []).append((pt.bits, pt.mean_rate))
        for pts in series.values():
            pts.sort()
            rates = [r for _, r in pts]
            assert all(r2 >= r1 - 1e-12 for r1, r2 in zip(rates, rates[1:]))

    def test_derived_fields_consistent(self):
        s = small_scenario(n_trials=3)
        for pt in sweep(s, HPADC).points:
            assert pt.ee == pytest.approx(pt.mean_rate / pt.total_power, rel=1e-12)
            assert pt.se == pytest.approx(pt.mean_rate / s.bandwidth, rel=1e-12)
            assert pt.trial_count == 3

    def test_rank_zero_counts_zero_rate_with_warning(self, monkeypatch):
        def zero_sample(params, seed):
            return ChannelRealization(h=np.zeros((4, 4), dtype=complex), clusters=[])

        monkeypatch.setattr(tradeoff_mod, "sample_channel", zero_sample)
        s = small_scenario(channel=ChannelParams(n_tx=4, n_rx=4), n_trials=2)
        with pytest.warns(UserWarning, match="rank-zero"):
            pt = evaluate_design("DC", 4, None, s, HPADC)
        assert pt.mean_rate == 0.0

    def test_rejects_bad_candidates(self):
        s = small_scenario()
        with pytest.raises(ValueError):
            evaluate_design("ZZ", 4, None, s, HPADC)
        with pytest.raises(ValueError):
            evaluate_design("HC", 4, 99, s, HPADC)


class TestCommonRandomNumbers:
    def test_architecture_ordering_survives_averaging(self):
        s = small_scenario(channel=ChannelParams(n_tx=8, n_rx=16), n_trials=8)
        result = sweep(s, HPADC)
        by_key = {(pt.arch, pt.bits, pt.n_rf): pt.mean_rate for pt in result.points}
        for b in s.bit_range:
            for n_rf in s.nrf_set:
                assert by_key[("AC", b, None)] <= by_key[("HC", b, n_rf)] * (1 + 1e-9)
                assert by_key[("HC", b, n_rf)] <= by_key[("DC", b, None)] * (1 + 1e-9)


class TestEstimator:
    def test_std_err_scales_with_trials(self):
        ratios = []
        stats = {}
        for n in (25, 100, 400):
            s = Scenario(name="est", channel=ChannelParams(n_tx=8, n_rx=4),
                         bandwidth=1.0, snr_db=0.0, n_trials=n, base_seed=11,
                         bit_range=(3,), nrf_set=(), architectures=("DC",))
            pt = sweep(s, HPADC).points[0]
            stats[n] = pt.rate_std_err
        for lo, hi in ((25, 100), (100, 400)):
            ratio = stats[lo] / stats[hi]
            assert abs(ratio - 2.0) < 0.5, f"std_err ratio {ratio} for {lo}->{hi}"


class TestUtilitySelect:
    def test_alpha_zero_maximizes_se(self):
        pts = cloud_from_pairs([(1.0, 1.0), (2.0, 3.0), (3.0, 2.0)])
        assert utility_select(pts, 0.0)[0] == 1

    def test_alpha_one_maximizes_ee(self):
        pts = cloud_from_pairs([(1.0, 1.0), (2.0, 3.0), (3.0, 2.0)])
        assert utility_select(pts, 1.0)[0] == 2

    def test_dominated_point_never_selected(self):
        pts = cloud_from_pairs([(1.0, 1.0), (2.0, 3.0), (3.0, 2.0)])
        for alpha in np.linspace(0, 1, 1001):
            winner = utility_select(pts, float(alpha))[0]
            assert winner != 0
            assert winner == alpha_grid_winner([1, 2, 3], [1, 3, 2], float(alpha))

    def test_tie_reporting(self):
        pts = cloud_from_pairs([(2.0, 2.0), (2.0, 2.0)])
        assert set(utility_select(pts, 0.5)) == {0, 1}

    def test_bounds_checked(self):
        pts = cloud_from_pairs([(1.0, 1.0)])
        with pytest.raises(ValueError):
            utility_select(pts, -0.1)
        with pytest.raises(ValueError):
            utility_select(pts, 1.1)
        with pytest.raises(ValueError):
            utility_select([], 0.5)


class TestOptimalSet:
    def test_two_point_frontier_breakpoint(self):
        pts = cloud_from_pairs([(1.0, 3.0), (3.0, 1.0)])
        intervals = optimal_set(pts)
        assert [iv.point_index for iv in intervals] == [0, 1]
        assert intervals[0].alpha_min == 0.0
        assert intervals[-1].alpha_max == 1.0
        assert intervals[0].alpha_max == pytest.approx(0.5)

    def test_dominant_point_takes_everything(self):
        pts = cloud_from_pairs([(1.0, 1.0), (2.0, 2.0)])
        intervals = optimal_set(pts)
        assert len(intervals) == 1
        assert intervals[0] .point_index == 1
        assert (intervals[0].alpha_min, intervals[0].alpha_max) == (0.0, 1.0)

    def test_matches_alpha_grid_on_random_clouds(self):
        rng = np.random.default_rng(20)
        for _ in range(10):
            ee = rng.uniform(0.5, 5.0, 50)
            se = rng.uniform(0.5, 5.0, 50)
            pts = cloud_from_pairs(list(zip(ee, se)))
            hull = {iv.point_index for iv in optimal_set(pts)}
            assert hull == alpha_grid_selected(ee, se)

    def test_intervals_tile_unit_range(self):
        rng = np.random.default_rng(21)
        ee = rng.uniform(0.5, 5.0, 30)
        se = rng.uniform(0.5, 5.0, 30)
        intervals = optimal_set(cloud_from_pairs(list(zip(ee, se))))
        assert intervals[0].alpha_min == 0.0
        assert intervals[-1].alpha_max == 1.0
        for a, b in zip(intervals, intervals[1:]):
            assert a.alpha_max == pytest.approx(b.alpha_min, abs=1e-15)
            assert a.alpha_max > a.alpha_min

    def test_no_selected_point_is_dominated(self):
        rng = np.random.default_rng(22)
        ee = rng.uniform(0.5, 5.0, 40)
        se = rng.uniform(0.5, 5.0, 40)
        selected = {iv.point_index for iv in optimal_set(cloud_from_pairs(list(zip(ee, se))))}
        for i in selected:
            dominated = np.any((ee >= ee[i]) & (se >= se[i]) & ((ee > ee[i]) | (se > se[i])))
            assert not dominated

    def test_selection_invariant_to_axis_scaling(self):
        rng = np.random.default_rng(23)
        ee = rng.uniform(0.5, 5.0, 40)
        se = rng.uniform(0.5, 5.0, 40)
        base = {iv.point_index for iv in optimal_set(cloud_from_pairs(list(zip(ee, se))))}
        for k_ee, k_se in ((3.7, 1.0), (1.0, 0.02), (250.0, 8.0)):
            scaled = {iv.point_index for iv in
                      optimal_set(cloud_from_pairs(list(zip(k_ee * ee, k_se * se))))}
            assert scaled == base


class TestOverrides:
    def test_scenario_override_reaches_channel(self):
        base = get_scenario_preset("UL-high")
        scen = with_overrides(base, n_trials=5, n_tx=4, snr_db=-3.0)
        assert scen.n_trials == 5
        assert scen.channel.n_tx == 4
        assert scen.snr_db == -3.0
        assert scen.channel.snr_db == -3.0
        assert scen.channel.n_rx == base.channel.n_rx

    def test_unknown_field_rejected(self):
        with pytest.raises(ValueError):
            with_overrides(get_scenario_preset("UL-high"), bogus=1)

import math

import numpy as np
import pytest

from mmwrx.channel import (
    ChannelParams,
    ClusterDraw,
    array_response,
    assemble_channel,
    pathloss_db,
    sample_channel,
)

from oracles import naive_assemble


class TestArrayResponse:
    def test_single_element_is_unity(self):
        for angle in (0.0, 0.7, -2.3, math.pi / 2):
            resp = array_response(angle, 1)
            assert resp.vector.shape == (1,)
            assert resp.vector[0] == 1.0

    def test_broadside_is_all_ones(self):
        assert np.array_equal(array_response(0.0, 4).vector, np.ones(4))

    def test_phase_progression(self):
        resp = array_response(math.pi / 2, 2)
        assert resp.vector[0] == 1.0
        assert resp.vector[1] == pytest.approx(np.exp(1j * math.pi), abs=1e-15)
        resp = array_response(0.3, 5)
        expected = np.exp(1j * math.pi * math.sin(0.3) * np.arange(5))
        np.testing.assert_allclose(resp.vector, expected, atol=1e-15)

    def test_unit_modulus_everywhere(self):
        rng = np.random.default_rng(0)
        for _ in range(200):
            angle = rng.uniform(-math.pi, math.pi)
            n = int(rng.integers(1, 129))
            vec = array_response(angle, n).vector
            assert np.max(np.abs(np.abs(vec) - 1.0)) < 1e-12
            assert vec[0] == 1.0

    def test_rejects_empty_array(self):
        with pytest.raises(ValueError):
            array_response(0.1, 0)


class TestPathloss:
    def test_los_at_100m(self):
        assert pathloss_db(100.0, los=True, shadowing_draw=0.0) == pytest.approx(101.5, rel=1e-12)

    def test_nlos_at_1m(self):
        assert pathloss_db(1.0, los=False, shadowing_draw=0.0) == pytest.approx(72.0, rel=1e-12)

    def test_nlos_at_100m(self):
        assert pathloss_db(100.0, los=False, shadowing_draw=0.0) == pytest.approx(130.4, rel=1e-12)

    def test_shadowing_offset_passthrough(self):
        base = pathloss_db(50.0, los=True, shadowing_draw=0.0)
        assert pathloss_db(50.0, los=True, shadowing_draw=3.25) == pytest.approx(base + 3.25)

    def test_random_shadowing_reproducible(self):
        a = pathloss_db(50.0, los=False, rng=np.random.default_rng(7))
        b = pathloss_db(50.0, los=False, rng=np.random.default_rng(7))
        assert a == b

    def test_rejects_nonpositive_distance(self):
        with pytest.raises(ValueError):
            pathloss_db(0.0, los=True, shadowing_draw=0.0)
        with pytest.raises(ValueError):
            pathloss_db(-5.0, los=False, shadowing_draw=0.0)


class TestSampleChannel:
    def test_deterministic_bit_for_bit(self):
        params = ChannelParams(n_tx=8, n_rx=16)
        a = sample_channel(params, seed=123)
        b = sample_channel(params, seed=123)
        assert np.array_equal(a.h, b.h)
        assert len(a.clusters) == len(b.clusters)

    def test_different_seeds_differ(self):
        params = ChannelParams(n_tx=8, n_rx=16)
        a = sample_channel(params, seed=1)
        b = sample_channel(params, seed=2)
        assert not np.array_equal(a.h, b.h)

    def test_degenerate_single_path_collapses_to_gain(self):
        cluster = ClusterDraw(
            aoa_central=1.234,
            aod_central=-0.5,
            path_gains=np.array([1.0 + 0.0j]),
            aoa_offsets=np.array([0.0]),
            aod_offsets=np.array([0.0]),
        )
        h = assemble_channel([cluster], n_tx=1, n_rx=1, rho_lin=1.0)
        assert h.shape == (1, 1)
        assert h[0, 0] == pytest.approx(1.0, abs=1e-15)

    def test_reconstruction_from_stored_clusters(self):
        params = ChannelParams(n_tx=16, n_rx=64)
        for seed in range(20):
            real = sample_channel(params, seed=seed)
            rebuilt = naive_assemble(real.clusters, params.n_tx, params.n_rx)
            err = np.linalg.norm(rebuilt - real.h) / np.linalg.norm(real.h)
            assert err < 1e-9

    def test_normalized_mode_average_gain(self):
        params = ChannelParams(n_tx=16, n_rx=64)
        n_draws = 10_000
        acc = 0.0
        for seed in range(n_draws):
            h = sample_channel(params, seed=seed).h
            acc += np.linalg.norm(h) ** 2
        mean_gain = acc / n_draws / (params.n_tx * params.n_rx)
        assert 0.9 < mean_gain < 1.1

    def test_all_entries_finite(self):
        params = ChannelParams(n_tx=4, n_rx=6)
        for seed in range(50):
            h = sample_channel(params, seed=seed).h
            assert h.shape == (6, 4)
            assert np.all(np.isfinite(h.real)) and np.all(np.isfinite(h.imag))

    def test_physical_mode_applies_pathloss(self):
        params = ChannelParams(n_tx=4, n_rx=8, mode="physical", distance_m=100.0, los=True)
        real = sample_channel(params, seed=3)
        assert real.pathloss_db is not None
        rho = 10.0 ** (real.pathloss_db / 10.0)
        rebuilt = naive_assemble(real.clusters, 4, 8, rho_lin=rho)
        err = np.linalg.norm(rebuilt - real.h) / np.linalg.norm(real.h)
        assert err < 1e-9
        unattenuated = naive_assemble(real.clusters, 4, 8, rho_lin=1.0)
        np.testing.assert_allclose(real.h, unattenuated / math.sqrt(rho), rtol=1e-12)

    def test_cluster_count_floor(self):
        # cluster_rate near zero would draw 0 clusters almost surely
        params = ChannelParams(n_tx=2, n_rx=2, cluster_rate=1e-9)
        for seed in range(10):
            real = sample_channel(params, seed=seed)
            assert len(real.clusters) >= 1
            assert np.linalg.norm(real.h) > 0


class TestParamValidation:
    def test_rejects_empty_arrays(self):
        with pytest.raises(ValueError):
            ChannelParams(n_tx=0, n_rx=4)
        with pytest.raises(ValueError):
            ChannelParams(n_tx=4, n_rx=0)

    def test_rejects_bad_cluster_config(self):
        with pytest.raises(ValueError):
            ChannelParams(n_tx=4, n_rx=4, cluster_rate=0.0)
        with pytest.raises(ValueError):
            ChannelParams(n_tx=4, n_rx=4, paths_per_cluster=0)

    def test_physical_mode_needs_distance(self):
        with pytest.raises(ValueError):
            ChannelParams(n_tx=4, n_rx=4, mode="physical")

    def test_rejects_unknown_mode(self):
        with pytest.raises(ValueError):
            ChannelParams(n_tx=4, n_rx=4, mode="frequency-selective")

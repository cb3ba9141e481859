"""Smoke tests for the python bindings: a thin pass over each layer."""

import math

import pytest

import tsu11


def test_gaussian_layer():
    state = tsu11.vacuum(2)
    assert state.n_modes == 2
    assert tsu11.mean_photons(state, 0) == 0.0

    state = tsu11.displace(state, 0, 3.0 + 0.0j)
    state = tsu11.two_mode_squeeze(state, 0, 1, 5.0)
    assert tsu11.mean_photons(state, 0) == pytest.approx(5.0 * 9.0 + 4.0, rel=1e-12)
    assert tsu11.hermiticity_defect(state) < 1e-12
    assert tsu11.conjugate_symmetry_defect(state) < 1e-12

    lossy = tsu11.loss(state, 0, 0.5)
    assert tsu11.mean_photons(lossy, 0) == pytest.approx(
        0.5 * tsu11.mean_photons(state, 0), rel=1e-12
    )


def test_quadrature_stats_and_lod():
    p = tsu11.InterferometerParams()
    state = tsu11.build_tsu_distributed(p)
    channels = tsu11.two_phase_channels(tsu11.Scheme.tsu_distributed, p.g)
    stats = tsu11.joint_quadrature_stats(state, channels)
    assert stats.variance == pytest.approx(tsu11.two_phase_variance(p), rel=1e-11)

    lod = tsu11.lod(tsu11.two_phase_slope(p), stats.variance)
    assert lod == pytest.approx(1.55281000757092927e-5, rel=1e-10)
    assert tsu11.lod_tsu_distributed(p).delta_phi_sq == pytest.approx(lod, rel=1e-11)
    assert tsu11.lod_tsu_separable(p).delta_phi_sq == pytest.approx(2 * lod, rel=1e-11)


def test_window_and_weights():
    window = tsu11.advantage_g_window(5.0, 1.0)
    assert window is not None
    lo, hi = window
    assert lo == pytest.approx((math.sqrt(5) - 1) / 2, rel=1e-14)
    assert hi == pytest.approx((math.sqrt(5) + 1) / 2, rel=1e-14)
    assert tsu11.advantage_g_window(1.0, 1.0) is None

    w = tsu11.beta_weights(5.0, lo)
    assert w.beta1 + w.beta2 == pytest.approx(1.0, abs=1e-14)
    assert w.beta1 == pytest.approx(0.644, abs=1e-3)


def test_multi_phase_and_optimizer():
    assert tsu11.lod_multi_separable(2, 100).delta_phi_sq == 1 / 80800
    assert tsu11.lod_multi_entangled_optimal(2, 100).delta_phi_sq == 1 / 80800

    best = tsu11.optimize_entangled(2, 100)
    assert best.delta_phi_sq == pytest.approx(1 / 80800, rel=1e-6)
    assert tsu11.n_total(best.gain, best.alpha_sq) == pytest.approx(200.0, rel=1e-10)


def test_monte_carlo_and_snr():
    config = tsu11.McConfig()
    config.samples = 5000
    config.seed = 11
    result = tsu11.mc_lod(tsu11.Scheme.tsu_distributed, tsu11.InterferometerParams(), config)
    assert abs(result.z_score) < 5.0
    assert result.rng == "splitmix64-counter/box-muller"

    again = tsu11.mc_lod(tsu11.Scheme.tsu_distributed, tsu11.InterferometerParams(), config)
    assert again.empirical_lod == result.empirical_lod

    assert tsu11.snr_correct_db(-60.0, -63.0) == pytest.approx(
        -0.0206243992830040839, rel=1e-10
    )
    with pytest.raises(ValueError):
        tsu11.snr_correct_db(-63.0, -63.0)


def test_figures_text():
    csv = tsu11.fig5d_csv()
    lines = csv.strip().split("\n")
    assert lines[0] == "M,lod_classical,lod_separable,lod_entangled"
    assert len(lines) == 51
    assert tsu11.format_sci(1 / 80800) in lines[1]

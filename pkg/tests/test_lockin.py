import numpy as np
import pytest

from hybrid_switch.definition import NoiseConfig, SweepProtocol
from hybrid_switch.errors import LockinError
from hybrid_switch.simulator import conductance_noise_sd, lockin_measure, lockin_sweep
from hybrid_switch.simulator.lockin import flicker_noise, integration_cycles


def _make_protocol(cycles: float = 10, **kwargs) -> SweepProtocol:
    return SweepProtocol(integration_time=cycles / 70.0, **kwargs)


def test_noise_free_estimate_recovers_conductance(quiet):
    assert lockin_measure(1e-4, _make_protocol(), quiet) == pytest.approx(1e-4, rel=1e-4)


def test_zero_conductance_reads_zero(quiet):
    assert lockin_measure(0.0, _make_protocol(), quiet) == 0.0


def test_dc_bias_does_not_leak_into_estimate(quiet):
    protocol = _make_protocol(v_dc_bias=1e-3)
    assert lockin_measure(2e-4, protocol, quiet) == pytest.approx(2e-4, rel=1e-4)


def test_short_window_is_rejected(quiet):
    with pytest.raises(LockinError, match="at least 5"):
        lockin_measure(1e-4, _make_protocol(cycles=4), quiet)


def test_integration_cycles_counts_whole_cycles():
    assert integration_cycles(_make_protocol(cycles=10)) == 10
    assert integration_cycles(_make_protocol(cycles=7.6)) == 7


def test_estimate_is_unbiased():
    noise = NoiseConfig(sigma_current=1e-11)
    estimates = lockin_sweep(np.full(2000, 5e-5), _make_protocol(), noise, seed=3)
    standard_error = estimates.std(ddof=1) / np.sqrt(estimates.size)
    assert abs(estimates.mean() - 5e-5) < 4 * standard_error


def test_noise_averages_down_with_integration_length():
    noise = NoiseConfig(sigma_current=1e-11)
    short = lockin_sweep(np.zeros(2000), _make_protocol(cycles=10), noise, seed=1)
    long = lockin_sweep(np.zeros(2000), _make_protocol(cycles=40), noise, seed=2)
    ratio = short.std(ddof=1) / long.std(ddof=1)
    assert ratio == pytest.approx(2.0, rel=0.1)


def test_white_noise_level():
    noise = NoiseConfig(sigma_current=1e-11)
    estimates = lockin_sweep(np.zeros(4000), _make_protocol(), noise, seed=5)
    # sigma * sqrt(2 / N) / v_ac with N = 640 samples
    expected = 1e-11 * np.sqrt(2 / 640) / 5e-6
    assert estimates.std(ddof=1) == pytest.approx(expected, rel=0.05)
    assert conductance_noise_sd(_make_protocol(), noise) == pytest.approx(expected)
    assert conductance_noise_sd(_make_protocol(), NoiseConfig.off()) == 0.0


def test_same_seed_same_noise():
    noise = NoiseConfig(sigma_current=1e-11, flicker_current=5e-12)
    g = np.linspace(0, 1e-4, 11)
    first = lockin_sweep(g, _make_protocol(), noise, seed=9)
    assert np.array_equal(first, lockin_sweep(g, _make_protocol(), noise, seed=9))
    assert not np.array_equal(first, lockin_sweep(g, _make_protocol(), noise, seed=10))


def test_flicker_noise_scaled_to_rms():
    series = flicker_noise(np.random.default_rng(0), (3, 1024), rms=2e-12)
    assert np.allclose(series.std(axis=-1), 2e-12)
    assert np.allclose(series.mean(axis=-1), 0.0, atol=1e-20)


def test_disabled_noise_ignores_sigma():
    noise = NoiseConfig(enabled=False, sigma_current=1e-9)
    assert lockin_measure(3e-5, _make_protocol(), noise, seed=1) == pytest.approx(3e-5, rel=1e-4)

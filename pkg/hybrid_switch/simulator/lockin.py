"""Software lock-in emulation of the ac conductance measurement."""

import math

import numpy as np

from hybrid_switch.config import MIN_LOCKIN_CYCLES, SAMPLES_PER_CYCLE
from hybrid_switch.definition.trace import NoiseConfig, SweepProtocol
from hybrid_switch.errors import LockinError

RngLike = int | np.random.Generator | None


def _as_rng(seed: RngLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def integration_cycles(protocol: SweepProtocol) -> int:
    """Whole reference cycles inside the integration window."""
    n_cycles = math.floor(protocol.integration_time * protocol.f_ac + 1e-9)
    if n_cycles < MIN_LOCKIN_CYCLES:
        raise LockinError(
            f"integration window of {protocol.integration_time:g} s holds {n_cycles} cycles at "
            f"{protocol.f_ac:g} Hz; at least {MIN_LOCKIN_CYCLES} are required"
        )
    return n_cycles


def conductance_noise_sd(protocol: SweepProtocol, noise_config: NoiseConfig) -> float:
    """Standard deviation of one demodulated conductance point due to white current noise."""
    if not noise_config.enabled:
        return 0.0
    n_samples = integration_cycles(protocol) * SAMPLES_PER_CYCLE
    return noise_config.sigma_current * math.sqrt(2.0 / n_samples) / protocol.v_ac


def reference_signal(protocol: SweepProtocol) -> np.ndarray:
    n_samples = integration_cycles(protocol) * SAMPLES_PER_CYCLE
    phase = 2.0 * np.pi * np.arange(n_samples) / SAMPLES_PER_CYCLE
    return np.sin(phase)


def flicker_noise(
    rng: np.random.Generator, shape: tuple[int, int], rms: float
) -> np.ndarray:
    """Zero-mean noise with a 1/f power spectrum along the last axis, scaled to ``rms``."""
    n = shape[-1]
    spectrum = np.fft.rfft(rng.standard_normal(shape), axis=-1)
    freqs = np.fft.rfftfreq(n)
    scale = np.zeros_like(freqs)
    scale[1:] = 1.0 / np.sqrt(freqs[1:])
    series = np.fft.irfft(spectrum * scale, n=n, axis=-1)
    std = series.std(axis=-1, keepdims=True)
    std[std == 0] = 1.0
    return rms * series / std


def lockin_sweep(
    g_true,
    protocol: SweepProtocol,
    noise_config: NoiseConfig,
    seed: RngLike = None,
) -> np.ndarray:
    """Demodulated conductance for every entry of ``g_true``.

    The current ``I(t) = G (v_dc + v_ac sin wt) + noise`` is multiplied with the reference and
    averaged over a whole number of cycles; the estimate is ``2 <I sin> / v_ac``. It is not
    clamped and may be slightly negative under noise.
    """
    g_true = np.atleast_1d(np.asarray(g_true, dtype=float))
    ref = reference_signal(protocol)
    current = g_true[:, None] * (protocol.v_dc_bias + protocol.v_ac * ref[None, :])
    if noise_config.enabled:
        rng = _as_rng(seed)
        shape = current.shape
        if noise_config.sigma_current > 0:
            current = current + rng.normal(0.0, noise_config.sigma_current, size=shape)
        if noise_config.flicker_current > 0:
            current = current + flicker_noise(rng, shape, noise_config.flicker_current)
    return 2.0 * np.mean(current * ref[None, :], axis=1) / protocol.v_ac


def lockin_measure(
    g_true: float,
    protocol: SweepProtocol,
    noise_config: NoiseConfig,
    seed: RngLike = None,
) -> float:
    return float(lockin_sweep(np.array([g_true]), protocol, noise_config, seed)[0])

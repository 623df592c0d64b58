"""Gate-controlled conductance of one split-gate constriction.

Model: the split gate depletes the constriction width linearly with gate voltage; the
constriction carries hard-wall subbands ``E_n = (n pi hbar)^2 / (2 m* w^2)``, each transmitted
with a logistic (thermally smeared) probability; the channel is in series with the
contact/interface conductance ``g_series``.

``v_pinch_star`` is where the lowest subband edge crosses the Fermi energy. The width reaches
zero at the depletion voltage ``v_pinch_star / (1 - pi / (k_F W_c))``, slightly beyond it.
"""

import math

import numpy as np
from scipy.special import expit

from hybrid_switch.config import FailureConfig
from hybrid_switch.definition.chip import FailureMode, JunctionDevice
from hybrid_switch.definition.material import CODATA_2018, Material2DEG, PhysicalConstants
from hybrid_switch.physics.transport import fermi_energy, fermi_wavevector

# transmissions below this are dropped from the mode sum
TRANSMISSION_CUTOFF = 1e-9
_CUTOFF_EXPONENT = -math.log(TRANSMISSION_CUTOFF)

_default_failure_config = FailureConfig()


def depletion_voltage(device: JunctionDevice, material: Material2DEG) -> float:
    """Gate voltage at which the constriction width reaches zero."""
    W_c = device.effective_geometry.W_c
    closing_fraction = math.pi / (fermi_wavevector(material.n_s) * W_c)
    v_pinch = device.calibration.v_pinch_star
    if closing_fraction >= 1.0:
        # no subband fits even at full width
        return v_pinch
    return v_pinch / (1.0 - closing_fraction)


def effective_width(device: JunctionDevice, material: Material2DEG, v_g) -> np.ndarray:
    v_dep = depletion_voltage(device, material)
    fraction = np.clip((np.asarray(v_g, dtype=float) - v_dep) / (0.0 - v_dep), 0.0, 1.0)
    return device.effective_geometry.W_c * fraction


def smearing_energy(
    device: JunctionDevice,
    material: Material2DEG,
    T: float,
    constants: PhysicalConstants = CODATA_2018,
) -> float:
    """Logistic broadening: the larger of k_B T and the gate smearing through the lever arm."""
    E_F = fermi_energy(fermi_wavevector(material.n_s), material.m_star_ratio, constants)
    lever_arm = E_F / abs(device.calibration.v_pinch_star)
    return max(constants.k_B * T, lever_arm * device.calibration.smear_width)


def channel_conductance(
    widths: np.ndarray,
    material: Material2DEG,
    gamma: float,
    constants: PhysicalConstants = CODATA_2018,
) -> np.ndarray:
    """Landauer sum ``G_q * sum_n T_n`` for each width in ``widths``."""
    widths = np.asarray(widths, dtype=float)
    result = np.zeros_like(widths)
    open_mask = widths > 0
    if not np.any(open_mask):
        return result

    m_star = material.m_star_ratio * constants.m_e
    E_F = fermi_energy(fermi_wavevector(material.n_s), material.m_star_ratio, constants)
    # highest subband that can still exceed the cutoff at the widest point
    w_max = float(widths[open_mask].max())
    k_cut = math.sqrt(2 * m_star * (E_F + _CUTOFF_EXPONENT * gamma)) / constants.hbar
    n_cut = int(math.ceil(k_cut * w_max / math.pi)) + 1

    n = np.arange(1, n_cut + 1, dtype=float)
    w = widths[open_mask][:, None]
    E_n = (n[None, :] * math.pi * constants.hbar) ** 2 / (2 * m_star * w**2)
    transmission = expit((E_F - E_n) / gamma)
    transmission[transmission < TRANSMISSION_CUTOFF] = 0.0
    # fixed summation order along the mode axis
    result[open_mask] = constants.G_q * transmission.sum(axis=1)
    return result


def ideal_conductance_curve(
    device: JunctionDevice,
    material: Material2DEG,
    v_g,
    T: float,
    constants: PhysicalConstants = CODATA_2018,
) -> np.ndarray:
    """Noise-free conductance of a healthy junction over an array of gate voltages."""
    widths = effective_width(device, material, v_g)
    gamma = smearing_energy(device, material, T, constants)
    g_channel = channel_conductance(widths, material, gamma, constants)
    # series resistances add; a closed channel gives 1/inf = 0
    with np.errstate(divide="ignore"):
        return 1.0 / (1.0 / g_channel + 1.0 / device.calibration.g_series)


def ideal_conductance(
    device: JunctionDevice,
    material: Material2DEG,
    v_g: float,
    T: float,
    constants: PhysicalConstants = CODATA_2018,
) -> float:
    """Noise-free conductance of a healthy junction at one gate voltage.

    ``v_pinch_star`` marks the closing of the last subband, not the zero of G: at ``v_pinch_star``
    that subband is half transmitted, and G decays over a few smearing widths below it. It is
    exactly 0 from the depletion voltage ``v_pinch_star / (1 - pi / (k_F W_c))`` down.
    """
    return float(ideal_conductance_curve(device, material, np.array([v_g]), T, constants)[0])


def conductance_curve(
    device: JunctionDevice,
    material: Material2DEG,
    v_g,
    T: float,
    failure_config: FailureConfig = _default_failure_config,
    constants: PhysicalConstants = CODATA_2018,
) -> np.ndarray:
    """Noise-free conductance including the signature of the device's failure mode."""
    v_g = np.asarray(v_g, dtype=float)
    kind = device.failure
    if kind in (FailureMode.OPEN_CONTACT, FailureMode.PRE_PINCHED):
        return np.zeros_like(v_g)

    g = ideal_conductance_curve(device, material, v_g, T, constants)
    if kind is FailureMode.THICK_OXIDE_NO_PINCHOFF:
        g_zero = float(ideal_conductance_curve(device, material, np.array([0.0]), T, constants)[0])
        return np.maximum(g, failure_config.floor_frac * g_zero)
    if kind is FailureMode.GATE_LEAK:
        return g + failure_config.leak_slope * np.abs(v_g)
    return g


def conductance_with_failure(
    device: JunctionDevice,
    material: Material2DEG,
    v_g: float,
    T: float,
    failure_config: FailureConfig = _default_failure_config,
    constants: PhysicalConstants = CODATA_2018,
) -> float:
    return float(
        conductance_curve(device, material, np.array([v_g]), T, failure_config, constants)[0]
    )

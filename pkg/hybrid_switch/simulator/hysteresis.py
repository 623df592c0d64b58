"""Sweep-direction dependence from Joule heating of long junctions.

Heat accumulates while sweeping down and suppresses the conductance of the return sweep
multiplicatively, so a closed channel stays closed and the pinch-off point does not move.
"""

import math

import numpy as np

from hybrid_switch.config import HEAT_RATE, HEAT_REFERENCE_DRIVE_V, HEAT_REFERENCE_LENGTH
from hybrid_switch.definition.chip import JunctionDevice
from hybrid_switch.definition.material import CODATA_2018, Material2DEG
from hybrid_switch.definition.trace import HysteresisState, SweepDirection
from hybrid_switch.simulator.conductance import conductance_with_failure


def heat_increments(
    g: np.ndarray, device: JunctionDevice, v_drive: float, heat_rate: float = HEAT_RATE
) -> np.ndarray:
    """Dissipation proxy per gate step: ``G v_drive^2`` in reference units, scaled by L_J."""
    length_scale = device.effective_geometry.L_J / HEAT_REFERENCE_LENGTH
    drive = (v_drive / HEAT_REFERENCE_DRIVE_V) ** 2
    return heat_rate * (np.asarray(g, dtype=float) / CODATA_2018.G_q) * drive * length_scale


def suppression(device: JunctionDevice, state: HysteresisState) -> float:
    """Multiplicative factor applied to the return sweep."""
    saturation = 1.0 - math.exp(-state.heat_level)
    return 1.0 - device.calibration.hysteresis_amp * saturation


def apply_hysteresis(
    g: np.ndarray,
    device: JunctionDevice,
    direction: SweepDirection,
    state: HysteresisState,
    v_drive: float,
) -> tuple[np.ndarray, HysteresisState]:
    """Direction-dependent conductance for a whole sweep and the state after it."""
    g = np.asarray(g, dtype=float)
    if direction is SweepDirection.DOWN:
        heat = state.heat_level + float(np.sum(heat_increments(g, device, v_drive)))
        return g.copy(), HysteresisState(heat_level=heat)
    return g * suppression(device, state), state.model_copy()


def hysteretic_conductance(
    device: JunctionDevice,
    material: Material2DEG,
    v_g: float,
    direction: SweepDirection,
    state: HysteresisState,
    T: float,
    v_drive: float = HEAT_REFERENCE_DRIVE_V,
) -> tuple[float, HysteresisState]:
    """Conductance at one gate point and the updated heating state."""
    g = conductance_with_failure(device, material, v_g, T)
    g_out, new_state = apply_hysteresis(np.array([g]), device, direction, state, v_drive)
    return float(g_out[0]), new_state

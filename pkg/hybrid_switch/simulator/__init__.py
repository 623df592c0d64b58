"""Synthetic sweep traces: conductance model, heating, lock-in emulation and sweep engine."""

from hybrid_switch.simulator.conductance import (
    conductance_curve,
    conductance_with_failure,
    depletion_voltage,
    ideal_conductance,
    ideal_conductance_curve,
)
from hybrid_switch.simulator.hysteresis import apply_hysteresis, hysteretic_conductance
from hybrid_switch.simulator.io import (
    read_device_geometries,
    read_trace,
    read_trace_dir,
    write_index,
    write_trace,
)
from hybrid_switch.simulator.lockin import conductance_noise_sd, lockin_measure, lockin_sweep
from hybrid_switch.simulator.session import SweepSession
from hybrid_switch.simulator.sweep import (
    EnsembleResult,
    run_ensemble,
    run_repeated_sweeps,
    run_sweep,
)

__all__ = [
    "conductance_curve",
    "conductance_with_failure",
    "depletion_voltage",
    "ideal_conductance",
    "ideal_conductance_curve",
    "apply_hysteresis",
    "hysteretic_conductance",
    "read_device_geometries",
    "read_trace",
    "read_trace_dir",
    "write_index",
    "write_trace",
    "conductance_noise_sd",
    "lockin_measure",
    "lockin_sweep",
    "SweepSession",
    "EnsembleResult",
    "run_ensemble",
    "run_repeated_sweeps",
    "run_sweep",
]

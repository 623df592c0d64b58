"""Derived transport quantities and regime classification of the 2DEG."""

from hybrid_switch.definition.material import CODATA_2018
from hybrid_switch.physics.transport import (
    DARK,
    ILLUMINATED,
    classify_regime,
    coherence_length,
    fermi_energy,
    fermi_velocity,
    fermi_wavevector,
    max_modes,
    mean_free_path,
    transport_quantities,
)

__all__ = [
    "CODATA_2018",
    "DARK",
    "ILLUMINATED",
    "fermi_wavevector",
    "fermi_velocity",
    "fermi_energy",
    "mean_free_path",
    "coherence_length",
    "classify_regime",
    "max_modes",
    "transport_quantities",
]

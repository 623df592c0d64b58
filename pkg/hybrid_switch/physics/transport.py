"""Closed-form transport quantities of a spin-degenerate 2DEG.

All functions are pure and take SI inputs. The Fermi wavevector uses spin degeneracy 2,
``k_F = sqrt(2 pi n_s)``.
"""

import math

from hybrid_switch.config import DEFAULT_BALLISTIC_FACTOR, DEFAULT_TEMPERATURE_K
from hybrid_switch.definition.material import (
    CODATA_2018,
    Material2DEG,
    PhysicalConstants,
    RegimeClassification,
    TransportQuantities,
)
from hybrid_switch.errors import PhysicsDomainError

DARK = Material2DEG(n_s=2.24e15, mu_e=25.0, m_star_ratio=0.039)
ILLUMINATED = Material2DEG(n_s=2.28e15, mu_e=25.8, m_star_ratio=0.039)


def fermi_wavevector(n_s: float) -> float:
    if n_s <= 0:
        raise PhysicsDomainError(f"carrier density must be positive, got {n_s}")
    return math.sqrt(2 * math.pi * n_s)


def fermi_velocity(
    k_F: float, m_star_ratio: float, constants: PhysicalConstants = CODATA_2018
) -> float:
    if m_star_ratio <= 0:
        raise PhysicsDomainError(f"effective mass ratio must be positive, got {m_star_ratio}")
    if k_F < 0:
        raise PhysicsDomainError(f"Fermi wavevector must be non-negative, got {k_F}")
    return constants.hbar * k_F / (m_star_ratio * constants.m_e)


def fermi_energy(k_F: float, m_star_ratio: float, constants: PhysicalConstants = CODATA_2018) -> float:
    if m_star_ratio <= 0:
        raise PhysicsDomainError(f"effective mass ratio must be positive, got {m_star_ratio}")
    return (constants.hbar * k_F) ** 2 / (2 * m_star_ratio * constants.m_e)


def mean_free_path(mu_e: float, n_s: float, constants: PhysicalConstants = CODATA_2018) -> float:
    if mu_e <= 0:
        raise PhysicsDomainError(f"mobility must be positive, got {mu_e}")
    if n_s <= 0:
        raise PhysicsDomainError(f"carrier density must be positive, got {n_s}")
    return constants.hbar * mu_e * math.sqrt(2 * math.pi * n_s) / constants.e_charge


def coherence_length(v_F: float, T: float, constants: PhysicalConstants = CODATA_2018) -> float:
    """Thermal coherence length of the normal region."""
    if T <= 0:
        raise PhysicsDomainError(f"temperature must be positive, got {T}")
    return constants.hbar * v_F / (2 * math.pi * constants.k_B * T)


def classify_regime(
    l_e: float,
    zeta_N: float,
    reference_length: float,
    ballistic_factor: float = DEFAULT_BALLISTIC_FACTOR,
) -> RegimeClassification:
    """Clean means ``l_e > zeta_N``; ballistic means ``l_e >= ballistic_factor * reference_length``."""
    for name, value in (("l_e", l_e), ("zeta_N", zeta_N), ("reference_length", reference_length)):
        if value <= 0:
            raise PhysicsDomainError(f"{name} must be positive, got {value}")
    if ballistic_factor <= 0:
        raise PhysicsDomainError(f"ballistic_factor must be positive, got {ballistic_factor}")
    return RegimeClassification(
        is_clean=l_e > zeta_N,
        is_ballistic=l_e >= ballistic_factor * reference_length,
        reference_length=reference_length,
    )


def max_modes(k_F: float, W_c: float) -> int:
    """Number of hard-wall subbands below E_F in a channel of width ``W_c``."""
    if W_c <= 0:
        raise PhysicsDomainError(f"channel width must be positive, got {W_c}")
    return int(math.floor(k_F * W_c / math.pi))


def transport_quantities(
    material: Material2DEG,
    temperature: float = DEFAULT_TEMPERATURE_K,
    constants: PhysicalConstants = CODATA_2018,
) -> TransportQuantities:
    """Every derived quantity of ``material`` at ``temperature``."""
    k_F = fermi_wavevector(material.n_s)
    v_F = fermi_velocity(k_F, material.m_star_ratio, constants)
    return TransportQuantities(
        k_F=k_F,
        v_F=v_F,
        E_F=fermi_energy(k_F, material.m_star_ratio, constants),
        l_e=mean_free_path(material.mu_e, material.n_s, constants),
        zeta_N=coherence_length(v_F, temperature, constants),
        temperature=temperature,
    )

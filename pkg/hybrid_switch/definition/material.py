import math

from pydantic import BaseModel, ConfigDict, Field, computed_field


class PhysicalConstants(BaseModel):
    """Physical constants in SI units (CODATA 2018)."""

    model_config = ConfigDict(frozen=True)

    hbar: float = Field(1.054571817e-34, gt=0)  # J s
    e_charge: float = Field(1.602176634e-19, gt=0)  # C
    k_B: float = Field(1.380649e-23, gt=0)  # J/K
    m_e: float = Field(9.1093837015e-31, gt=0)  # kg

    @computed_field
    @property
    def planck(self) -> float:
        return 2 * math.pi * self.hbar

    @computed_field
    @property
    def G_q(self) -> float:
        """Conductance quantum 2e^2/h (S)."""
        return 2 * self.e_charge**2 / self.planck


CODATA_2018 = PhysicalConstants()


class Material2DEG(BaseModel):
    """Heterostructure quantum well parameters (taken from magnetotransport, not fitted here)."""

    model_config = ConfigDict(frozen=True)

    n_s: float = Field(gt=0)  # carriers per m^2
    mu_e: float = Field(gt=0)  # m^2 / (V s)
    m_star_ratio: float = Field(gt=0, lt=1)  # m* / m_e
    well_thickness: float = Field(30e-9, gt=0)
    well_depth: float = Field(120e-9, gt=0)


class TransportQuantities(BaseModel):
    """Derived quantities of a 2DEG at a given temperature."""

    model_config = ConfigDict(frozen=True)

    k_F: float = Field(gt=0)  # 1/m
    v_F: float = Field(gt=0)  # m/s
    E_F: float = Field(gt=0)  # J
    l_e: float = Field(gt=0)  # m
    zeta_N: float = Field(gt=0)  # m
    temperature: float = Field(gt=0)  # K


class RegimeClassification(BaseModel):
    """Clean/ballistic verdict relative to one reference length."""

    model_config = ConfigDict(frozen=True)

    is_clean: bool
    is_ballistic: bool
    reference_length: float = Field(gt=0)

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from hybrid_switch.definition.material import Material2DEG

JUNCTIONS_PER_CHIP = 8


class FailureMode(str, Enum):
    """Ways a junction can fail, named after their physical cause."""

    NONE = "none"
    OPEN_CONTACT = "open_contact"  # broken pad or wire bond
    GATE_LEAK = "gate_leak"  # current escapes into the split gate
    THICK_OXIDE_NO_PINCHOFF = "thick_oxide_no_pinchoff"  # gate never fully depletes
    PRE_PINCHED = "pre_pinched"  # surface charge depletes the channel at zero bias


class JunctionGeometry(BaseModel):
    """Designed (or fabricated) dimensions of one split-gate junction, in meters."""

    model_config = ConfigDict(frozen=True)

    L_c: float = Field(gt=0)  # constriction length
    W_c: float = Field(gt=0)  # constriction width
    L_J: float = Field(gt=0)  # junction length, Nb to Nb
    W_J: float = Field(gt=0)  # junction width

    @model_validator(mode="after")
    def _check_nesting(self) -> "JunctionGeometry":
        if self.W_c > self.W_J:
            raise ValueError(f"constriction width W_c={self.W_c} exceeds junction width W_J={self.W_J}")
        if self.L_c > self.L_J:
            raise ValueError(f"constriction length L_c={self.L_c} exceeds junction length L_J={self.L_J}")
        return self


class JunctionCalibration(BaseModel):
    """Per-device parameters that the geometry alone does not fix."""

    model_config = ConfigDict(frozen=True)

    v_pinch_star: float = Field(lt=0)  # V, last subband crosses E_F here
    g_series: float = Field(gt=0)  # S, contact/interface bound on conductance
    hysteresis_amp: float = Field(0.0, ge=0, lt=1)
    smear_width: float = Field(0.02, gt=0)  # V


class JunctionDevice(BaseModel):
    """One addressable junction on a chip."""

    model_config = ConfigDict(frozen=True)

    junction_id: str
    geometry: JunctionGeometry
    calibration: JunctionCalibration
    failure: FailureMode = FailureMode.NONE
    # NOTE: fabricated dimensions are usually shorter than designed; unpopulated unless measured
    fabricated: JunctionGeometry | None = None

    @property
    def effective_geometry(self) -> JunctionGeometry:
        return self.fabricated or self.geometry


class ChipManifest(BaseModel):
    """A chip of eight junctions sharing two global gate pads."""

    model_config = ConfigDict(frozen=True)

    chip_id: str = Field(min_length=1)
    junctions: list[JunctionDevice]
    material: Material2DEG
    temperature: float = Field(4.2, gt=0)
    fabrication_notes: str = ""

    @field_validator("junctions")
    @classmethod
    def _check_junctions(cls, value: list[JunctionDevice]) -> list[JunctionDevice]:
        if len(value) != JUNCTIONS_PER_CHIP:
            raise ValueError(f"a chip carries exactly {JUNCTIONS_PER_CHIP} junctions, got {len(value)}")
        ids = [device.junction_id for device in value]
        duplicates = sorted({jid for jid in ids if ids.count(jid) > 1})
        if duplicates:
            raise ValueError(f"duplicate junction ids: {', '.join(duplicates)}")
        return value

    def junction(self, junction_id: str) -> JunctionDevice:
        for device in self.junctions:
            if device.junction_id == junction_id:
                return device
        raise KeyError(junction_id)

    @property
    def junction_ids(self) -> list[str]:
        return [device.junction_id for device in self.junctions]


class GateAddress(BaseModel):
    """Selected source-drain pair plus the voltages on the two global gate pads."""

    model_config = ConfigDict(frozen=True)

    selected_junction: str
    v_gate_left: float = Field(ge=-10.0, le=10.0)
    v_gate_right: float = Field(ge=-10.0, le=10.0)

    @property
    def v_g(self) -> float:
        """Effective split-gate voltage (the mean of both halves)."""
        return 0.5 * (self.v_gate_left + self.v_gate_right)

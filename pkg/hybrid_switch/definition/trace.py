from enum import Enum
from functools import cached_property
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

DEFAULT_V_STEP = 0.005
DEFAULT_V_AC = 5e-6  # V
DEFAULT_F_AC = 70.0  # Hz
DEFAULT_LOCKIN_CYCLES = 10


class SweepDirection(str, Enum):
    DOWN = "down"  # 0 -> -1 V
    UP = "up"  # -1 V -> 0


class SweepProtocol(BaseModel):
    """Gate sweep and lock-in excitation settings."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    v_start: float = 0.0
    v_end: float = -1.0
    v_step: float = Field(DEFAULT_V_STEP, gt=0)
    directions: Literal["down_then_up", "down_only"] = "down_then_up"
    v_ac: float = Field(DEFAULT_V_AC, gt=0)  # V amplitude
    f_ac: float = Field(DEFAULT_F_AC, gt=0)
    integration_time: float = Field(DEFAULT_LOCKIN_CYCLES / DEFAULT_F_AC, gt=0)  # s
    v_dc_bias: float = 0.0

    @model_validator(mode="after")
    def _check_range(self) -> "SweepProtocol":
        if self.v_start < self.v_end:
            raise ValueError(f"downward sweep needs v_start >= v_end, got {self.v_start} < {self.v_end}")
        steps = (self.v_start - self.v_end) / self.v_step
        if abs(steps - round(steps)) > 1e-6:
            raise ValueError(
                f"sweep range {self.v_start}..{self.v_end} is not a whole number of {self.v_step} V steps"
            )
        if round(steps) < 1:
            raise ValueError("a sweep needs at least two gate points")
        return self

    @property
    def n_points(self) -> int:
        return int(round((self.v_start - self.v_end) / self.v_step)) + 1

    def grid(self, direction: SweepDirection = SweepDirection.DOWN) -> np.ndarray:
        """Gate voltages in acquisition order for ``direction``."""
        down = np.linspace(self.v_start, self.v_end, self.n_points)
        return down if direction is SweepDirection.DOWN else down[::-1].copy()

    @property
    def sweep_directions(self) -> tuple[SweepDirection, ...]:
        if self.directions == "down_only":
            return (SweepDirection.DOWN,)
        return (SweepDirection.DOWN, SweepDirection.UP)


class NoiseConfig(BaseModel):
    """Current noise added to the synthesized lock-in input."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    enabled: bool = True
    sigma_current: float = Field(1e-11, ge=0)  # A, white noise per time sample
    flicker_current: float = Field(0.0, ge=0)  # A, rms of the 1/f component

    @classmethod
    def off(cls) -> "NoiseConfig":
        return cls(enabled=False)


class SweepSample(BaseModel):
    """One gate point of a sweep. ``g_meas`` is the clamped estimate, ``g_raw`` the raw one."""

    model_config = ConfigDict(frozen=True)

    v_g: float
    g_meas: float = Field(ge=0)
    g_raw: float


class SweepTrace(BaseModel):
    """Ordered samples of one sweep direction of one junction."""

    model_config = ConfigDict(frozen=True)

    chip_id: str
    junction_id: str
    direction: SweepDirection
    samples: list[SweepSample]
    seed: int | None = None
    protocol: SweepProtocol | None = None
    repeat: int = Field(0, ge=0)

    @field_validator("samples")
    @classmethod
    def _check_samples(cls, value: list[SweepSample]) -> list[SweepSample]:
        if len(value) < 2:
            raise ValueError(f"a sweep trace needs at least 2 samples, got {len(value)}")
        return value

    @model_validator(mode="after")
    def _check_monotone(self) -> "SweepTrace":
        steps = np.diff([s.v_g for s in self.samples])
        if self.direction is SweepDirection.DOWN and not np.all(steps < 0):
            raise ValueError("v_g must decrease strictly along a downward sweep")
        if self.direction is SweepDirection.UP and not np.all(steps > 0):
            raise ValueError("v_g must increase strictly along an upward sweep")
        return self

    @cached_property
    def v_g(self) -> np.ndarray:
        return np.array([s.v_g for s in self.samples])

    @cached_property
    def g(self) -> np.ndarray:
        return np.array([s.g_meas for s in self.samples])

    @cached_property
    def g_raw(self) -> np.ndarray:
        return np.array([s.g_raw for s in self.samples])

    @classmethod
    def from_arrays(
        cls,
        chip_id: str,
        junction_id: str,
        direction: SweepDirection,
        v_g,
        g_meas,
        g_raw=None,
        **kwargs,
    ) -> "SweepTrace":
        if g_raw is None:
            g_raw = g_meas
        samples = [
            SweepSample(v_g=float(v), g_meas=float(g), g_raw=float(r))
            for v, g, r in zip(v_g, g_meas, g_raw)
        ]
        return cls(
            chip_id=chip_id, junction_id=junction_id, direction=direction, samples=samples, **kwargs
        )


class HysteresisState(BaseModel):
    """Accumulated Joule-heating proxy of one junction across a sweep session."""

    heat_level: float = Field(0.0, ge=0)

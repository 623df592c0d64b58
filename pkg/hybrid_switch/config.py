"""Configuration settings for hybrid_switch."""

import os
from pathlib import Path
from typing import Literal

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from hybrid_switch.definition.chip import FailureMode
from hybrid_switch.definition.trace import NoiseConfig, SweepProtocol

# Load environment variables from .env file
load_dotenv()

# General
PACKAGE_DIR = Path(__file__).parent
DATA_DIR = PACKAGE_DIR / "data"
PUBLISHED_TABLES_PATH = DATA_DIR / "published_tables.yaml"

# Output
OUTPUT_DIR = Path(os.getenv("HYBRID_SWITCH_OUTPUT_DIR", "output"))

# Logging
LOG_LEVEL = os.getenv("HYBRID_SWITCH_LOG_LEVEL", "INFO")

# Physics
DEFAULT_TEMPERATURE_K = 4.2  # liquid-helium dip station
DEFAULT_BALLISTIC_FACTOR = 3.0

# Chip architecture
CHIPS_PER_WAFER = 9
GATE_SOURCE_LIMIT_V = 10.0

# Lock-in synthesis
SAMPLES_PER_CYCLE = 64
MIN_LOCKIN_CYCLES = 5

# Seeds
DEFAULT_SEED = 20230607
DEFAULT_WORKERS = int(os.getenv("HYBRID_SWITCH_WORKERS", "1"))


class PhysicsConfig(BaseModel):
    """Knobs for derived-quantity reporting."""

    model_config = ConfigDict(extra="forbid")

    temperature: float = Field(DEFAULT_TEMPERATURE_K, gt=0)
    ballistic_factor: float = Field(DEFAULT_BALLISTIC_FACTOR, gt=0)


class AnalysisConfig(BaseModel):
    """Thresholds used when turning traces into switching metrics."""

    model_config = ConfigDict(extra="forbid")

    off_frac: float = Field(0.01, gt=0, lt=1)
    persistence: int = Field(3, ge=1)
    tail_frac: float = Field(0.05, gt=0, le=1)
    min_g_on: float = Field(1e-5, ge=0)
    v_pinch_source: Literal["mean", "down", "up"] = "mean"
    # diagnosis thresholds
    hysteresis_warn_frac: float = Field(0.05, gt=0)
    leak_slope_warn: float = Field(5e-6, gt=0)


# Junction classes are keyed by (L_J in um, W_c in nm), matching the yield table grouping.
ClassKey = tuple[float, float]

PUBLISHED_CLASS_YIELDS: dict[ClassKey, float] = {
    (1.4, 400.0): 6 / 7,
    (1.4, 300.0): 6 / 7,
    (1.4, 200.0): 6 / 8,
    (1.4, 100.0): 26 / 35,
    (3.2, 100.0): 5 / 9,
}


def class_key(L_J: float, W_c: float) -> ClassKey:
    """Class key from SI lengths."""
    return (round(L_J * 1e6, 3), round(W_c * 1e9, 3))


class FailureConfig(BaseModel):
    """Per-class failure probabilities and the signature parameters of each failure kind."""

    model_config = ConfigDict(extra="forbid")

    class_probabilities: dict[str, float] = Field(
        default_factory=lambda: {
            class_label(key): 1.0 - value for key, value in PUBLISHED_CLASS_YIELDS.items()
        }
    )
    default_probability: float = 0.0
    kind_weights: dict[FailureMode, float] = Field(
        default_factory=lambda: {
            FailureMode.PRE_PINCHED: 0.4,
            FailureMode.OPEN_CONTACT: 0.2,
            FailureMode.THICK_OXIDE_NO_PINCHOFF: 0.2,
            FailureMode.GATE_LEAK: 0.2,
        }
    )
    floor_frac: float = Field(0.3, gt=0, lt=1)
    leak_slope: float = Field(5e-5, gt=0)

    @field_validator("class_probabilities")
    @classmethod
    def _check_probabilities(cls, value: dict[str, float]) -> dict[str, float]:
        for key, probability in value.items():
            parse_class(key)
            if not 0.0 <= probability <= 1.0:
                raise ValueError(f"probability for class {key!r} outside [0, 1]: {probability}")
        return value

    @field_validator("default_probability")
    @classmethod
    def _check_default(cls, value: float) -> float:
        if not 0.0 <= value <= 1.0:
            raise ValueError(f"default_probability outside [0, 1]: {value}")
        return value

    @model_validator(mode="after")
    def _check_weights(self) -> "FailureConfig":
        weights = [w for w in self.kind_weights.values()]
        if FailureMode.NONE in self.kind_weights:
            raise ValueError("kind_weights must not include 'none'")
        if not weights or any(w < 0 for w in weights) or sum(weights) <= 0:
            raise ValueError("kind_weights must be non-negative with a positive sum")
        return self

    def probability_for(self, key: ClassKey) -> float:
        return self.class_probabilities.get(class_label(key), self.default_probability)

    @classmethod
    def disabled(cls) -> "FailureConfig":
        return cls(class_probabilities={}, default_probability=0.0)


def class_label(key: ClassKey) -> str:
    L_J_um, W_c_nm = key
    return f"{L_J_um:g}um/{W_c_nm:g}nm"


def parse_class(text: str) -> ClassKey:
    """Inverse of the ``"1.4um/100nm"`` class label."""
    try:
        left, right = text.split("/")
        return (float(left.removesuffix("um")), float(right.removesuffix("nm")))
    except ValueError as e:
        raise ValueError(f"malformed junction class label {text!r}") from e


class CalibrationPrior(BaseModel):
    """Distribution from which per-junction calibrations are drawn."""

    model_config = ConfigDict(extra="forbid")

    v_pinch_mean: float = -0.56
    v_pinch_sd: float = Field(0.03, ge=0)
    # V per um of junction length beyond the reference length
    v_pinch_length_slope: float = 0.02
    reference_length_um: float = 1.4
    g_series_short: float = Field(2.0e-3, gt=0)
    g_series_long: float = Field(6.0e-4, gt=0)
    g_series_log_sd: float = Field(0.15, ge=0)
    hysteresis_amp_short: float = Field(1e-4, ge=0, lt=1)
    hysteresis_amp_long: float = Field(0.3, ge=0, lt=1)
    long_junction_um: float = 3.0
    smear_width: float = Field(0.02, gt=0)


class RunConfig(BaseModel):
    """Settings of one ``simulate`` run, read from a YAML file and overridden by CLI flags."""

    model_config = ConfigDict(extra="forbid")

    seed: int = DEFAULT_SEED
    material: Path | None = None
    manifests: list[Path] = Field(default_factory=list)
    chips: int = Field(1, ge=1)  # per wafer, when no manifests are given
    wafers: int = Field(1, ge=1)
    protocol: SweepProtocol = Field(default_factory=SweepProtocol)
    noise: NoiseConfig = Field(default_factory=NoiseConfig)
    failure_config: Path | None = None
    repeats: int = Field(1, ge=1)
    workers: int = Field(DEFAULT_WORKERS, ge=1)
    output_dir: Path = OUTPUT_DIR


calibration_prior = CalibrationPrior()
physics_config = PhysicsConfig()


# Joule-heating proxy of the hysteresis model
HEAT_RATE = 0.01
HEAT_REFERENCE_DRIVE_V = 5e-6
HEAT_REFERENCE_LENGTH = 1.4e-6

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator


class SweepMetrics(BaseModel):
    """Metrics of a single sweep direction."""

    model_config = ConfigDict(frozen=True)

    v_pinch: float | None = None
    g_on: float = Field(ge=0)
    g_off: float = Field(ge=0)


class TraceMetrics(BaseModel):
    """Switching metrics of one junction, composed from its down and up sweeps."""

    model_config = ConfigDict(frozen=True)

    chip_id: str
    junction_id: str
    v_pinch: float | None = None
    v_pinch_down: float | None = None
    v_pinch_up: float | None = None
    g_on: float = Field(ge=0)
    g_off: float = Field(ge=0)
    g_on_up: float | None = Field(None, ge=0)
    g_off_up: float | None = Field(None, ge=0)
    hysteresis_max: float = Field(0.0, ge=0)
    is_switching: bool
    off_threshold: float = Field(0.0, ge=0)
    L_J_um: float | None = None
    W_c_nm: float | None = None
    repeat: int = 0

    @model_validator(mode="after")
    def _check_switching(self) -> "TraceMetrics":
        if self.is_switching:
            if self.v_pinch is None:
                raise ValueError("a switching device must have a pinch-off voltage")
            if self.g_off > self.off_threshold:
                raise ValueError("a switching device must have g_off below the off threshold")
        return self


class BoxStats(BaseModel):
    """Box-plot summary with 1.5 IQR whiskers."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    mean: float
    median: float
    q1: float
    q3: float
    iqr: float = Field(ge=0)
    whisker_low: float
    whisker_high: float
    outliers: list[float] = Field(default_factory=list)


class YieldRecord(BaseModel):
    """One device as counted by a yield table."""

    model_config = ConfigDict(frozen=True)

    group_key: str
    is_switching: bool
    was_measured: bool = True


class YieldRow(BaseModel):
    group_key: str
    switching_count: int = Field(ge=0)
    measured_count: int = Field(ge=0)
    # None marks an undefined yield (nothing measured)
    yield_percent: float | None = None

    @model_validator(mode="after")
    def _check_counts(self) -> "YieldRow":
        if self.switching_count > self.measured_count:
            raise ValueError(
                f"group {self.group_key!r}: {self.switching_count} switching > {self.measured_count} measured"
            )
        return self


class YieldTable(BaseModel):
    rows: list[YieldRow] = Field(default_factory=list)
    total: YieldRow

    def row(self, group_key: str) -> YieldRow:
        for row in self.rows:
            if row.group_key == group_key:
                return row
        raise KeyError(group_key)


class CorrelationResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    pearson_r: float = Field(ge=-1.0, le=1.0)
    slope: float
    intercept: float
    n: int = Field(ge=3)


class RepeatabilityStats(BaseModel):
    """Spread of one device's metrics over repeated down/up cycles."""

    model_config = ConfigDict(frozen=True)

    chip_id: str
    junction_id: str
    n: int = Field(ge=1)
    v_pinch_mean: float | None = None
    v_pinch_sd: float | None = None
    v_pinch_spread: float | None = None
    g_on_mean: float
    g_on_sd: float
    g_off_mean: float
    g_off_sd: float
    switching_fraction: float = Field(ge=0, le=1)


class IssueSeverity(str, Enum):
    HINT = "hint"
    WARNING = "warning"
    ERROR = "error"


class DeviceIssue(BaseModel):
    """A single diagnosis finding on one device."""

    code: str
    message: str
    severity: IssueSeverity = IssueSeverity.WARNING
    hint: str | None = None
    data: dict[str, float | str | None] = Field(default_factory=dict)


class DeviceDiagnosis(BaseModel):
    """Diagnosis findings for one device."""

    chip_id: str
    junction_id: str
    issues: list[DeviceIssue] = Field(default_factory=list)

    def add(self, issue: DeviceIssue) -> None:
        self.issues.append(issue)

    @property
    def device_id(self) -> str:
        return f"{self.chip_id}/{self.junction_id}"


class MetricsReport(BaseModel):
    """Everything ``analyze`` produces for a set of traces."""

    devices: list[TraceMetrics] = Field(default_factory=list)
    box_stats: dict[str, dict[str, BoxStats]] = Field(default_factory=dict)
    yields_by_chip: YieldTable | None = None
    yields_by_class: YieldTable | None = None
    correlations: dict[str, CorrelationResult | None] = Field(default_factory=dict)
    repeatability: list[RepeatabilityStats] = Field(default_factory=list)
    diagnoses: list[DeviceDiagnosis] = Field(default_factory=list)
    malformed_files: list[str] = Field(default_factory=list)

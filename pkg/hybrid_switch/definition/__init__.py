"""Pure-data model shared by every stage of the pipeline."""

from hybrid_switch.definition.chip import (
    ChipManifest,
    FailureMode,
    GateAddress,
    JunctionCalibration,
    JunctionDevice,
    JunctionGeometry,
)
from hybrid_switch.definition.material import (
    CODATA_2018,
    Material2DEG,
    PhysicalConstants,
    RegimeClassification,
    TransportQuantities,
)
from hybrid_switch.definition.metrics import (
    BoxStats,
    CorrelationResult,
    DeviceDiagnosis,
    DeviceIssue,
    IssueSeverity,
    MetricsReport,
    RepeatabilityStats,
    SweepMetrics,
    TraceMetrics,
    YieldRecord,
    YieldRow,
    YieldTable,
)
from hybrid_switch.definition.trace import (
    HysteresisState,
    NoiseConfig,
    SweepDirection,
    SweepProtocol,
    SweepSample,
    SweepTrace,
)

__all__ = [
    "CODATA_2018",
    "PhysicalConstants",
    "Material2DEG",
    "TransportQuantities",
    "RegimeClassification",
    "JunctionGeometry",
    "JunctionCalibration",
    "FailureMode",
    "JunctionDevice",
    "ChipManifest",
    "GateAddress",
    "SweepDirection",
    "SweepProtocol",
    "NoiseConfig",
    "SweepSample",
    "SweepTrace",
    "HysteresisState",
    "SweepMetrics",
    "TraceMetrics",
    "YieldRecord",
    "BoxStats",
    "YieldRow",
    "YieldTable",
    "CorrelationResult",
    "RepeatabilityStats",
    "DeviceDiagnosis",
    "DeviceIssue",
    "IssueSeverity",
    "MetricsReport",
]

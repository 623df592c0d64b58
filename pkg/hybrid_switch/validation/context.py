"""Core data structures shared by diagnosis rules."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np
from scipy import stats

from hybrid_switch.definition.metrics import TraceMetrics
from hybrid_switch.definition.trace import SweepTrace

if TYPE_CHECKING:  # pragma: no cover - typing support only
    from hybrid_switch.validation.rules.base import DiagnosisRule

# fraction of the gate range, at its negative end, used to judge the off state
OFF_STATE_FRAC = 0.25


@dataclass(slots=True)
class DiagnosisOptions:
    """Thresholds for diagnosis rules."""

    off_frac: float = 0.01
    min_g_on: float = 1e-5
    hysteresis_warn_frac: float = 0.05
    leak_slope_warn: float = 5e-6
    enabled_rules: set[str] | None = None
    rules: tuple["DiagnosisRule", ...] = field(default_factory=lambda: DEFAULT_RULES)


@dataclass(slots=True)
class DiagnosisContext:
    """One device's metrics and the traces they were extracted from."""

    metrics: TraceMetrics
    down: SweepTrace
    up: SweepTrace | None = None

    @property
    def v_step(self) -> float:
        if self.down.protocol is not None:
            return self.down.protocol.v_step
        return float(np.median(np.abs(np.diff(self.down.v_g))))

    def off_state_slope(self) -> float:
        """dG/d|V_g| over the most negative part of the down sweep."""
        v, g = self.down.v_g, self.down.g
        cutoff = v.min() + OFF_STATE_FRAC * (v.max() - v.min())
        mask = v <= cutoff
        if mask.sum() < 3 or np.ptp(v[mask]) == 0:
            return 0.0
        return float(stats.linregress(np.abs(v[mask]), g[mask]).slope)


from hybrid_switch.validation.rules.dead_channel import DeadChannelRule  # noqa: E402
from hybrid_switch.validation.rules.gate_leak import GateLeakRule  # noqa: E402
from hybrid_switch.validation.rules.hysteresis import HysteresisRule  # noqa: E402
from hybrid_switch.validation.rules.no_pinch_off import NoPinchOffRule  # noqa: E402
from hybrid_switch.validation.rules.pinch_off_shift import PinchOffShiftRule  # noqa: E402

DEFAULT_RULES: tuple["DiagnosisRule", ...] = (
    DeadChannelRule(),
    NoPinchOffRule(),
    GateLeakRule(),
    HysteresisRule(),
    PinchOffShiftRule(),
)

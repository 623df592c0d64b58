"""Rule that detects current leaking into the split gate."""

from __future__ import annotations

from collections.abc import Iterable

from hybrid_switch.definition.metrics import DeviceIssue, IssueSeverity
from hybrid_switch.validation.context import DiagnosisContext, DiagnosisOptions
from hybrid_switch.validation.rules.base import DiagnosisRule


class GateLeakRule(DiagnosisRule):
    """Detect off-state conductance that grows with |V_g|."""

    code = "gate_leak"
    description = "Off-state conductance rises with gate voltage magnitude."

    def apply(self, context: DiagnosisContext, options: DiagnosisOptions) -> Iterable[DeviceIssue]:
        slope = context.off_state_slope()
        if slope < options.leak_slope_warn:
            return
        yield DeviceIssue(
            code=self.code,
            severity=IssueSeverity.ERROR,
            message=f"Off-state conductance grows by {slope:.2e} S per volt of gate bias.",
            hint="Check the gate-to-mesa isolation; measured current partly flows into the gate.",
            data={"leak_slope": slope, "leak_slope_warn": options.leak_slope_warn},
        )

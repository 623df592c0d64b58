from __future__ import annotations

from collections.abc import Iterable

from hybrid_switch.definition.metrics import DeviceIssue, IssueSeverity
from hybrid_switch.validation.context import DiagnosisContext, DiagnosisOptions
from hybrid_switch.validation.rules.base import DiagnosisRule


class PinchOffShiftRule(DiagnosisRule):
    code = "pinch_off_shift"
    description = "Pinch-off voltage moves between the down and up sweep."

    def apply(self, context: DiagnosisContext, options: DiagnosisOptions) -> Iterable[DeviceIssue]:
        v_down, v_up = context.metrics.v_pinch_down, context.metrics.v_pinch_up
        if v_down is None or v_up is None:
            return
        shift = abs(v_down - v_up)
        step = context.v_step
        if shift <= step * (1 + 1e-6):
            return
        yield DeviceIssue(
            code=self.code,
            severity=IssueSeverity.WARNING,
            message=f"Pinch-off moves by {shift * 1e3:.1f} mV between sweeps (step {step * 1e3:.1f} mV).",
            hint="Charge trapping in the gate dielectric; repeat the sweep to check stability.",
            data={"v_pinch_down": v_down, "v_pinch_up": v_up, "shift": shift},
        )

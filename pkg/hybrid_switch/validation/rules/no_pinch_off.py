"""Rule that flags channels the gates cannot close."""

from __future__ import annotations

from collections.abc import Iterable

from hybrid_switch.definition.metrics import DeviceIssue, IssueSeverity
from hybrid_switch.validation.context import DiagnosisContext, DiagnosisOptions
from hybrid_switch.validation.rules.base import DiagnosisRule


class NoPinchOffRule(DiagnosisRule):
    """Detect a flat conductance floor above the off threshold."""

    code = "no_pinch_off"
    description = "Conductance never drops below the off threshold within the sweep."

    def apply(self, context: DiagnosisContext, options: DiagnosisOptions) -> Iterable[DeviceIssue]:
        metrics = context.metrics
        if metrics.g_on < options.min_g_on or metrics.v_pinch_down is not None:
            return
        # a rising floor is a gate leak, reported by its own rule
        if context.off_state_slope() >= options.leak_slope_warn:
            return
        floor_frac = metrics.g_off / metrics.g_on
        yield DeviceIssue(
            code=self.code,
            severity=IssueSeverity.ERROR,
            message=(
                f"Conductance levels off at {floor_frac:.1%} of G_ON "
                f"(off threshold {options.off_frac:.1%})."
            ),
            hint="The gate dielectric is likely too thick to deplete the constriction.",
            data={"g_off": metrics.g_off, "g_on": metrics.g_on, "floor_frac": floor_frac},
        )

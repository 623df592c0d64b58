"""Rule that reports large down/up sweep mismatch."""

from __future__ import annotations

from collections.abc import Iterable

from hybrid_switch.definition.metrics import DeviceIssue, IssueSeverity
from hybrid_switch.validation.context import DiagnosisContext, DiagnosisOptions
from hybrid_switch.validation.rules.base import DiagnosisRule


class HysteresisRule(DiagnosisRule):
    code = "hysteresis"
    description = "Down and up sweeps differ by more than a fraction of G_ON."

    def apply(self, context: DiagnosisContext, options: DiagnosisOptions) -> Iterable[DeviceIssue]:
        metrics = context.metrics
        if context.up is None or metrics.g_on <= 0:
            return
        ratio = metrics.hysteresis_max / metrics.g_on
        if ratio <= options.hysteresis_warn_frac:
            return
        yield DeviceIssue(
            code=self.code,
            severity=IssueSeverity.WARNING,
            message=f"Sweeps differ by up to {ratio:.1%} of G_ON.",
            hint="Typical of Joule heating in long junctions; lower the ac excitation.",
            data={"hysteresis_max": metrics.hysteresis_max, "ratio": ratio},
        )

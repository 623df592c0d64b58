"""Rule that flags devices without ON-state conductance."""

from __future__ import annotations

from collections.abc import Iterable

from hybrid_switch.definition.metrics import DeviceIssue, IssueSeverity
from hybrid_switch.validation.context import DiagnosisContext, DiagnosisOptions
from hybrid_switch.validation.rules.base import DiagnosisRule


class DeadChannelRule(DiagnosisRule):
    """Detect junctions that do not conduct at zero gate voltage."""

    code = "dead_channel"
    description = "ON-state conductance is below the minimum for a working channel."

    def apply(self, context: DiagnosisContext, options: DiagnosisOptions) -> Iterable[DeviceIssue]:
        g_on = context.metrics.g_on
        if g_on >= options.min_g_on:
            return
        yield DeviceIssue(
            code=self.code,
            severity=IssueSeverity.ERROR,
            message=f"G_ON = {g_on:.3e} S is below {options.min_g_on:.1e} S.",
            hint=(
                "Channel is pinched at zero bias (surface charge under the gates) or a contact "
                "is open; check the bond wires before re-measuring."
            ),
            data={"g_on": g_on, "min_g_on": options.min_g_on},
        )

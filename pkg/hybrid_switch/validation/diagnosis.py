"""Device-level diagnosis of failure signatures and its text summary."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable

from hybrid_switch.config import AnalysisConfig
from hybrid_switch.definition.metrics import DeviceDiagnosis, IssueSeverity, TraceMetrics
from hybrid_switch.definition.trace import SweepTrace
from hybrid_switch.validation.context import DiagnosisContext, DiagnosisOptions
from hybrid_switch.validation.rules.base import DiagnosisRule


def options_from_config(config: AnalysisConfig) -> DiagnosisOptions:
    return DiagnosisOptions(
        off_frac=config.off_frac,
        min_g_on=config.min_g_on,
        hysteresis_warn_frac=config.hysteresis_warn_frac,
        leak_slope_warn=config.leak_slope_warn,
    )


def diagnose_device(
    metrics: TraceMetrics,
    down: SweepTrace,
    up: SweepTrace | None = None,
    *,
    options: DiagnosisOptions | None = None,
) -> DeviceDiagnosis:
    """Run every enabled rule over one device."""
    if options is None:
        options = DiagnosisOptions()
    diagnosis = DeviceDiagnosis(chip_id=metrics.chip_id, junction_id=metrics.junction_id)
    context = DiagnosisContext(metrics=metrics, down=down, up=up)

    active_rules: Iterable[DiagnosisRule]
    if options.enabled_rules is None:
        active_rules = options.rules
    else:
        active_rules = [rule for rule in options.rules if rule.code in options.enabled_rules]

    for rule in active_rules:
        for issue in rule.apply(context, options):
            diagnosis.add(issue)
    return diagnosis


def format_diagnosis(diagnoses: Iterable[DeviceDiagnosis]) -> str:
    """Concise text summary of all findings, one line per issue."""
    diagnoses = [d for d in diagnoses if d.issues]
    if not diagnoses:
        return "No failure signatures detected."

    issues = [issue for d in diagnoses for issue in d.issues]
    counts = Counter(issue.severity for issue in issues)
    fragments = []
    for severity in IssueSeverity:
        count = counts.get(severity, 0)
        if count:
            label = severity.value + ("s" if count != 1 else "")
            fragments.append(f"{count} {label}")

    lines = [f"Diagnosis found {len(issues)} issue(s) on {len(diagnoses)} device(s) ({', '.join(fragments)})."]
    for diagnosis in diagnoses:
        for issue in diagnosis.issues:
            line = f"- [{issue.severity.value.upper()}] {issue.code} on {diagnosis.device_id}: {issue.message}"
            if issue.hint:
                line += f" Hint: {issue.hint}"
            lines.append(line)
    return "\n".join(lines)

import numpy as np
import pytest

from hybrid_switch.analysis import analyze_trace_pair
from hybrid_switch.config import AnalysisConfig, FailureConfig
from hybrid_switch.definition import (
    DeviceDiagnosis,
    DeviceIssue,
    FailureMode,
    IssueSeverity,
    SweepDirection,
    SweepTrace,
)
from hybrid_switch.simulator import run_sweep
from hybrid_switch.validation import (
    DEFAULT_RULES,
    DiagnosisOptions,
    diagnose_device,
    format_diagnosis,
    options_from_config,
)

GRID = np.linspace(0.0, -1.0, 201)


def _with_failure(chip, junction_id: str, kind: FailureMode):
    junctions = [
        d.model_copy(update={"failure": kind}) if d.junction_id == junction_id else d
        for d in chip.junctions
    ]
    return chip.model_copy(update={"junctions": junctions})


def _diagnose(chip, junction_id: str, quiet, options: DiagnosisOptions | None = None):
    down, up = run_sweep(chip, junction_id, noise_config=quiet, failure_config=FailureConfig())
    metrics = analyze_trace_pair(down, up)
    return diagnose_device(metrics, down, up, options=options)


def _codes(diagnosis: DeviceDiagnosis) -> list[str]:
    return [issue.code for issue in diagnosis.issues]


def test_default_rules_have_unique_codes():
    codes = [rule.code for rule in DEFAULT_RULES]
    assert len(codes) == len(set(codes))
    assert all(rule.description for rule in DEFAULT_RULES)


def test_healthy_device_has_no_issues(chip, quiet):
    assert _codes(_diagnose(chip, "J4", quiet)) == []


def test_open_contact_is_a_dead_channel(chip, quiet):
    diagnosis = _diagnose(_with_failure(chip, "J1", FailureMode.OPEN_CONTACT), "J1", quiet)
    assert _codes(diagnosis) == ["dead_channel"]
    assert diagnosis.issues[0].severity is IssueSeverity.ERROR
    assert diagnosis.issues[0].data["g_on"] == 0.0


def test_thick_oxide_never_pinches_off(chip, quiet):
    diagnosis = _diagnose(_with_failure(chip, "J3", FailureMode.THICK_OXIDE_NO_PINCHOFF), "J3", quiet)
    assert _codes(diagnosis) == ["no_pinch_off"]
    assert diagnosis.issues[0].data["floor_frac"] == pytest.approx(0.3)


def test_gate_leak_is_told_apart_from_missing_pinch_off(chip, quiet):
    diagnosis = _diagnose(_with_failure(chip, "J5", FailureMode.GATE_LEAK), "J5", quiet)
    assert _codes(diagnosis) == ["gate_leak"]
    assert diagnosis.issues[0].data["leak_slope"] == pytest.approx(5e-5, rel=1e-3)


def test_long_junction_hysteresis_warning(chip, quiet):
    diagnosis = _diagnose(chip, "J8", quiet)
    assert _codes(diagnosis) == ["hysteresis"]
    assert diagnosis.issues[0].severity is IssueSeverity.WARNING


def test_pinch_off_shift():
    down = SweepTrace.from_arrays("C1", "J2", SweepDirection.DOWN, GRID, np.where(GRID > -0.5025, 1e-4, 0.0))
    up_values = np.where(GRID > -0.6025, 1e-4, 0.0)
    up = SweepTrace.from_arrays("C1", "J2", SweepDirection.UP, GRID[::-1], up_values[::-1])
    metrics = analyze_trace_pair(down, up)
    diagnosis = diagnose_device(metrics, down, up, options=DiagnosisOptions(hysteresis_warn_frac=10.0))
    assert _codes(diagnosis) == ["pinch_off_shift"]
    assert diagnosis.issues[0].data["shift"] == pytest.approx(0.1)


def test_enabled_rules_filter(chip, quiet):
    failed = _with_failure(chip, "J1", FailureMode.OPEN_CONTACT)
    options = DiagnosisOptions(enabled_rules={"gate_leak"})
    assert _codes(_diagnose(failed, "J1", quiet, options)) == []


def test_options_from_config():
    options = options_from_config(AnalysisConfig(hysteresis_warn_frac=0.2, min_g_on=1e-6))
    assert options.hysteresis_warn_frac == 0.2
    assert options.min_g_on == 1e-6
    assert options.rules == DEFAULT_RULES


def test_format_diagnosis():
    diagnosis = DeviceDiagnosis(chip_id="C3", junction_id="J1")
    diagnosis.add(
        DeviceIssue(code="dead_channel", message="G_ON = 0 S.", severity=IssueSeverity.ERROR, hint="Check bonds.")
    )
    diagnosis.add(DeviceIssue(code="hysteresis", message="Sweeps differ.", severity=IssueSeverity.WARNING))
    text = format_diagnosis([diagnosis, DeviceDiagnosis(chip_id="C3", junction_id="J2")])
    lines = text.splitlines()
    assert lines[0] == "Diagnosis found 2 issue(s) on 1 device(s) (1 warning, 1 error)."
    assert lines[1] == "- [ERROR] dead_channel on C3/J1: G_ON = 0 S. Hint: Check bonds."
    assert lines[2] == "- [WARNING] hysteresis on C3/J1: Sweeps differ."


def test_format_without_findings():
    assert format_diagnosis([]) == "No failure signatures detected."
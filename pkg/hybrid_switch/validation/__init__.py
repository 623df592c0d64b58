"""Failure-signature diagnosis of analyzed devices."""

from hybrid_switch.validation.context import DEFAULT_RULES, DiagnosisContext, DiagnosisOptions
from hybrid_switch.validation.diagnosis import (
    diagnose_device,
    format_diagnosis,
    options_from_config,
)
from hybrid_switch.validation.rules import DiagnosisRule

__all__ = [
    "DEFAULT_RULES",
    "DiagnosisContext",
    "DiagnosisOptions",
    "DiagnosisRule",
    "diagnose_device",
    "format_diagnosis",
    "options_from_config",
]

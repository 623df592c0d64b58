"""Diagnosis rule implementations."""

from hybrid_switch.validation.rules.base import DiagnosisRule
from hybrid_switch.validation.rules.dead_channel import DeadChannelRule
from hybrid_switch.validation.rules.gate_leak import GateLeakRule
from hybrid_switch.validation.rules.hysteresis import HysteresisRule
from hybrid_switch.validation.rules.no_pinch_off import NoPinchOffRule
from hybrid_switch.validation.rules.pinch_off_shift import PinchOffShiftRule

__all__ = [
    "DiagnosisRule",
    "DeadChannelRule",
    "GateLeakRule",
    "HysteresisRule",
    "NoPinchOffRule",
    "PinchOffShiftRule",
]

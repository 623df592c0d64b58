import numpy as np
from pydantic import BaseModel, Field

from hybrid_switch.chip.addressing import address
from hybrid_switch.config import FailureConfig
from hybrid_switch.definition.chip import ChipManifest, GateAddress
from hybrid_switch.logging import logger
from hybrid_switch.simulator.conductance import conductance_curve

_default_failure_config = FailureConfig()


class SweepSession(BaseModel):
    """Gate state of one chip during a measurement session.

    Both gate pads are global, so setting a voltage for one junction sets it for all of
    them. A session has a single writer.
    """

    chip: ChipManifest
    current: GateAddress | None = None
    gate_log: list[GateAddress] = Field(default_factory=list)
    record: bool = True

    def select(self, junction_id: str) -> GateAddress:
        v_left = self.current.v_gate_left if self.current else 0.0
        v_right = self.current.v_gate_right if self.current else 0.0
        logger.debug(f"{self.chip.chip_id}: routing source-drain to {junction_id}")
        return self._apply(address(self.chip, junction_id, v_left, v_right))

    def set_gates(self, junction_id: str, v_left: float, v_right: float | None = None) -> GateAddress:
        if v_right is None:
            v_right = v_left
        return self._apply(address(self.chip, junction_id, v_left, v_right))

    def measure(self, junction_id: str, failure_config: FailureConfig = _default_failure_config) -> float:
        """Noise-free conductance of ``junction_id`` at the voltages already on the gate pads."""
        gate = self.select(junction_id)
        device = self.chip.junction(junction_id)
        g = conductance_curve(
            device, self.chip.material, np.array([gate.v_g]), self.chip.temperature, failure_config
        )
        return float(g[0])

    def _apply(self, gate: GateAddress) -> GateAddress:
        self.current = gate
        if self.record:
            self.gate_log.append(gate)
        return gate

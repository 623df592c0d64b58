from hybrid_switch.config import GATE_SOURCE_LIMIT_V
from hybrid_switch.definition.chip import ChipManifest, GateAddress
from hybrid_switch.errors import AddressError


def address(chip: ChipManifest, junction_id: str, v_left: float, v_right: float) -> GateAddress:
    """Route the measurement to ``junction_id`` and set both global gate pads.

    The pads are shared by every junction on the chip; only the source-drain pair is selected.
    """
    if junction_id not in chip.junction_ids:
        raise AddressError(f"chip {chip.chip_id} has no junction {junction_id!r}")
    for pad, value in (("left", v_left), ("right", v_right)):
        if abs(value) > GATE_SOURCE_LIMIT_V:
            raise AddressError(
                f"{pad} gate voltage {value} V outside the +/-{GATE_SOURCE_LIMIT_V:g} V source range"
            )
    return GateAddress(selected_junction=junction_id, v_gate_left=v_left, v_gate_right=v_right)

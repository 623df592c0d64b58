"""Random assignment of fabrication and bonding failures."""

import numpy as np
from pydantic import ValidationError

from hybrid_switch.config import FailureConfig, class_key
from hybrid_switch.definition.chip import ChipManifest, FailureMode
from hybrid_switch.errors import ConfigError
from hybrid_switch.logging import logger
from hybrid_switch.utils.seeding import stream_rng


def load_failure_config(data: dict | None) -> FailureConfig:
    try:
        return FailureConfig.model_validate(data or {})
    except ValidationError as e:
        raise ConfigError(f"invalid failure config: {e.errors()[0]['msg']}") from e


def sample_failures(chip: ChipManifest, failure_config: FailureConfig, seed: int) -> ChipManifest:
    """Assign failure modes to healthy junctions of ``chip``.

    Each junction draws from its own stream keyed by (seed, chip_id, junction_id), so a
    junction's fate does not depend on the rest of the ensemble. Failures already declared
    in the manifest are kept.
    """
    kinds = [kind for kind in FailureMode if kind in failure_config.kind_weights]
    weights = np.array([failure_config.kind_weights[kind] for kind in kinds], dtype=float)
    weights /= weights.sum()

    junctions = []
    for device in chip.junctions:
        if device.failure is not FailureMode.NONE:
            junctions.append(device)
            continue
        key = class_key(device.geometry.L_J, device.geometry.W_c)
        probability = failure_config.probability_for(key)
        rng = stream_rng(seed, "failure", chip.chip_id, device.junction_id)
        if rng.random() < probability:
            kind = kinds[int(rng.choice(len(kinds), p=weights))]
            logger.debug(f"{chip.chip_id}/{device.junction_id}: failure {kind.value}")
            device = device.model_copy(update={"failure": kind})
        junctions.append(device)
    return chip.model_copy(update={"junctions": junctions})

"""Bidirectional gate sweeps of single junctions and whole chip ensembles."""

from concurrent.futures import ThreadPoolExecutor
from itertools import chain

import numpy as np
from pydantic import BaseModel, Field

from hybrid_switch.chip.failures import sample_failures
from hybrid_switch.config import DEFAULT_SEED, DEFAULT_WORKERS, FailureConfig
from hybrid_switch.definition.chip import ChipManifest
from hybrid_switch.definition.trace import (
    HysteresisState,
    NoiseConfig,
    SweepDirection,
    SweepProtocol,
    SweepTrace,
)
from hybrid_switch.errors import ConfigError
from hybrid_switch.logging import logger
from hybrid_switch.simulator.conductance import conductance_curve
from hybrid_switch.simulator.hysteresis import apply_hysteresis
from hybrid_switch.simulator.lockin import integration_cycles, lockin_sweep
from hybrid_switch.simulator.session import SweepSession
from hybrid_switch.utils.seeding import stream_rng

TracePair = tuple[SweepTrace, SweepTrace | None]

_default_failure_config = FailureConfig()


def _sweep_cycle(
    chip: ChipManifest,
    junction_id: str,
    protocol: SweepProtocol | None = None,
    noise_config: NoiseConfig | None = None,
    seed: int = DEFAULT_SEED,
    *,
    failure_config: FailureConfig = _default_failure_config,
    state: HysteresisState | None = None,
    repeat: int = 0,
    session: SweepSession | None = None,
) -> tuple[SweepTrace, SweepTrace | None, HysteresisState]:
    protocol = protocol or SweepProtocol()
    noise_config = noise_config or NoiseConfig()
    integration_cycles(protocol)

    session = session or SweepSession(chip=chip)
    session.select(junction_id)
    device = chip.junction(junction_id)
    state = state or HysteresisState()
    v_drive = max(abs(protocol.v_dc_bias), protocol.v_ac)

    traces: dict[SweepDirection, SweepTrace] = {}
    for direction in protocol.sweep_directions:
        grid = protocol.grid(direction)
        for v_g in grid:
            session.set_gates(junction_id, float(v_g))
        g_true = conductance_curve(device, chip.material, grid, chip.temperature, failure_config)
        g_true, state = apply_hysteresis(g_true, device, direction, state, v_drive)
        rng = stream_rng(seed, "lockin", chip.chip_id, junction_id, direction.value, repeat)
        g_raw = lockin_sweep(g_true, protocol, noise_config, rng)
        traces[direction] = SweepTrace.from_arrays(
            chip.chip_id,
            junction_id,
            direction,
            grid,
            np.maximum(g_raw, 0.0),
            g_raw,
            seed=seed,
            protocol=protocol,
            repeat=repeat,
        )
    logger.debug(
        f"{chip.chip_id}/{junction_id} r{repeat}: swept {protocol.n_points} points, "
        f"heat level {state.heat_level:.3g}"
    )
    return traces[SweepDirection.DOWN], traces.get(SweepDirection.UP), state


def run_sweep(
    chip: ChipManifest,
    junction_id: str,
    protocol: SweepProtocol | None = None,
    noise_config: NoiseConfig | None = None,
    seed: int = DEFAULT_SEED,
    *,
    failure_config: FailureConfig = _default_failure_config,
    state: HysteresisState | None = None,
    repeat: int = 0,
    session: SweepSession | None = None,
) -> TracePair:
    """Sweep ``junction_id`` down and (unless ``down_only``) back up.

    Returns ``(down, up)``; ``up`` is None for down-only protocols. Pass ``state`` to start from
    the heating of an earlier cycle, and ``session`` to share gate state with other sweeps on
    the same chip.
    """
    down, up, _ = _sweep_cycle(
        chip,
        junction_id,
        protocol,
        noise_config,
        seed,
        failure_config=failure_config,
        state=state,
        repeat=repeat,
        session=session,
    )
    return down, up


def run_repeated_sweeps(
    chip: ChipManifest,
    junction_id: str,
    protocol: SweepProtocol | None = None,
    noise_config: NoiseConfig | None = None,
    seed: int = DEFAULT_SEED,
    n_repeats: int = 2,
    *,
    failure_config: FailureConfig = _default_failure_config,
    session: SweepSession | None = None,
) -> list[TracePair]:
    """Several down/up cycles of one junction; heating carries over between cycles."""
    if n_repeats < 1:
        raise ConfigError(f"n_repeats must be at least 1, got {n_repeats}")
    session = session or SweepSession(chip=chip)
    state = HysteresisState()
    pairs = []
    for repeat in range(n_repeats):
        down, up, state = _sweep_cycle(
            chip,
            junction_id,
            protocol,
            noise_config,
            seed,
            failure_config=failure_config,
            state=state,
            repeat=repeat,
            session=session,
        )
        pairs.append((down, up))
    return pairs


class EnsembleResult(BaseModel):
    """Chips as simulated (with sampled failures) and their traces in deterministic order."""

    chips: list[ChipManifest]
    traces: list[SweepTrace] = Field(default_factory=list)


def _simulate_chip(
    chip: ChipManifest,
    protocol: SweepProtocol,
    noise_config: NoiseConfig,
    seed: int,
    failure_config: FailureConfig,
    n_repeats: int,
) -> list[SweepTrace]:
    traces: list[SweepTrace] = []
    # one set of gate pads per chip; the log is only kept for interactive sessions
    session = SweepSession(chip=chip, record=False)
    for junction_id in chip.junction_ids:
        pairs = run_repeated_sweeps(
            chip,
            junction_id,
            protocol,
            noise_config,
            seed,
            n_repeats,
            failure_config=failure_config,
            session=session,
        )
        for down, up in pairs:
            traces.extend(trace for trace in (down, up) if trace is not None)
    return traces


def run_ensemble(
    chips: list[ChipManifest],
    protocol: SweepProtocol | None = None,
    failure_config: FailureConfig = _default_failure_config,
    noise_config: NoiseConfig | None = None,
    seed: int = DEFAULT_SEED,
    *,
    n_repeats: int = 1,
    max_workers: int | None = None,
) -> EnsembleResult:
    """Sample failures for every chip and sweep all of its junctions.

    Chips are simulated concurrently when ``max_workers > 1``. Every junction draws from
    its own seeded streams, so the result does not depend on the worker count.
    """
    if not chips:
        raise ConfigError("run_ensemble needs at least one chip")
    protocol = protocol or SweepProtocol()
    noise_config = noise_config or NoiseConfig()
    max_workers = max_workers or DEFAULT_WORKERS

    chips = [sample_failures(chip, failure_config, seed) for chip in chips]
    logger.info(
        f"Simulating {len(chips)} chips x {len(chips[0].junctions)} junctions "
        f"(seed={seed}, workers={max_workers})"
    )

    def simulate(chip: ChipManifest) -> list[SweepTrace]:
        return _simulate_chip(chip, protocol, noise_config, seed, failure_config, n_repeats)

    if max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            # map preserves submission order
            per_chip = list(executor.map(simulate, chips))
    else:
        per_chip = [simulate(chip) for chip in chips]

    return EnsembleResult(chips=chips, traces=list(chain.from_iterable(per_chip)))

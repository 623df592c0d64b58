"""Switching metrics of single traces and of down/up trace pairs."""

import numpy as np
from natsort import natsorted

from hybrid_switch.config import AnalysisConfig
from hybrid_switch.definition.chip import JunctionGeometry
from hybrid_switch.definition.metrics import SweepMetrics, TraceMetrics
from hybrid_switch.definition.trace import SweepDirection, SweepTrace
from hybrid_switch.errors import ExtractionError
from hybrid_switch.logging import logger

# gate voltages closer than this are the same grid point
V_TOLERANCE = 1e-9

_default_config = AnalysisConfig()


def _sorted_by_voltage(trace: SweepTrace) -> tuple[np.ndarray, np.ndarray]:
    order = np.argsort(trace.v_g, kind="stable")
    return trace.v_g[order], trace.g[order]


def extract_g_on(trace: SweepTrace) -> float:
    """Conductance at zero gate voltage, interpolated linearly between neighbours if needed."""
    v, g = _sorted_by_voltage(trace)
    if v[-1] < -V_TOLERANCE or v[0] > V_TOLERANCE:
        raise ExtractionError(
            f"{trace.chip_id}/{trace.junction_id} {trace.direction.value}: trace spans "
            f"{v[0]:g}..{v[-1]:g} V and does not reach v_g = 0"
        )
    exact = np.flatnonzero(np.abs(v) <= V_TOLERANCE)
    if exact.size:
        return float(g[exact[0]])
    return float(np.interp(0.0, v, g))


def extract_g_off(trace: SweepTrace, tail_frac: float = _default_config.tail_frac) -> float:
    """Mean conductance over the most negative ``tail_frac`` of the gate range."""
    v, g = _sorted_by_voltage(trace)
    span = v[-1] - v[0]
    cutoff = v[0] + tail_frac * span + V_TOLERANCE * max(span, 1.0)
    return float(np.mean(g[v <= cutoff]))


def extract_pinch_off(
    trace: SweepTrace,
    off_frac: float = _default_config.off_frac,
    persistence: int = _default_config.persistence,
    g_on: float | None = None,
) -> float | None:
    """First gate voltage, walking from 0 V toward negative, where G stays below
    ``off_frac * g_on`` for ``persistence`` consecutive samples. None if it never does.
    """
    if g_on is None:
        g_on = extract_g_on(trace)
    if g_on <= 0:
        return None
    v, g = _sorted_by_voltage(trace)
    # walk from the most positive point downward, starting at 0 V
    v, g = v[::-1], g[::-1]
    keep = v <= V_TOLERANCE
    v, g = v[keep], g[keep]
    below = g < off_frac * g_on
    if below.size < persistence:
        return None
    runs = np.lib.stride_tricks.sliding_window_view(below, persistence).all(axis=1)
    hits = np.flatnonzero(runs)
    return float(v[hits[0]]) if hits.size else None


def sweep_metrics(trace: SweepTrace, config: AnalysisConfig = _default_config) -> SweepMetrics:
    g_on = extract_g_on(trace)
    return SweepMetrics(
        v_pinch=extract_pinch_off(trace, config.off_frac, config.persistence, g_on),
        g_on=g_on,
        g_off=extract_g_off(trace, config.tail_frac),
    )


def classify_switching(
    down: SweepMetrics, up: SweepMetrics | None, min_g_on: float = _default_config.min_g_on
) -> bool:
    """A device switches when every measured direction pinches off from a healthy ON state."""
    directions = [down] if up is None else [down, up]
    return all(m.v_pinch is not None and m.g_on >= min_g_on for m in directions)


def _common_grid(down: SweepTrace, up: SweepTrace) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    v_down, g_down = _sorted_by_voltage(down)
    v_up, g_up = _sorted_by_voltage(up)
    lo, hi = max(v_down[0], v_up[0]), min(v_down[-1], v_up[-1])
    if lo > hi + V_TOLERANCE:
        raise ExtractionError(
            f"{down.chip_id}/{down.junction_id}: sweeps cover disjoint gate ranges "
            f"({v_down[0]:g}..{v_down[-1]:g} V and {v_up[0]:g}..{v_up[-1]:g} V)"
        )
    inside = (v_down >= lo - V_TOLERANCE) & (v_down <= hi + V_TOLERANCE)
    grid = v_down[inside] if inside.any() else np.array([lo, hi])
    return grid, np.interp(grid, v_down, g_down), np.interp(grid, v_up, g_up)


def hysteresis_max(down: SweepTrace, up: SweepTrace) -> float:
    """Largest |G_down - G_up| on the down sweep's grid, the up sweep resampled onto it."""
    _, g_down, g_up = _common_grid(down, up)
    return float(np.max(np.abs(g_down - g_up)))


def _check_pair(down: SweepTrace, up: SweepTrace | None) -> None:
    if down.direction is not SweepDirection.DOWN:
        raise ExtractionError(f"{down.chip_id}/{down.junction_id}: first trace is not a downward sweep")
    if up is None:
        return
    if (down.chip_id, down.junction_id) != (up.chip_id, up.junction_id):
        raise ExtractionError(
            f"trace ids do not match: {down.chip_id}/{down.junction_id} vs {up.chip_id}/{up.junction_id}"
        )
    if up.direction is not SweepDirection.UP:
        raise ExtractionError(f"{up.chip_id}/{up.junction_id}: second trace is not an upward sweep")


def _pick_v_pinch(down: SweepMetrics, up: SweepMetrics | None, source: str) -> float | None:
    if source == "down" or up is None:
        return down.v_pinch
    if source == "up":
        return up.v_pinch
    values = [m.v_pinch for m in (down, up) if m.v_pinch is not None]
    return float(np.mean(values)) if values else None


def analyze_trace_pair(
    down: SweepTrace,
    up: SweepTrace | None,
    config: AnalysisConfig = _default_config,
    geometry: JunctionGeometry | None = None,
) -> TraceMetrics:
    """Compose the metrics of one device from its down sweep and (optional) up sweep."""
    _check_pair(down, up)
    down_metrics = sweep_metrics(down, config)
    up_metrics = sweep_metrics(up, config) if up is not None else None

    is_switching = classify_switching(down_metrics, up_metrics, config.min_g_on) and all(
        m.g_off <= config.off_frac * m.g_on
        for m in (down_metrics, up_metrics)
        if m is not None
    )
    return TraceMetrics(
        chip_id=down.chip_id,
        junction_id=down.junction_id,
        v_pinch=_pick_v_pinch(down_metrics, up_metrics, config.v_pinch_source),
        v_pinch_down=down_metrics.v_pinch,
        v_pinch_up=up_metrics.v_pinch if up_metrics else None,
        g_on=down_metrics.g_on,
        g_off=down_metrics.g_off,
        g_on_up=up_metrics.g_on if up_metrics else None,
        g_off_up=up_metrics.g_off if up_metrics else None,
        hysteresis_max=hysteresis_max(down, up) if up is not None else 0.0,
        is_switching=is_switching,
        off_threshold=config.off_frac * down_metrics.g_on,
        L_J_um=round(geometry.L_J * 1e6, 6) if geometry else None,
        W_c_nm=round(geometry.W_c * 1e9, 6) if geometry else None,
        repeat=down.repeat,
    )


def pair_traces(traces: list[SweepTrace]) -> list[tuple[SweepTrace, SweepTrace | None]]:
    """Group traces into ``(down, up)`` pairs by chip, junction and repeat, in natural order.

    An upward sweep without its downward partner cannot be analyzed and is dropped.
    """
    downs: dict[tuple[str, str, int], SweepTrace] = {}
    ups: dict[tuple[str, str, int], SweepTrace] = {}
    for trace in traces:
        key = (trace.chip_id, trace.junction_id, trace.repeat)
        target = downs if trace.direction is SweepDirection.DOWN else ups
        target[key] = trace
    for key in ups.keys() - downs.keys():
        logger.warning(f"Upward sweep {key[0]}/{key[1]} r{key[2]} has no downward partner")
    return [(downs[key], ups.get(key)) for key in natsorted(downs)]

"""Box statistics, correlations and repeatability of device metrics."""

from collections.abc import Callable, Iterable, Sequence

import numpy as np
from natsort import natsorted
from scipy import stats

from hybrid_switch.definition.metrics import (
    BoxStats,
    CorrelationResult,
    RepeatabilityStats,
    TraceMetrics,
)
from hybrid_switch.errors import ExtractionError

WHISKER_IQR = 1.5

# metrics summarised as box plots
BOX_METRICS = ("v_pinch_down", "v_pinch_up", "g_on", "g_off")


def box_stats(values: Iterable[float]) -> BoxStats:
    """Quartiles interpolated at ``p (n - 1)``; whiskers at the furthest datum within 1.5 IQR."""
    data = np.asarray(list(values), dtype=float)
    if data.size == 0:
        raise ExtractionError("box statistics need at least one value")
    q1, median, q3 = np.percentile(data, [25, 50, 75])
    iqr = q3 - q1
    low_fence = q1 - WHISKER_IQR * iqr
    high_fence = q3 + WHISKER_IQR * iqr
    whisker_low = float(data[data >= low_fence].min())
    whisker_high = float(data[data <= high_fence].max())
    outliers = np.sort(data[(data < whisker_low) | (data > whisker_high)])
    return BoxStats(
        n=int(data.size),
        mean=float(data.mean()),
        median=float(median),
        q1=float(q1),
        q3=float(q3),
        iqr=float(iqr),
        whisker_low=whisker_low,
        whisker_high=whisker_high,
        outliers=outliers.tolist(),
    )


def grouped_box_stats(
    devices: Sequence[TraceMetrics],
    metric: str,
    group_by: Callable[[TraceMetrics], str],
) -> dict[str, BoxStats]:
    """Box statistics of ``metric`` per group; devices without a value are left out."""
    groups: dict[str, list[float]] = {}
    for device in devices:
        value = getattr(device, metric)
        if value is not None:
            groups.setdefault(group_by(device), []).append(value)
    return {key: box_stats(groups[key]) for key in natsorted(groups)}


def correlate(x: Sequence[float], y: Sequence[float]) -> CorrelationResult:
    """Pearson r and the least-squares line of ``y`` against ``x``."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape:
        raise ExtractionError(f"correlation inputs differ in length: {x.size} vs {y.size}")
    if x.size < 3:
        raise ExtractionError(f"correlation needs at least 3 points, got {x.size}")
    if np.ptp(x) == 0:
        raise ExtractionError("correlation is undefined for a constant x")
    if np.ptp(y) == 0:
        return CorrelationResult(pearson_r=0.0, slope=0.0, intercept=float(y[0]), n=int(x.size))
    fit = stats.linregress(x, y)
    return CorrelationResult(
        pearson_r=float(np.clip(fit.rvalue, -1.0, 1.0)),
        slope=float(fit.slope),
        intercept=float(fit.intercept),
        n=int(x.size),
    )


def _mean_sd(values: np.ndarray) -> tuple[float, float]:
    sd = float(values.std(ddof=1)) if values.size > 1 else 0.0
    return float(values.mean()), sd


def repeatability(metrics: Sequence[TraceMetrics]) -> RepeatabilityStats:
    """Spread of one device's metrics over repeated sweep cycles."""
    if not metrics:
        raise ExtractionError("repeatability needs at least one sweep cycle")
    ids = {(m.chip_id, m.junction_id) for m in metrics}
    if len(ids) != 1:
        raise ExtractionError(f"repeatability mixes devices: {sorted(ids)}")
    chip_id, junction_id = ids.pop()

    v_pinch = np.array([m.v_pinch for m in metrics if m.v_pinch is not None], dtype=float)
    g_on_mean, g_on_sd = _mean_sd(np.array([m.g_on for m in metrics]))
    g_off_mean, g_off_sd = _mean_sd(np.array([m.g_off for m in metrics]))
    v_mean = v_sd = v_spread = None
    if v_pinch.size:
        v_mean, v_sd = _mean_sd(v_pinch)
        v_spread = float(np.ptp(v_pinch))
    return RepeatabilityStats(
        chip_id=chip_id,
        junction_id=junction_id,
        n=len(metrics),
        v_pinch_mean=v_mean,
        v_pinch_sd=v_sd,
        v_pinch_spread=v_spread,
        g_on_mean=g_on_mean,
        g_on_sd=g_on_sd,
        g_off_mean=g_off_mean,
        g_off_sd=g_off_sd,
        switching_fraction=sum(m.is_switching for m in metrics) / len(metrics),
    )

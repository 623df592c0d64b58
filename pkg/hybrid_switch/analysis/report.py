"""Metrics report assembly, its JSON/CSV files and the plot-data tables."""

from pathlib import Path

import pandas as pd
from pydantic import ValidationError

from hybrid_switch.analysis.extraction import analyze_trace_pair, pair_traces
from hybrid_switch.analysis.statistics import (
    BOX_METRICS,
    correlate,
    grouped_box_stats,
    repeatability,
)
from hybrid_switch.analysis.yields import (
    CHIP_DECIMALS,
    CLASS_DECIMALS,
    chip_records,
    class_records,
    yield_table,
)
from hybrid_switch.config import AnalysisConfig
from hybrid_switch.definition.chip import JunctionGeometry
from hybrid_switch.definition.metrics import CorrelationResult, MetricsReport, TraceMetrics
from hybrid_switch.definition.trace import SweepTrace
from hybrid_switch.errors import ExtractionError, TraceFormatError
from hybrid_switch.logging import logger
from hybrid_switch.utils.pydantic import load_model, save_model
from hybrid_switch.utils.rounding import format_percent
from hybrid_switch.validation import diagnose_device, options_from_config

METRICS_CSV_COLUMNS = [
    "chip_id",
    "junction_id",
    "v_pinch_down_V",
    "v_pinch_up_V",
    "g_on_S",
    "g_off_S",
    "hysteresis_S",
    "is_switching",
]

GROUPINGS = {
    "chip": lambda device: device.chip_id,
    "junction": lambda device: device.junction_id,
}

# correlation name -> (x attribute, plot-data file)
CORRELATIONS = {
    "v_pinch_vs_L_J": ("L_J_um", "scatter_vp_vs_LJ.csv"),
    "v_pinch_vs_W_c": ("W_c_nm", "scatter_vp_vs_Wc.csv"),
}

GeometryLookup = dict[tuple[str, str], JunctionGeometry]


def _correlation(devices: list[TraceMetrics], attribute: str) -> CorrelationResult | None:
    points = [
        (getattr(d, attribute), d.v_pinch)
        for d in devices
        if d.is_switching and getattr(d, attribute) is not None
    ]
    try:
        return correlate([x for x, _ in points], [y for _, y in points])
    except ExtractionError as e:
        logger.info(f"No V_p correlation against {attribute}: {e}")
        return None


def build_report(
    traces: list[SweepTrace],
    config: AnalysisConfig | None = None,
    geometries: GeometryLookup | None = None,
    malformed_files: list[str] | None = None,
) -> MetricsReport:
    """Analyze every down/up pair and aggregate statistics over the first sweep cycle."""
    config = config or AnalysisConfig()
    geometries = geometries or {}
    options = options_from_config(config)

    devices: list[TraceMetrics] = []
    diagnoses = []
    for down, up in pair_traces(traces):
        geometry = geometries.get((down.chip_id, down.junction_id))
        metrics = analyze_trace_pair(down, up, config, geometry)
        devices.append(metrics)
        if metrics.repeat == 0:
            diagnosis = diagnose_device(metrics, down, up, options=options)
            if diagnosis.issues:
                diagnoses.append(diagnosis)

    primary = [d for d in devices if d.repeat == 0]
    box = {}
    for metric in BOX_METRICS:
        for grouping, key in GROUPINGS.items():
            box[f"{metric}_by_{grouping}"] = grouped_box_stats(primary, metric, key)

    cycles: dict[tuple[str, str], list[TraceMetrics]] = {}
    for device in devices:
        cycles.setdefault((device.chip_id, device.junction_id), []).append(device)
    repeat_stats = [repeatability(group) for group in cycles.values() if len(group) > 1]

    report = MetricsReport(
        devices=devices,
        box_stats=box,
        yields_by_chip=yield_table(chip_records(primary), ndigits=CHIP_DECIMALS) if primary else None,
        yields_by_class=yield_table(class_records(primary), ndigits=CLASS_DECIMALS) if primary else None,
        correlations={
            name: _correlation(primary, attribute) for name, (attribute, _) in CORRELATIONS.items()
        },
        repeatability=repeat_stats,
        diagnoses=diagnoses,
        malformed_files=malformed_files or [],
    )
    logger.info(f"Analyzed {len(primary)} devices ({len(devices)} sweep cycles)")
    return report


def metrics_frame(devices: list[TraceMetrics]) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                "chip_id": d.chip_id,
                "junction_id": d.junction_id,
                "v_pinch_down_V": d.v_pinch_down,
                "v_pinch_up_V": d.v_pinch_up,
                "g_on_S": d.g_on,
                "g_off_S": d.g_off,
                "hysteresis_S": d.hysteresis_max,
                "is_switching": d.is_switching,
            }
            for d in devices
        ],
        columns=METRICS_CSV_COLUMNS,
    )


def write_report(report: MetricsReport, out_dir: Path | str) -> list[Path]:
    """Write ``metrics.json`` and ``metrics.csv``."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    json_path = out_dir / "metrics.json"
    csv_path = out_dir / "metrics.csv"
    save_model(report, json_path)
    metrics_frame(report.devices).to_csv(csv_path, index=False, float_format="%.9e", lineterminator="\n")
    return [json_path, csv_path]


def load_report(path: Path | str) -> MetricsReport:
    path = Path(path)
    if not path.is_file():
        raise TraceFormatError(f"{path}: metrics file not found")
    try:
        return load_model(path, MetricsReport)
    except ValidationError as e:
        raise TraceFormatError(f"{path}: not a metrics report ({e.errors()[0]['msg']})") from e


def write_plot_data(report: MetricsReport, out_dir: Path | str) -> list[Path]:
    """Tables behind the box plots and V_p scatter plots, one CSV per plot."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []

    for name, groups in report.box_stats.items():
        rows = [
            {
                "group": key,
                **stats.model_dump(exclude={"outliers"}),
                "outliers": ";".join(f"{value:.9e}" for value in stats.outliers),
            }
            for key, stats in groups.items()
        ]
        path = out_dir / f"box_{name}.csv"
        pd.DataFrame(rows).to_csv(path, index=False, float_format="%.9e", lineterminator="\n")
        written.append(path)

    primary = [d for d in report.devices if d.repeat == 0]
    for attribute, filename in CORRELATIONS.values():
        frame = pd.DataFrame(
            [
                {
                    "chip_id": d.chip_id,
                    "junction_id": d.junction_id,
                    attribute: getattr(d, attribute),
                    "v_pinch_V": d.v_pinch,
                    "is_switching": d.is_switching,
                }
                for d in primary
            ],
            columns=["chip_id", "junction_id", attribute, "v_pinch_V", "is_switching"],
        )
        path = out_dir / filename
        frame.to_csv(path, index=False, float_format="%.9e", lineterminator="\n")
        written.append(path)

    correlations = pd.DataFrame(
        [
            {"name": name, **(result.model_dump() if result else {})}
            for name, result in report.correlations.items()
        ],
        columns=["name", "pearson_r", "slope", "intercept", "n"],
    )
    path = out_dir / "correlations.csv"
    correlations.to_csv(path, index=False, lineterminator="\n")
    written.append(path)
    return written


def format_summary(report: MetricsReport) -> str:
    """``key = value`` summary printed by the CLI."""
    primary = [d for d in report.devices if d.repeat == 0]
    lines = [
        f"devices = {len(primary)}",
        f"switching = {sum(d.is_switching for d in primary)}",
        f"malformed_files = {len(report.malformed_files)}",
    ]
    if report.yields_by_chip is not None:
        total = report.yields_by_chip.total
        lines.append(f"yield_total_percent = {format_percent(total.yield_percent, 2)}")
        for row in report.yields_by_chip.rows:
            lines.append(f"yield_{row.group_key}_percent = {format_percent(row.yield_percent, 0)}")
    if report.yields_by_class is not None:
        for row in report.yields_by_class.rows:
            lines.append(f"yield_{row.group_key}_percent = {format_percent(row.yield_percent, 1)}")
    for name, result in report.correlations.items():
        value = f"{result.pearson_r:.4f}" if result else "n/a"
        lines.append(f"r_{name} = {value}")
    return "\n".join(lines)

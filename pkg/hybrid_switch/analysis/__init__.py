"""Switching metrics, box statistics, yields and correlations of sweep traces."""

from hybrid_switch.analysis.extraction import (
    analyze_trace_pair,
    classify_switching,
    extract_g_off,
    extract_g_on,
    extract_pinch_off,
    hysteresis_max,
    pair_traces,
    sweep_metrics,
)
from hybrid_switch.analysis.report import (
    build_report,
    format_summary,
    load_report,
    write_plot_data,
    write_report,
)
from hybrid_switch.analysis.statistics import box_stats, correlate, grouped_box_stats, repeatability
from hybrid_switch.analysis.yields import (
    PublishedTables,
    fixture_yields,
    load_published_tables,
    records_from_counts,
    yield_table,
)

__all__ = [
    "analyze_trace_pair",
    "classify_switching",
    "extract_g_off",
    "extract_g_on",
    "extract_pinch_off",
    "hysteresis_max",
    "pair_traces",
    "sweep_metrics",
    "build_report",
    "format_summary",
    "load_report",
    "write_plot_data",
    "write_report",
    "box_stats",
    "correlate",
    "grouped_box_stats",
    "repeatability",
    "PublishedTables",
    "fixture_yields",
    "load_published_tables",
    "records_from_counts",
    "yield_table",
]

import numpy as np
import pytest

from hybrid_switch.analysis import analyze_trace_pair, box_stats, build_report, hysteresis_max
from hybrid_switch.chip import build_wafers, default_chip, designed_geometry
from hybrid_switch.simulator import run_ensemble, run_sweep


@pytest.mark.slow
def test_ten_wafer_ensemble(dark):
    chips = build_wafers(dark, seed=20230607, n_wafers=10)
    result = run_ensemble(chips, seed=20230607, max_workers=4)
    geometries = {(c.chip_id, j): designed_geometry(j) for c in chips for j in c.junction_ids}
    report = build_report(result.traces, geometries=geometries)

    assert len(report.devices) == 720
    switching = [d for d in report.devices if d.is_switching]
    mean_v_pinch = np.mean([d.v_pinch for d in switching])
    assert -0.60 <= mean_v_pinch <= -0.52
    assert 69.0 <= report.yields_by_chip.total.yield_percent <= 79.0
    assert report.correlations["v_pinch_vs_L_J"].pearson_r > 0
    by_class = report.yields_by_class
    assert by_class.row("3.2um/100nm").yield_percent < by_class.row("1.4um/400nm").yield_percent


@pytest.mark.slow
def test_long_junctions_are_more_hysteretic_across_seeds(dark):
    chip = default_chip("C1", dark)
    for seed in range(100):
        j8 = run_sweep(chip, "J8", seed=seed)
        j4 = run_sweep(chip, "J4", seed=seed)
        assert hysteresis_max(*j8) > hysteresis_max(*j4)
        for pair in (j8, j4):
            metrics = analyze_trace_pair(*pair)
            assert abs(metrics.v_pinch_down - metrics.v_pinch_up) <= 0.005 + 1e-9


@pytest.mark.slow
def test_box_stats_on_many_samples():
    rng = np.random.default_rng(0)
    for _ in range(10000):
        values = rng.normal(size=int(rng.integers(1, 30)))
        stats = box_stats(values)
        ordered = np.sort(values)
        inside = ordered[(ordered >= stats.q1 - 1.5 * stats.iqr) & (ordered <= stats.q3 + 1.5 * stats.iqr)]
        assert stats.whisker_low == inside[0]
        assert stats.whisker_high == inside[-1]
        assert stats.n == len(inside) + len(stats.outliers)

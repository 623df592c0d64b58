import json

import pytest
from typer.testing import CliRunner

from hybrid_switch.analysis import build_report, write_report
from hybrid_switch.chip import load_manifest
from hybrid_switch.config import PUBLISHED_TABLES_PATH
from hybrid_switch.main import app
from hybrid_switch.simulator import run_sweep

runner = CliRunner()


def _values(output: str) -> dict[str, str]:
    """``key = value`` lines of a command's output."""
    values = {}
    for line in output.splitlines():
        key, sep, value = line.partition(" = ")
        if sep and " " not in key:
            values[key] = value
    return values


def _simulate(out_dir, *args):
    return runner.invoke(app, ["simulate", "-o", str(out_dir), *args])


def test_physics_prints_derived_quantities(materials_dir):
    result = runner.invoke(app, ["physics", str(materials_dir / "dark.yaml")])
    assert result.exit_code == 0, result.output
    values = _values(result.output)
    assert float(values["k_F_per_m"]) == pytest.approx(1.18635e8, rel=1e-4)
    assert float(values["l_e_m"]) == pytest.approx(1.95e-6, rel=1e-2)
    assert float(values["zeta_N_m"]) == pytest.approx(1.02e-7, rel=1e-2)
    assert values["max_modes_W_c_400nm"] == "15"
    assert values["max_modes_W_c_100nm"] == "3"
    assert values["ballistic_L_c_400nm"] == "true"
    assert values["ballistic_L_J_1.4um"] == "false"
    assert values["clean_L_J_3.2um"] == "true"


def test_physics_temperature_option(materials_dir):
    result = runner.invoke(app, ["physics", str(materials_dir / "dark.yaml"), "--temperature", "2.1"])
    assert result.exit_code == 0, result.output
    assert float(_values(result.output)["zeta_N_m"]) == pytest.approx(2.04e-7, rel=1e-2)


def test_physics_ballistic_factor_option(materials_dir):
    result = runner.invoke(
        app, ["physics", str(materials_dir / "dark.yaml"), "--ballistic-factor", "100"]
    )
    assert result.exit_code == 0, result.output
    assert _values(result.output)["ballistic_L_c_400nm"] == "false"


@pytest.mark.parametrize("option", [["--temperature", "0"], ["--ballistic-factor", "-1"]])
def test_physics_rejects_non_positive_settings(materials_dir, option):
    assert runner.invoke(app, ["physics", str(materials_dir / "dark.yaml"), *option]).exit_code == 2


def test_physics_rejects_incomplete_material(tmp_path):
    path = tmp_path / "material.yaml"
    path.write_text("mu_e_m2_per_Vs: 25.0\nm_star_ratio: 0.039\n", encoding="utf-8")
    assert runner.invoke(app, ["physics", str(path)]).exit_code == 2


def test_physics_missing_file(tmp_path):
    assert runner.invoke(app, ["physics", str(tmp_path / "nope.yaml")]).exit_code == 2


def test_chip_new_writes_manifest(tmp_path):
    path = tmp_path / "C5.json"
    result = runner.invoke(app, ["chip-new", "C5", "--seed", "3", "-o", str(path)])
    assert result.exit_code == 0, result.output
    chip = load_manifest(path)
    assert chip.chip_id == "C5"
    assert len(chip.junctions) == 8


def test_simulate_writes_one_file_per_sweep(tmp_path):
    result = _simulate(tmp_path, "--seed", "11")
    assert result.exit_code == 0, result.output
    assert _values(result.output)["traces"] == "16"
    assert len(list(tmp_path.glob("*.csv"))) == 16
    assert (tmp_path / "index.yaml").is_file()
    assert (tmp_path / "C1_J8_up.yaml").is_file()


def test_simulate_is_reproducible(tmp_path):
    first, second = tmp_path / "a", tmp_path / "b"
    assert _simulate(first, "--seed", "5").exit_code == 0
    assert _simulate(second, "--seed", "5").exit_code == 0
    names = sorted(p.name for p in first.iterdir())
    assert names == sorted(p.name for p in second.iterdir())
    for name in names:
        if name == "index.yaml":
            continue
        assert (first / name).read_bytes() == (second / name).read_bytes()


def test_simulate_from_manifest_down_only(tmp_path):
    manifest = tmp_path / "C9.json"
    runner.invoke(app, ["chip-new", "C9", "-o", str(manifest)])
    out = tmp_path / "traces"
    result = _simulate(out, "--manifest", str(manifest), "--directions", "down_only", "--no-noise")
    assert result.exit_code == 0, result.output
    assert sorted(p.name for p in out.glob("*.csv"))[:2] == ["C9_J1_down.csv", "C9_J2_down.csv"]
    assert len(list(out.glob("*.csv"))) == 8


def test_simulate_repeats_name_cycles(tmp_path):
    result = _simulate(tmp_path, "--repeats", "2", "--no-noise")
    assert result.exit_code == 0, result.output
    assert (tmp_path / "C1_J4_r1_up.csv").is_file()
    assert len(list(tmp_path.glob("*.csv"))) == 32


def test_simulate_rejects_unknown_config_key(tmp_path):
    config = tmp_path / "run.yaml"
    config.write_text("seed: 1\nchipz: 3\n", encoding="utf-8")
    assert _simulate(tmp_path / "out", "--config", str(config)).exit_code == 2


def test_simulate_rejects_short_lockin_window(tmp_path):
    config = tmp_path / "run.yaml"
    config.write_text("protocol:\n  integration_time: 0.01\n", encoding="utf-8")
    assert _simulate(tmp_path / "out", "--config", str(config)).exit_code == 2


def test_analyze_and_report(tmp_path):
    traces = tmp_path / "traces"
    assert _simulate(traces, "--chips", "3", "--seed", "8").exit_code == 0
    result = runner.invoke(app, ["analyze", str(traces)])
    assert result.exit_code == 0, result.output
    values = _values(result.output)
    assert values["devices"] == "24"
    assert values["malformed_files"] == "0"
    assert "yield_total_percent" in values

    metrics = json.loads((traces / "metrics.json").read_text())
    switching = [d for d in metrics["devices"] if d["is_switching"]]
    assert switching
    mean_v_pinch = sum(d["v_pinch"] for d in switching) / len(switching)
    assert -0.62 <= mean_v_pinch <= -0.50
    assert (traces / "metrics.csv").read_text().startswith("chip_id,junction_id,v_pinch_down_V")

    plots = tmp_path / "plots"
    result = runner.invoke(app, ["report", str(traces / "metrics.json"), "-o", str(plots)])
    assert result.exit_code == 0, result.output
    assert (plots / "box_v_pinch_down_by_chip.csv").is_file()
    assert (plots / "scatter_vp_vs_LJ.csv").is_file()
    assert (plots / "correlations.csv").read_text().startswith("name,pearson_r")


def test_analyze_is_reproducible(tmp_path):
    for name in ("a", "b"):
        assert _simulate(tmp_path / name, "--seed", "21").exit_code == 0
        assert runner.invoke(app, ["analyze", str(tmp_path / name)]).exit_code == 0
    assert (tmp_path / "a" / "metrics.json").read_bytes() == (tmp_path / "b" / "metrics.json").read_bytes()


def test_analyze_empty_directory(tmp_path):
    assert runner.invoke(app, ["analyze", str(tmp_path)]).exit_code == 2


def test_analyze_flags_malformed_files(tmp_path):
    assert _simulate(tmp_path, "--no-noise").exit_code == 0
    (tmp_path / "C1_J9_down.csv").write_text("not,a,trace\n", encoding="utf-8")
    result = runner.invoke(app, ["analyze", str(tmp_path)])
    assert result.exit_code == 2
    assert (tmp_path / "metrics.json").is_file()
    metrics = json.loads((tmp_path / "metrics.json").read_text())
    assert metrics["malformed_files"] == ["C1_J9_down.csv"]


def test_analyze_fixture_yields(tmp_path):
    result = runner.invoke(app, ["analyze", "--fixture", str(PUBLISHED_TABLES_PATH), "-o", str(tmp_path)])
    assert result.exit_code == 0, result.output
    values = _values(result.output)
    assert values["by_chip.Total"] == "49/66 (74.24%)"
    assert values["by_chip.C3"] == "3/8 (38%)"
    assert values["by_class.3.2um/100nm"] == "5/9 (55.6%)"
    yields = json.loads((tmp_path / "yields.json").read_text())
    assert yields["by_chip"]["total"]["yield_percent"] == 74.24


def test_report_missing_metrics(tmp_path):
    assert runner.invoke(app, ["report", str(tmp_path / "metrics.json")]).exit_code == 2


def test_simulate_write_failure(tmp_path):
    blocker = tmp_path / "out"
    blocker.write_text("a file, not a directory", encoding="utf-8")
    assert _simulate(blocker, "--no-noise", "--chips", "1").exit_code == 3


def test_report_single_device(tmp_path, chip, quiet):
    down, up = run_sweep(chip, "J4", noise_config=quiet)
    write_report(build_report([down, up]), tmp_path)
    result = runner.invoke(app, ["report", str(tmp_path / "metrics.json")])
    assert result.exit_code == 0, result.output
    box = (tmp_path / "box_g_on_by_junction.csv").read_text().splitlines()
    assert box[0].startswith("group,n,")
    assert box[1].startswith("J4,1,")

import numpy as np
import pytest

from hybrid_switch.definition import SweepDirection, SweepProtocol, SweepTrace
from hybrid_switch.errors import TraceFormatError
from hybrid_switch.simulator import (
    read_device_geometries,
    read_trace,
    read_trace_dir,
    run_sweep,
    write_index,
    write_trace,
)
from hybrid_switch.simulator.io import TRACE_COLUMNS
from hybrid_switch.utils.pydantic import load_data

HEADER = ",".join(TRACE_COLUMNS)


def _make_trace(chip_id: str = "C1", junction_id: str = "J1", repeat: int = 0) -> SweepTrace:
    v = np.linspace(0.0, -1.0, 5)
    g = np.array([1e-4, 8e-5, 1e-6, 0.0, 0.0])
    return SweepTrace.from_arrays(
        chip_id, junction_id, SweepDirection.DOWN, v, g, g - 1e-9, seed=3, repeat=repeat
    )


def _write_csv(path, rows: list[str], header: str = HEADER):
    path.write_text("\n".join([header, *rows]) + "\n", encoding="utf-8")
    return path


def test_write_then_read(tmp_path):
    trace = _make_trace()
    path = write_trace(trace, tmp_path)
    assert path.name == "C1_J1_down.csv"
    assert path.read_text().splitlines()[0] == HEADER
    loaded = read_trace(path)
    assert (loaded.chip_id, loaded.junction_id, loaded.direction) == ("C1", "J1", SweepDirection.DOWN)
    assert loaded.seed == 3
    assert np.allclose(loaded.v_g, trace.v_g, rtol=1e-9, atol=0)
    assert np.allclose(loaded.g, trace.g, rtol=1e-9, atol=0)
    assert np.allclose(loaded.g_raw, trace.g_raw, rtol=1e-9, atol=0)


def test_sidecar_keeps_run_details(tmp_path, chip, quiet):
    down, _ = run_sweep(chip, "J8", noise_config=quiet, seed=17)
    write_trace(down, tmp_path, device=chip.junction("J8"), noise_config=quiet)
    meta = load_data(tmp_path / "C1_J8_down.yaml")
    assert meta["seed"] == 17
    assert meta["noise"]["enabled"] is False
    assert meta["device"]["junction_id"] == "J8"
    assert read_trace(tmp_path / "C1_J8_down.csv").protocol == SweepProtocol()


def test_repeat_suffix(tmp_path):
    path = write_trace(_make_trace(repeat=2), tmp_path, with_repeat=True)
    assert path.name == "C1_J1_r2_down.csv"
    assert read_trace(path).repeat == 2


def test_device_geometries_from_sidecars(tmp_path, chip, quiet):
    down, _ = run_sweep(chip, "J2", noise_config=quiet)
    write_trace(down, tmp_path, device=chip.junction("J2"))
    write_index(tmp_path, [chip], [tmp_path / "C1_J2_down.csv"], seed=1)
    geometries = read_device_geometries(tmp_path)
    assert list(geometries) == [("C1", "J2")]
    assert geometries[("C1", "J2")].W_c == pytest.approx(300e-9)


def test_index_lists_failures_and_files(tmp_path, chip):
    path = write_index(tmp_path, [chip], [tmp_path / "b.csv", tmp_path / "a.csv"], seed=9)
    index = load_data(path)
    assert index["seed"] == 9
    assert index["files"] == ["a.csv", "b.csv"]
    assert index["chips"]["C1"]["J1"] == "none"


@pytest.mark.parametrize(
    "rows, header, message",
    [
        (["C1,J1,0,1e-4", "C1,J1,-0.1,1e-5"], "chip,junction,v,g", "header"),
        (["C1,J1,down,0,1e-4,1e-4"], HEADER, "at least 2"),
        (["C1,J1,down,0,1e-4,1e-4", "C2,J1,down,-0.1,1e-5,1e-5"], HEADER, "chip_id"),
        (["C1,J1,sideways,0,1e-4,1e-4", "C1,J1,sideways,-0.1,1e-5,1e-5"], HEADER, "direction"),
        (["C1,J1,down,0,abc,1e-4", "C1,J1,down,-0.1,1e-5,1e-5"], HEADER, "non-numeric"),
        (["C1,J1,down,0,nan,1e-4", "C1,J1,down,-0.1,1e-5,1e-5"], HEADER, "finite"),
        (["C1,J1,down,-0.1,1e-4,1e-4", "C1,J1,down,0,1e-5,1e-5"], HEADER, "decrease"),
        (["C1,J1,down,0,-1e-4,1e-4", "C1,J1,down,-0.1,1e-5,1e-5"], HEADER, "greater than or equal"),
    ],
)
def test_malformed_trace(tmp_path, rows, header, message):
    path = _write_csv(tmp_path / "bad.csv", rows, header)
    with pytest.raises(TraceFormatError, match=message):
        read_trace(path)


def test_empty_file(tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text("", encoding="utf-8")
    with pytest.raises(TraceFormatError):
        read_trace(path)


def test_read_dir_skips_and_reports_malformed(tmp_path):
    for chip_id in ("C10", "C2", "C1"):
        write_trace(_make_trace(chip_id), tmp_path)
    _write_csv(tmp_path / "C3_J1_down.csv", ["C3,J1,down,0,1e-4,1e-4"])
    traces, malformed = read_trace_dir(tmp_path)
    assert [t.chip_id for t in traces] == ["C1", "C2", "C10"]
    assert malformed == ["C3_J1_down.csv"]


def test_read_dir_needs_directory(tmp_path):
    with pytest.raises(TraceFormatError):
        read_trace_dir(tmp_path / "missing")

"""Trace CSV files, their YAML sidecars and the ensemble index."""

from pathlib import Path

import numpy as np
import pandas as pd
import yaml
from natsort import natsorted
from pydantic import ValidationError

from hybrid_switch.definition.chip import ChipManifest, JunctionDevice, JunctionGeometry
from hybrid_switch.definition.trace import NoiseConfig, SweepDirection, SweepProtocol, SweepTrace
from hybrid_switch.errors import TraceFormatError
from hybrid_switch.logging import logger
from hybrid_switch.utils.pydantic import load_data, save_dict

TRACE_COLUMNS = ["chip_id", "junction_id", "direction", "v_g_volts", "g_siemens", "g_raw_siemens"]
FLOAT_FORMAT = "%.9e"
INDEX_FILENAME = "index.yaml"


def trace_stem(trace: SweepTrace, with_repeat: bool = False) -> str:
    repeat = f"_r{trace.repeat}" if with_repeat else ""
    return f"{trace.chip_id}_{trace.junction_id}{repeat}_{trace.direction.value}"


def trace_frame(trace: SweepTrace) -> pd.DataFrame:
    n = len(trace.samples)
    return pd.DataFrame(
        {
            "chip_id": [trace.chip_id] * n,
            "junction_id": [trace.junction_id] * n,
            "direction": [trace.direction.value] * n,
            "v_g_volts": trace.v_g,
            "g_siemens": trace.g,
            "g_raw_siemens": trace.g_raw,
        },
        columns=TRACE_COLUMNS,
    )


def write_trace(
    trace: SweepTrace,
    out_dir: Path | str,
    *,
    device: JunctionDevice | None = None,
    noise_config: NoiseConfig | None = None,
    with_repeat: bool = False,
) -> Path:
    """Write ``trace`` as CSV plus a sidecar with protocol, seed and device parameters."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = trace_stem(trace, with_repeat)
    csv_path = out_dir / f"{stem}.csv"
    trace_frame(trace).to_csv(csv_path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")

    sidecar = {
        "chip_id": trace.chip_id,
        "junction_id": trace.junction_id,
        "direction": trace.direction.value,
        "repeat": trace.repeat,
        "seed": trace.seed,
        "protocol": trace.protocol.model_dump(mode="json") if trace.protocol else None,
        "noise": noise_config.model_dump(mode="json") if noise_config else None,
    }
    if device is not None:
        sidecar["device"] = device.model_dump(mode="json")
    save_dict(sidecar, out_dir / f"{stem}.yaml")
    return csv_path


def write_index(out_dir: Path | str, chips: list[ChipManifest], files: list[Path], **run_info) -> Path:
    """Index of an ensemble run: run settings, per-junction failure modes and written files."""
    out_dir = Path(out_dir)
    index = {
        **run_info,
        "chips": {
            chip.chip_id: {device.junction_id: device.failure.value for device in chip.junctions}
            for chip in chips
        },
        "files": [path.name for path in natsorted(files, key=lambda p: p.name)],
    }
    path = out_dir / INDEX_FILENAME
    save_dict(index, path)
    return path


def _single_value(frame: pd.DataFrame, column: str, path: Path) -> str:
    values = frame[column].unique()
    if len(values) != 1:
        raise TraceFormatError(f"{path}: column {column!r} must hold one value, found {len(values)}")
    return str(values[0])


def read_trace(path: Path | str) -> SweepTrace:
    """Read and validate one trace CSV; the sidecar, when present, restores seed and protocol."""
    path = Path(path)
    try:
        frame = pd.read_csv(path, dtype={"chip_id": str, "junction_id": str, "direction": str})
    except (pd.errors.EmptyDataError, pd.errors.ParserError, UnicodeDecodeError) as e:
        raise TraceFormatError(f"{path}: unreadable CSV ({e})") from e

    if list(frame.columns) != TRACE_COLUMNS:
        raise TraceFormatError(
            f"{path}: header must be {','.join(TRACE_COLUMNS)}, got {','.join(map(str, frame.columns))}"
        )
    if len(frame) < 2:
        raise TraceFormatError(f"{path}: a trace needs at least 2 samples, got {len(frame)}")

    chip_id = _single_value(frame, "chip_id", path)
    junction_id = _single_value(frame, "junction_id", path)
    direction_text = _single_value(frame, "direction", path)
    try:
        direction = SweepDirection(direction_text)
    except ValueError as e:
        raise TraceFormatError(f"{path}: direction must be 'down' or 'up', got {direction_text!r}") from e

    try:
        numeric = frame[["v_g_volts", "g_siemens", "g_raw_siemens"]].apply(pd.to_numeric)
    except ValueError as e:
        raise TraceFormatError(f"{path}: non-numeric sample ({e})") from e
    if not np.isfinite(numeric.to_numpy()).all():
        raise TraceFormatError(f"{path}: samples must be finite numbers")

    extra = {}
    sidecar = path.with_suffix(".yaml")
    if sidecar.exists():
        try:
            meta = load_data(sidecar) or {}
            extra["seed"] = meta.get("seed")
            extra["repeat"] = meta.get("repeat", 0)
            if meta.get("protocol"):
                extra["protocol"] = SweepProtocol.model_validate(meta["protocol"])
        except (yaml.YAMLError, ValidationError, AttributeError) as e:
            raise TraceFormatError(f"{sidecar}: unreadable sidecar ({e})") from e

    try:
        return SweepTrace.from_arrays(
            chip_id,
            junction_id,
            direction,
            numeric["v_g_volts"],
            numeric["g_siemens"],
            numeric["g_raw_siemens"],
            **extra,
        )
    except ValidationError as e:
        raise TraceFormatError(f"{path}: {e.errors()[0]['msg']}") from e


def read_trace_dir(trace_dir: Path | str) -> tuple[list[SweepTrace], list[str]]:
    """All traces in ``trace_dir`` in natural order; malformed files are skipped and reported."""
    trace_dir = Path(trace_dir)
    if not trace_dir.is_dir():
        raise TraceFormatError(f"{trace_dir}: not a directory")
    traces: list[SweepTrace] = []
    malformed: list[str] = []
    for path in natsorted(trace_dir.glob("*.csv"), key=lambda p: p.name):
        try:
            traces.append(read_trace(path))
        except TraceFormatError as e:
            logger.warning(f"Skipping malformed trace file: {e}")
            malformed.append(path.name)
    logger.info(f"Read {len(traces)} traces from {trace_dir} ({len(malformed)} malformed)")
    return traces, malformed


def read_device_geometries(trace_dir: Path | str) -> dict[tuple[str, str], JunctionGeometry]:
    """Designed geometry of every device that has a sidecar in ``trace_dir``."""
    geometries: dict[tuple[str, str], JunctionGeometry] = {}
    for path in natsorted(Path(trace_dir).glob("*.yaml"), key=lambda p: p.name):
        if path.name == INDEX_FILENAME:
            continue
        try:
            meta = load_data(path) or {}
        except yaml.YAMLError:
            logger.warning(f"{path}: unreadable sidecar")
            continue
        if not isinstance(meta, dict) or not meta.get("device"):
            continue
        try:
            device = JunctionDevice.model_validate(meta["device"])
        except ValidationError as e:
            logger.warning(f"{path}: ignoring device block ({e.errors()[0]['msg']})")
            continue
        geometries[(str(meta.get("chip_id")), device.junction_id)] = device.geometry
    return geometries

"""Chip manifest file format (JSON) and material files.

The file schema uses engineering units (nm, um) with the unit in the key name; the in-memory
model is SI. Keys are written in a fixed order with fixed rounding, so one save normalizes
a manifest and later saves are byte-identical.
"""

import json
from pathlib import Path
from typing import Any, NoReturn

import yaml

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from hybrid_switch.definition.chip import (
    ChipManifest,
    FailureMode,
    JunctionCalibration,
    JunctionDevice,
    JunctionGeometry,
)
from hybrid_switch.definition.material import Material2DEG
from hybrid_switch.errors import ManifestError
from hybrid_switch.logging import logger

LENGTH_DECIMALS = 6

# domain field -> file key
_MATERIAL_KEYS = {
    "n_s": "n_s_per_m2",
    "mu_e": "mu_e_m2_per_Vs",
    "m_star_ratio": "m_star_ratio",
    "well_thickness": "well_thickness_nm",
    "well_depth": "well_depth_nm",
}


class _FileModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


class MaterialFields(_FileModel):
    n_s_per_m2: float
    mu_e_m2_per_Vs: float
    m_star_ratio: float
    well_thickness_nm: float = 30.0
    well_depth_nm: float = 120.0


class GeometryFields(_FileModel):
    L_c_nm: float
    W_c_nm: float
    L_J_um: float
    W_J_um: float


class CalibrationFields(_FileModel):
    v_pinch_star_V: float
    g_series_S: float
    hysteresis_amp: float = 0.0
    smear_width_V: float = 0.02


class JunctionFields(GeometryFields):
    id: str
    calibration: CalibrationFields
    failure: FailureMode = FailureMode.NONE
    fabricated: GeometryFields | None = None


class ManifestFields(_FileModel):
    chip_id: str
    temperature_K: float = 4.2
    fabrication_notes: str = ""
    material: MaterialFields
    junctions: list[JunctionFields] = Field(default_factory=list)


# -- conversion -------------------------------------------------------------------------


def _nm(value: float) -> float:
    return round(value * 1e9, LENGTH_DECIMALS)


def _um(value: float) -> float:
    return round(value * 1e6, LENGTH_DECIMALS)


def material_to_dict(material: Material2DEG) -> dict[str, Any]:
    return {
        "n_s_per_m2": material.n_s,
        "mu_e_m2_per_Vs": material.mu_e,
        "m_star_ratio": material.m_star_ratio,
        "well_thickness_nm": _nm(material.well_thickness),
        "well_depth_nm": _nm(material.well_depth),
    }


def _geometry_to_dict(geometry: JunctionGeometry) -> dict[str, Any]:
    return {
        "L_c_nm": _nm(geometry.L_c),
        "W_c_nm": _nm(geometry.W_c),
        "L_J_um": _um(geometry.L_J),
        "W_J_um": _um(geometry.W_J),
    }


def manifest_to_dict(chip: ChipManifest) -> dict[str, Any]:
    """Canonical, ordered dictionary form of ``chip``."""
    junctions = []
    for device in chip.junctions:
        entry = {"id": device.junction_id, **_geometry_to_dict(device.geometry)}
        entry["calibration"] = {
            "v_pinch_star_V": device.calibration.v_pinch_star,
            "g_series_S": device.calibration.g_series,
            "hysteresis_amp": device.calibration.hysteresis_amp,
            "smear_width_V": device.calibration.smear_width,
        }
        entry["failure"] = device.failure.value
        entry["fabricated"] = (
            _geometry_to_dict(device.fabricated) if device.fabricated is not None else None
        )
        junctions.append(entry)
    return {
        "chip_id": chip.chip_id,
        "temperature_K": chip.temperature,
        "fabrication_notes": chip.fabrication_notes,
        "material": material_to_dict(chip.material),
        "junctions": junctions,
    }


def _material_from_fields(fields: MaterialFields) -> Material2DEG:
    return Material2DEG(
        n_s=fields.n_s_per_m2,
        mu_e=fields.mu_e_m2_per_Vs,
        m_star_ratio=fields.m_star_ratio,
        well_thickness=fields.well_thickness_nm / 1e9,
        well_depth=fields.well_depth_nm / 1e9,
    )


def _geometry_from_fields(fields: GeometryFields) -> JunctionGeometry:
    return JunctionGeometry(
        L_c=fields.L_c_nm / 1e9,
        W_c=fields.W_c_nm / 1e9,
        L_J=fields.L_J_um / 1e6,
        W_J=fields.W_J_um / 1e6,
    )


# -- error location ---------------------------------------------------------------------


def _line_at(text: str, position: int) -> int:
    return text.count("\n", 0, max(position, 0)) + 1


def _locate(text: str, loc: tuple) -> int | None:
    """Best-effort 1-based line of the manifest field addressed by a pydantic ``loc``."""
    position = 0
    found = None
    previous = None
    for part in loc:
        if isinstance(part, int) and previous == "junctions":
            # each junction object starts with its "id" key
            for _ in range(part + 1):
                hit = text.find('"id"', position)
                if hit < 0:
                    return found
                position = hit + 1
            found = _line_at(text, position - 1)
        elif isinstance(part, str):
            hit = text.find(f'"{part}"', position)
            if hit < 0:
                return found
            position = hit + 1
            found = _line_at(text, hit)
        previous = part
    return found


def _field_path(loc: tuple) -> str:
    path = ""
    for part in loc:
        if isinstance(part, int):
            path += f"[{part}]"
        else:
            path += f".{part}" if path else str(part)
    return path


def _raise_from_validation(error: ValidationError, text: str, prefix: tuple = ()) -> NoReturn:
    first = error.errors()[0]
    loc = prefix + tuple(first["loc"])
    raise ManifestError(first["msg"], field=_field_path(loc) or None, line=_locate(text, loc)) from error


# -- public API -------------------------------------------------------------------------


def parse_manifest(text: str) -> ChipManifest:
    """Parse and validate manifest JSON text."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ManifestError(f"invalid JSON: {e.msg}", line=e.lineno) from e

    try:
        fields = ManifestFields.model_validate(data)
    except ValidationError as e:
        _raise_from_validation(e, text)

    try:
        material = _material_from_fields(fields.material)
    except ValidationError as e:
        first = e.errors()[0]
        name = _MATERIAL_KEYS.get(str(first["loc"][0]), str(first["loc"][0]))
        raise ManifestError(
            first["msg"], field=f"material.{name}", line=_locate(text, ("material", name))
        ) from e

    junctions = []
    for index, entry in enumerate(fields.junctions):
        try:
            junctions.append(
                JunctionDevice(
                    junction_id=entry.id,
                    geometry=_geometry_from_fields(entry),
                    calibration=JunctionCalibration(
                        v_pinch_star=entry.calibration.v_pinch_star_V,
                        g_series=entry.calibration.g_series_S,
                        hysteresis_amp=entry.calibration.hysteresis_amp,
                        smear_width=entry.calibration.smear_width_V,
                    ),
                    failure=entry.failure,
                    fabricated=(
                        _geometry_from_fields(entry.fabricated) if entry.fabricated else None
                    ),
                )
            )
        except ValidationError as e:
            raise ManifestError(
                e.errors()[0]["msg"],
                field=f"junctions[{index}]",
                line=_locate(text, ("junctions", index)),
            ) from e

    try:
        return ChipManifest(
            chip_id=fields.chip_id,
            junctions=junctions,
            material=material,
            temperature=fields.temperature_K,
            fabrication_notes=fields.fabrication_notes,
        )
    except ValidationError as e:
        _raise_from_validation(e, text)


def dump_manifest(chip: ChipManifest) -> str:
    return json.dumps(manifest_to_dict(chip), indent=2, ensure_ascii=False) + "\n"


def load_manifest(path: Path | str) -> ChipManifest:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    try:
        chip = parse_manifest(text)
    except ManifestError as e:
        raise ManifestError(f"{path}: {e.detail}", field=e.field, line=e.line) from e
    logger.debug(f"Loaded manifest {chip.chip_id} from {path}")
    return chip


def save_manifest(chip: ChipManifest, path: Path | str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_manifest(chip), encoding="utf-8")
    logger.debug(f"Saved manifest {chip.chip_id} to {path}")


def load_material(path: Path | str) -> Material2DEG:
    """Material file: the manifest ``material`` block on its own (YAML or JSON)."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        raise ManifestError(f"{path}: unreadable material file", line=mark.line + 1 if mark else None) from e
    try:
        fields = MaterialFields.model_validate(data or {})
        return _material_from_fields(fields)
    except ValidationError as e:
        first = e.errors()[0]
        name = _MATERIAL_KEYS.get(str(first["loc"][0]), str(first["loc"][0])) if first["loc"] else None
        line = None
        if name is not None:
            for number, content in enumerate(text.splitlines(), start=1):
                if content.lstrip().startswith((f"{name}:", f'"{name}"')):
                    line = number
                    break
        raise ManifestError(f"{path}: {first['msg']}", field=name, line=line) from e

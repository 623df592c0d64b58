"""Table 1 chip layout and calibration draws."""

import math

from hybrid_switch.config import (
    CHIPS_PER_WAFER,
    DEFAULT_TEMPERATURE_K,
    CalibrationPrior,
    calibration_prior,
)
from hybrid_switch.definition.chip import (
    ChipManifest,
    JunctionCalibration,
    JunctionDevice,
    JunctionGeometry,
)
from hybrid_switch.definition.material import Material2DEG
from hybrid_switch.logging import logger
from hybrid_switch.utils.seeding import stream_rng

# Designed dimensions of the eight junctions on every chip:
# junction id -> (L_c nm, W_c nm, L_J um, W_J um)
DESIGNED_DIMENSIONS: dict[str, tuple[float, float, float, float]] = {
    "J1": (400, 400, 1.4, 5),
    "J2": (400, 300, 1.4, 5),
    "J3": (400, 200, 1.4, 5),
    "J4": (400, 100, 1.4, 5),
    "J5": (400, 100, 1.4, 5),
    "J6": (400, 100, 1.4, 5),
    "J7": (400, 100, 1.4, 5),
    "J8": (400, 100, 3.2, 5),
}

DEFAULT_FABRICATION_NOTES = (
    "In0.75Ga0.25As 2DEG, 30 nm well 120 nm below surface; wet-etched mesa; sputtered Nb leads; "
    "CVD SiO2 gate dielectric; Ti/Au split gates"
)


def geometry_from_table(L_c_nm: float, W_c_nm: float, L_J_um: float, W_J_um: float) -> JunctionGeometry:
    # dividing by exact powers of ten keeps manifest round trips exact
    return JunctionGeometry(L_c=L_c_nm / 1e9, W_c=W_c_nm / 1e9, L_J=L_J_um / 1e6, W_J=W_J_um / 1e6)


def designed_geometry(junction_id: str) -> JunctionGeometry:
    return geometry_from_table(*DESIGNED_DIMENSIONS[junction_id])


def nominal_calibration(
    geometry: JunctionGeometry, prior: CalibrationPrior = calibration_prior
) -> JunctionCalibration:
    """Mean calibration of a junction class; longer junctions pinch off slightly earlier."""
    L_J_um = round(geometry.L_J * 1e6, 6)
    is_long = L_J_um >= prior.long_junction_um
    return JunctionCalibration(
        v_pinch_star=prior.v_pinch_mean + prior.v_pinch_length_slope * (L_J_um - prior.reference_length_um),
        g_series=prior.g_series_long if is_long else prior.g_series_short,
        hysteresis_amp=prior.hysteresis_amp_long if is_long else prior.hysteresis_amp_short,
        smear_width=prior.smear_width,
    )


def draw_calibration(
    geometry: JunctionGeometry,
    seed: int,
    chip_id: str,
    junction_id: str,
    prior: CalibrationPrior = calibration_prior,
) -> JunctionCalibration:
    """Calibration scattered around the nominal one; deterministic in (seed, chip, junction)."""
    nominal = nominal_calibration(geometry, prior)
    rng = stream_rng(seed, "calibration", chip_id, junction_id)
    v_pinch = nominal.v_pinch_star + prior.v_pinch_sd * rng.standard_normal()
    g_series = nominal.g_series * math.exp(prior.g_series_log_sd * rng.standard_normal())
    return nominal.model_copy(
        update={"v_pinch_star": min(v_pinch, -0.05), "g_series": g_series}
    )


def default_chip(
    chip_id: str,
    material: Material2DEG,
    *,
    temperature: float = DEFAULT_TEMPERATURE_K,
    seed: int | None = None,
    prior: CalibrationPrior = calibration_prior,
) -> ChipManifest:
    """Chip with the Table 1 geometry; calibrations are nominal unless ``seed`` is given."""
    junctions = []
    for junction_id in DESIGNED_DIMENSIONS:
        geometry = designed_geometry(junction_id)
        if seed is None:
            calibration = nominal_calibration(geometry, prior)
        else:
            calibration = draw_calibration(geometry, seed, chip_id, junction_id, prior)
        junctions.append(
            JunctionDevice(junction_id=junction_id, geometry=geometry, calibration=calibration)
        )
    return ChipManifest(
        chip_id=chip_id,
        junctions=junctions,
        material=material,
        temperature=temperature,
        fabrication_notes=DEFAULT_FABRICATION_NOTES,
    )


def wafer_chip_ids(n_chips: int = CHIPS_PER_WAFER, wafer_index: int | None = None) -> list[str]:
    if wafer_index is None:
        return [f"C{i}" for i in range(1, n_chips + 1)]
    return [f"W{wafer_index:02d}-C{i}" for i in range(1, n_chips + 1)]


def build_wafer(
    material: Material2DEG,
    seed: int,
    *,
    n_chips: int = CHIPS_PER_WAFER,
    wafer_index: int | None = None,
    temperature: float = DEFAULT_TEMPERATURE_K,
    prior: CalibrationPrior = calibration_prior,
) -> list[ChipManifest]:
    """Chips of one wafer with calibrations drawn from ``prior``."""
    return [
        default_chip(chip_id, material, temperature=temperature, seed=seed, prior=prior)
        for chip_id in wafer_chip_ids(n_chips, wafer_index)
    ]


def build_wafers(
    material: Material2DEG,
    seed: int,
    n_wafers: int,
    *,
    n_chips: int = CHIPS_PER_WAFER,
    temperature: float = DEFAULT_TEMPERATURE_K,
    prior: CalibrationPrior = calibration_prior,
) -> list[ChipManifest]:
    if n_wafers == 1:
        return build_wafer(material, seed, n_chips=n_chips, temperature=temperature, prior=prior)
    chips: list[ChipManifest] = []
    for wafer_index in range(1, n_wafers + 1):
        chips.extend(
            build_wafer(
                material,
                seed,
                n_chips=n_chips,
                wafer_index=wafer_index,
                temperature=temperature,
                prior=prior,
            )
        )
    logger.debug(f"Built {len(chips)} chips across {n_wafers} wafers (seed={seed})")
    return chips

"""Chip array data model helpers: designed layout, addressing, manifests and failures."""

from hybrid_switch.chip.addressing import address
from hybrid_switch.chip.defaults import (
    DESIGNED_DIMENSIONS,
    build_wafer,
    build_wafers,
    default_chip,
    draw_calibration,
    nominal_calibration,
    designed_geometry,
)
from hybrid_switch.chip.failures import load_failure_config, sample_failures
from hybrid_switch.chip.manifest import (
    dump_manifest,
    load_manifest,
    load_material,
    manifest_to_dict,
    parse_manifest,
    save_manifest,
)

__all__ = [
    "DESIGNED_DIMENSIONS",
    "address",
    "build_wafer",
    "build_wafers",
    "default_chip",
    "draw_calibration",
    "nominal_calibration",
    "designed_geometry",
    "load_failure_config",
    "sample_failures",
    "dump_manifest",
    "load_manifest",
    "load_material",
    "manifest_to_dict",
    "parse_manifest",
    "save_manifest",
]

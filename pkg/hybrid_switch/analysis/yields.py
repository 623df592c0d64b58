"""Yield tables: switching devices over measured devices, per group and in total."""

from collections.abc import Iterable, Sequence
from pathlib import Path

from natsort import natsorted
from pydantic import BaseModel, Field, ValidationError

from hybrid_switch.config import PUBLISHED_TABLES_PATH, class_label
from hybrid_switch.definition.metrics import TraceMetrics, YieldRecord, YieldRow, YieldTable
from hybrid_switch.errors import ConfigError
from hybrid_switch.utils.pydantic import load_data
from hybrid_switch.utils.rounding import percent

# decimals of the printed yield percentages
CHIP_DECIMALS = 0
CLASS_DECIMALS = 1
TOTAL_DECIMALS = 2

TOTAL_KEY = "Total"


def _row(group_key: str, records: list[YieldRecord], ndigits: int) -> YieldRow:
    measured = [r for r in records if r.was_measured]
    switching = sum(r.is_switching for r in measured)
    return YieldRow(
        group_key=group_key,
        switching_count=switching,
        measured_count=len(measured),
        yield_percent=percent(switching, len(measured), ndigits),
    )


def yield_table(
    records: Iterable[YieldRecord],
    ndigits: int = CLASS_DECIMALS,
    total_ndigits: int = TOTAL_DECIMALS,
) -> YieldTable:
    """Per-group and total yields. Unmeasured devices are left out of the denominator; a
    group with nothing measured has an undefined (None) yield.
    """
    records = list(records)
    groups: dict[str, list[YieldRecord]] = {}
    for record in records:
        groups.setdefault(record.group_key, []).append(record)
    return YieldTable(
        rows=[_row(key, groups[key], ndigits) for key in natsorted(groups)],
        total=_row(TOTAL_KEY, records, total_ndigits),
    )


def records_from_counts(
    group_key: str, switching: int, measured: int, fabricated: int | None = None
) -> list[YieldRecord]:
    """Expand counts into device records; ``fabricated - measured`` devices were not measured."""
    if not 0 <= switching <= measured:
        raise ConfigError(f"group {group_key!r}: need 0 <= switching <= measured")
    fabricated = measured if fabricated is None else fabricated
    if fabricated < measured:
        raise ConfigError(f"group {group_key!r}: more devices measured than fabricated")
    return (
        [YieldRecord(group_key=group_key, is_switching=True)] * switching
        + [YieldRecord(group_key=group_key, is_switching=False)] * (measured - switching)
        + [YieldRecord(group_key=group_key, is_switching=False, was_measured=False)]
        * (fabricated - measured)
    )


def device_class_label(device: TraceMetrics) -> str:
    if device.L_J_um is None or device.W_c_nm is None:
        return "unknown"
    return class_label((device.L_J_um, device.W_c_nm))


def chip_records(devices: Sequence[TraceMetrics]) -> list[YieldRecord]:
    return [YieldRecord(group_key=d.chip_id, is_switching=d.is_switching) for d in devices]


def class_records(devices: Sequence[TraceMetrics]) -> list[YieldRecord]:
    return [YieldRecord(group_key=device_class_label(d), is_switching=d.is_switching) for d in devices]


# -- transcribed tables -----------------------------------------------------------------


class ClassCount(BaseModel):
    L_J_um: float
    W_c_nm: float
    switching: int = Field(ge=0)
    measured: int = Field(ge=0)
    yield_percent: float | None = None

    @property
    def label(self) -> str:
        return class_label((self.L_J_um, self.W_c_nm))


class ChipCount(BaseModel):
    chip_id: str
    switching: int = Field(ge=0)
    measured: int = Field(ge=0)
    fabricated: int | None = None
    yield_percent: float | None = None


class PublishedTables(BaseModel):
    """Designed dimensions and yield counts of the fabricated batch."""

    designed_dimensions: dict[str, tuple[float, float, float, float]] = Field(default_factory=dict)
    class_counts: list[ClassCount] = Field(default_factory=list)
    chip_counts: list[ChipCount] = Field(default_factory=list)
    chip_total_yield_percent: float | None = None


def load_published_tables(path: Path | str = PUBLISHED_TABLES_PATH) -> PublishedTables:
    try:
        return PublishedTables.model_validate(load_data(path) or {})
    except ValidationError as e:
        raise ConfigError(f"{path}: {e.errors()[0]['msg']}") from e


def fixture_yields(tables: PublishedTables) -> dict[str, YieldTable]:
    """Yield tables computed from count fixtures instead of traces."""
    result = {}
    if tables.chip_counts:
        records = []
        for chip in tables.chip_counts:
            records += records_from_counts(chip.chip_id, chip.switching, chip.measured, chip.fabricated)
        result["by_chip"] = yield_table(records, ndigits=CHIP_DECIMALS)
    if tables.class_counts:
        records = []
        for row in tables.class_counts:
            records += records_from_counts(row.label, row.switching, row.measured)
        result["by_class"] = yield_table(records, ndigits=CLASS_DECIMALS)
    return result

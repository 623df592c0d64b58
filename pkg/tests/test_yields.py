import pytest

from hybrid_switch.analysis import fixture_yields, load_published_tables, records_from_counts, yield_table
from hybrid_switch.analysis.yields import chip_records, class_records
from hybrid_switch.chip import DESIGNED_DIMENSIONS
from hybrid_switch.definition import TraceMetrics, YieldRecord
from hybrid_switch.errors import ConfigError
from hybrid_switch.utils.rounding import format_percent, percent, round_half_up


@pytest.fixture
def tables():
    return load_published_tables()


def test_round_half_up():
    assert round_half_up(37.5, 0) == 38
    assert round_half_up(87.5, 0) == 88
    assert round_half_up(85.71428571, 1) == 85.7
    assert round_half_up(55.55555556, 1) == 55.6
    assert round_half_up(74.24242424, 2) == 74.24


def test_percent_of_nothing_is_undefined():
    assert percent(0, 0, 1) is None
    assert format_percent(None, 1) == "n/a"
    assert format_percent(75.0, 1) == "75.0"


def test_designed_dimensions_fixture_matches_layout(tables):
    assert {key: tuple(value) for key, value in tables.designed_dimensions.items()} == DESIGNED_DIMENSIONS


def test_yield_by_chip(tables):
    table = fixture_yields(tables)["by_chip"]
    assert [(row.group_key, row.yield_percent) for row in table.rows] == [
        ("C1", 0.0),
        ("C2", 86.0),
        ("C3", 38.0),
        ("C4", 88.0),
        ("C7", 75.0),
        ("C8", 100.0),
        ("D1", 100.0),
        ("D6", 100.0),
        ("D8", 100.0),
        ("D9", 100.0),
    ]
    assert (table.total.switching_count, table.total.measured_count) == (49, 66)
    assert table.total.yield_percent == 74.24
    assert table.total.yield_percent == tables.chip_total_yield_percent


def test_yield_by_class(tables):
    table = fixture_yields(tables)["by_class"]
    assert {row.group_key: row.yield_percent for row in table.rows} == {
        "1.4um/400nm": 85.7,
        "1.4um/300nm": 85.7,
        "1.4um/200nm": 75.0,
        "1.4um/100nm": 74.3,
        "3.2um/100nm": 55.6,
    }
    assert table.row("3.2um/100nm").measured_count == 9


def test_fixture_percentages_agree_with_counts(tables):
    for row in tables.class_counts:
        assert percent(row.switching, row.measured, 1) == row.yield_percent
    for chip in tables.chip_counts:
        assert percent(chip.switching, chip.measured, 0) == chip.yield_percent


def test_unmeasured_devices_leave_the_denominator():
    records = records_from_counts("C5", switching=3, measured=4, fabricated=8)
    table = yield_table(records, ndigits=0)
    assert table.row("C5").measured_count == 4
    assert table.row("C5").yield_percent == 75.0


def test_group_without_measurements_is_undefined():
    records = [YieldRecord(group_key="C6", is_switching=False, was_measured=False)] * 8
    table = yield_table(records + records_from_counts("C7", 6, 8), ndigits=0)
    assert table.row("C6").yield_percent is None
    assert table.row("C6").measured_count == 0
    assert table.total.yield_percent == 75.0


def test_records_from_counts_rejects_inconsistent_counts():
    with pytest.raises(ConfigError):
        records_from_counts("C1", switching=9, measured=8)
    with pytest.raises(ConfigError):
        records_from_counts("C1", switching=1, measured=8, fabricated=7)


def test_device_records_group_by_chip_and_class():
    devices = [
        TraceMetrics(
            chip_id="C2",
            junction_id=junction_id,
            v_pinch=-0.5,
            g_on=1e-4,
            g_off=0.0,
            is_switching=True,
            off_threshold=1e-6,
            L_J_um=L_J_um,
            W_c_nm=W_c_nm,
        )
        for junction_id, (_, W_c_nm, L_J_um, _) in DESIGNED_DIMENSIONS.items()
    ]
    by_chip = yield_table(chip_records(devices), ndigits=0)
    assert by_chip.row("C2").yield_percent == 100.0
    by_class = yield_table(class_records(devices))
    assert by_class.row("1.4um/100nm").measured_count == 4
    assert by_class.row("3.2um/100nm").measured_count == 1

from pathlib import Path
import sys

import pytest

sys.path.append(str(Path(__file__).resolve().parents[1]))

from hybrid_switch.chip import default_chip
from hybrid_switch.definition import ChipManifest, Material2DEG, NoiseConfig
from hybrid_switch.physics import DARK

REPO_ROOT = Path(__file__).resolve().parents[1]


@pytest.fixture
def dark() -> Material2DEG:
    return DARK


@pytest.fixture
def chip(dark) -> ChipManifest:
    """Healthy chip with nominal calibrations."""
    return default_chip("C1", dark)


@pytest.fixture
def quiet() -> NoiseConfig:
    return NoiseConfig.off()


@pytest.fixture
def materials_dir() -> Path:
    return REPO_ROOT / "materials"

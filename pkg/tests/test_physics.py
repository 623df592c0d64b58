import math

import pytest
import scipy.constants

from hybrid_switch.definition import CODATA_2018, Material2DEG
from hybrid_switch.errors import PhysicsDomainError
from hybrid_switch.physics import (
    DARK,
    ILLUMINATED,
    classify_regime,
    coherence_length,
    fermi_energy,
    fermi_velocity,
    fermi_wavevector,
    max_modes,
    mean_free_path,
    transport_quantities,
)


def test_constants_match_si_definitions():
    assert CODATA_2018.e_charge == scipy.constants.e
    assert CODATA_2018.k_B == scipy.constants.k
    assert CODATA_2018.hbar == pytest.approx(scipy.constants.hbar, rel=1e-9)
    assert CODATA_2018.G_q == pytest.approx(7.748091729e-5, rel=1e-9)


def test_fermi_wavevector_dark():
    assert fermi_wavevector(2.24e15) == pytest.approx(1.18635e8, rel=1e-4)


def test_fermi_velocity_dark():
    k_F = fermi_wavevector(DARK.n_s)
    assert fermi_velocity(k_F, DARK.m_star_ratio) == pytest.approx(3.52e5, rel=1e-2)


def test_fermi_energy_is_half_m_v_squared():
    k_F = fermi_wavevector(DARK.n_s)
    v_F = fermi_velocity(k_F, DARK.m_star_ratio)
    m_star = DARK.m_star_ratio * CODATA_2018.m_e
    assert fermi_energy(k_F, DARK.m_star_ratio) == pytest.approx(0.5 * m_star * v_F**2, rel=1e-12)


def test_mean_free_path_dark():
    l_e = mean_free_path(DARK.mu_e, DARK.n_s)
    assert l_e == pytest.approx(1.95e-6, rel=1e-2)
    # the quoted "about 2 um"
    assert l_e == pytest.approx(2e-6, rel=5e-2)


@pytest.mark.parametrize(
    "temperature, expected",
    [(4.2, 1.02e-7), (2.1, 2.04e-7)],
)
def test_coherence_length(temperature, expected):
    v_F = fermi_velocity(fermi_wavevector(DARK.n_s), DARK.m_star_ratio)
    assert coherence_length(v_F, temperature) == pytest.approx(expected, rel=1e-2)


def test_coherence_length_scales_inversely_with_temperature():
    assert coherence_length(3.5e5, 1.0) == pytest.approx(2 * coherence_length(3.5e5, 2.0))


@pytest.mark.parametrize(
    "W_c_nm, modes",
    [(400, 15), (300, 11), (200, 7), (100, 3)],
)
def test_max_modes_for_table_widths(W_c_nm, modes):
    assert max_modes(fermi_wavevector(DARK.n_s), W_c_nm * 1e-9) == modes


def test_max_modes_matches_brute_force_count():
    k_F = fermi_wavevector(DARK.n_s)
    for W_c in (50e-9, 137e-9, 251e-9, 399e-9):
        count = sum(1 for n in range(1, 100) if n * math.pi / W_c < k_F)
        assert max_modes(k_F, W_c) == count


def test_classify_regime_clean_and_ballistic():
    q = transport_quantities(DARK, 4.2)
    near = classify_regime(q.l_e, q.zeta_N, 400e-9)
    assert near.is_clean
    assert near.is_ballistic
    # 3 * 1.4 um exceeds l_e
    far = classify_regime(q.l_e, q.zeta_N, 1.4e-6)
    assert far.is_clean
    assert not far.is_ballistic


def test_classify_regime_factor_is_configurable():
    assert classify_regime(2e-6, 1e-7, 1e-6, ballistic_factor=2).is_ballistic
    assert not classify_regime(2e-6, 1e-7, 1e-6, ballistic_factor=2.5).is_ballistic


def test_illuminated_preset_has_longer_mean_free_path():
    assert ILLUMINATED.n_s > DARK.n_s
    q_dark = transport_quantities(DARK)
    q_lit = transport_quantities(ILLUMINATED)
    assert q_lit.l_e > q_dark.l_e
    assert q_lit.k_F > q_dark.k_F


@pytest.mark.parametrize(
    "call",
    [
        lambda: fermi_wavevector(0.0),
        lambda: fermi_wavevector(-1e15),
        lambda: coherence_length(3.5e5, 0.0),
        lambda: mean_free_path(-1.0, 2.24e15),
        lambda: max_modes(1e8, 0.0),
        lambda: classify_regime(1e-6, 1e-7, -1.0),
        lambda: transport_quantities(DARK, temperature=-4.2),
    ],
)
def test_domain_errors(call):
    with pytest.raises(PhysicsDomainError):
        call()


def test_material_rejects_unphysical_mass_ratio():
    with pytest.raises(ValueError):
        Material2DEG(n_s=2.24e15, mu_e=25.0, m_star_ratio=1.5)


def test_fermi_wavevector_unit_case_and_illuminated():
    assert fermi_wavevector(1 / (2 * math.pi)) == pytest.approx(1.0)
    assert fermi_wavevector(2.28e15) == pytest.approx(1.197e8, rel=1e-3)


def test_illuminated_mean_free_path():
    assert mean_free_path(25.8, 2.28e15) == pytest.approx(2.03e-6, rel=1e-2)


def test_mean_free_path_agrees_with_fermi_wavevector():
    for mu_e, n_s in [(25.0, 2.24e15), (3.1, 7e14), (120.0, 5e16)]:
        expected = CODATA_2018.hbar * mu_e * fermi_wavevector(n_s) / CODATA_2018.e_charge
        assert mean_free_path(mu_e, n_s) == pytest.approx(expected, rel=1e-12)


def test_linear_in_first_argument():
    assert mean_free_path(12.5, 2.24e15) == pytest.approx(mean_free_path(25.0, 2.24e15) / 2)
    assert fermi_velocity(2e8, 0.039) == pytest.approx(2 * fermi_velocity(1e8, 0.039))
    assert fermi_velocity(0.0, 0.039) == 0.0


def test_clean_limit_is_strict():
    assert not classify_regime(1e-7, 1e-7, 1e-8).is_clean


def test_classify_regime_is_scale_invariant():
    base = classify_regime(1.95e-6, 1.02e-7, 4e-7)
    for scale in (1e-3, 7.0, 1e4):
        scaled = classify_regime(1.95e-6 * scale, 1.02e-7 * scale, 4e-7 * scale)
        assert (scaled.is_clean, scaled.is_ballistic) == (base.is_clean, base.is_ballistic)


def test_no_mode_fits_a_narrow_channel():
    k_F = fermi_wavevector(DARK.n_s)
    assert max_modes(k_F, 0.9 * math.pi / k_F) == 0


def test_max_modes_is_monotone():
    k_F = fermi_wavevector(DARK.n_s)
    counts = [max_modes(k_F, w * 1e-9) for w in range(10, 500, 7)]
    assert counts == sorted(counts)

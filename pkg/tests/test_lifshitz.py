"""Lifshitz engine: reflections, zero-frequency dispatch, summation,
log-space deep-suppression path, and frozen regression values.

The frozen numbers were produced by this engine at tol = 1e-8 and are
pinned against accidental drift; physics-level validation lives in
test_acceptance.py where the engine is checked against independent
closed forms.
"""

import math

import numpy as np
import pytest

from filmcasimir.constants import EV_TO_RAD_S, K_B
from filmcasimir.lifshitz import (
    LayeredConfig,
    ValidationError,
    free_energy,
    matsubara_term,
    nonrelativistic_free_energy,
    pressure,
    reflection_coefficients,
    zero_frequency_term,
    zero_temperature_energy,
)
from filmcasimir.materials import (
    Drude,
    Plasma,
    RelaxationLaw,
    Vacuum,
    sapphire,
)
from filmcasimir.specfun import ZETA3

NM = 1e-9
WP = 9.0 * EV_TO_RAD_S
LAW = RelaxationLaw(0.035 * EV_TO_RAD_S)
TOL = 1e-8


def gold_film(which, a_nm, plate=None, T=300.0):
    film = Drude(WP, LAW) if which == "drude" else Plasma(WP)
    plate = plate or Vacuum()
    return LayeredConfig(film, a_nm * NM, T, plate, plate)


# ---------------------------------------------------------------------------
# Construction and validation
# ---------------------------------------------------------------------------

def test_config_validation():
    with pytest.raises(ValidationError):
        LayeredConfig(Plasma(WP), -1.0, 300.0)
    with pytest.raises(ValidationError):
        LayeredConfig(Plasma(WP), 1e-7, 0.0)
    with pytest.raises(ValidationError):
        LayeredConfig(Plasma(WP), math.nan, 300.0)


def test_thick_film_requires_log_space():
    cfg = gold_film("plasma", 60000.0)
    with pytest.raises(ValidationError, match="log_space"):
        free_energy(cfg, TOL)
    with pytest.raises(ValidationError, match="log_space"):
        pressure(cfg, TOL)


# ---------------------------------------------------------------------------
# Reflection coefficients
# ---------------------------------------------------------------------------

def test_reflection_frozen_values():
    cfg = gold_film("drude", 100.0)
    rtl, rtr, tel, ter = reflection_coefficients(cfg, 1, np.array([1.0]))
    assert float(rtl[0]) == pytest.approx(-0.9935107412471111, rel=1e-12)
    assert float(tel[0]) == pytest.approx(0.783199502889401, rel=1e-12)
    # symmetric plates: both sides identical
    assert float(rtl[0]) == float(rtr[0]) and float(tel[0]) == float(ter[0])


def test_reflection_ideal_metal_limit():
    # omega_p -> inf drives r_TM -> -1 and r_TE -> +1
    cfg = LayeredConfig(Drude(WP * 1e5, LAW), 100.0 * NM, 300.0)
    u = np.array([0.5, 1.0, 5.0])
    rtl, _, tel, _ = reflection_coefficients(cfg, 1, u)
    assert np.max(np.abs(rtl + 1.0)) < 1e-3
    assert np.max(np.abs(tel - 1.0)) < 1e-3


def test_reflection_bounded():
    cfg = gold_film("drude", 55.0)
    u = np.logspace(-2, 2, 40)
    for l in (1, 5, 50):
        rtl, _, tel, _ = reflection_coefficients(cfg, l, u)
        assert np.all(np.abs(rtl) <= 1.0) and np.all(np.abs(tel) <= 1.0)


# ---------------------------------------------------------------------------
# Zero-frequency term
# ---------------------------------------------------------------------------

def test_l0_drude_film_is_universal_zeta3():
    # Drude film: TM closed form gives -zeta(3)/2 for ANY plates, TE = 0
    for plate in (Vacuum(), sapphire()):
        cfg = gold_film("drude", 100.0, plate)
        tm, te, _ = zero_frequency_term(cfg, 1e-12)
        assert tm == pytest.approx(-ZETA3 / 2.0, rel=1e-12)
        assert te == 0.0


def test_l0_plasma_film_has_te_contribution():
    cfg = gold_film("plasma", 100.0)
    tm, te, _ = zero_frequency_term(cfg, 1e-12)
    assert te < 0.0
    assert abs(te) < abs(tm)


def test_matsubara_terms_negative_and_decaying():
    cfg = gold_film("drude", 100.0)
    prev = None
    for l in (1, 2, 4, 8, 16):
        r = matsubara_term(cfg, l, 1e-11)
        assert r.tm < 0.0 and r.te <= 0.0
        mag = abs(r.tm + r.te)
        if prev is not None:
            assert mag < prev
        prev = mag


# ---------------------------------------------------------------------------
# Frozen engine values (tol = 1e-8, Au omega_p = 9 eV, gamma = 0.035 eV)
# ---------------------------------------------------------------------------

ENGINE_F = {
    ("drude", 50, "vac"): -1.2334594726615892e-07,
    ("drude", 100, "vac"): -1.0294908410344798e-08,
    ("drude", 200, "vac"): -2.4763042852175412e-09,
    ("plasma", 50, "vac"): -8.060354842628758e-08,
    ("plasma", 100, "vac"): -3.342950137803067e-10,
    ("plasma", 200, "vac"): -1.487244920939031e-14,
    ("drude", 100, "sap"): -1.0170426341324479e-08,
    ("plasma", 100, "sap"): -2.193435850371857e-10,
}

ENGINE_P = {
    ("drude", 50, "vac"): -11.360740801429825,
    ("drude", 100, "vac"): -0.23769400112951486,
    ("plasma", 50, "vac"): -9.562130911773401,
    ("plasma", 100, "vac"): -0.03486213373437724,
    ("plasma", 200, "vac"): -1.4527144536797184e-06,
    ("plasma", 50, "sap"): -5.66855240935244,
    ("plasma", 100, "sap"): -0.022603438314107088,
}


@pytest.mark.parametrize("key", sorted(ENGINE_F))
def test_free_energy_frozen(key):
    which, a_nm, plate = key
    cfg = gold_film(which, a_nm, sapphire() if plate == "sap" else Vacuum())
    r = free_energy(cfg, TOL)
    assert r.value == pytest.approx(ENGINE_F[key], rel=1e-6)
    # decomposition is exact and the truncation estimate honors tol
    assert r.value == pytest.approx(r.l0_tm + r.l0_te + r.tail_l_ge_1,
                                    rel=1e-14)
    assert r.truncation_error <= 10.0 * TOL * abs(r.value)
    assert r.log_magnitude.value() == pytest.approx(r.value, rel=1e-12)


@pytest.mark.parametrize("key", sorted(ENGINE_P))
def test_pressure_frozen(key):
    which, a_nm, plate = key
    cfg = gold_film(which, a_nm, sapphire() if plate == "sap" else Vacuum())
    r = pressure(cfg, TOL)
    assert r.value == pytest.approx(ENGINE_P[key], rel=1e-6)
    assert r.value == pytest.approx(r.l0 + r.tail_l_ge_1, rel=1e-14)


def test_l0_split_frozen_plasma_100nm():
    r = free_energy(gold_film("plasma", 100.0), TOL)
    assert r.l0_tm == pytest.approx(-9.11196901181315e-12, rel=1e-9)
    assert r.l0_te == pytest.approx(-2.263728397976218e-12, rel=1e-9)
    assert r.l_max_used == 124


def test_l_max_grows_with_tighter_tol():
    cfg = gold_film("drude", 100.0)
    assert free_energy(cfg, TOL).l_max_used == 105
    assert free_energy(cfg, 1e-5).l_max_used <= 105


def test_drude_l0_equals_classical_prefactor():
    # l = 0 free-energy piece in J/m^2 carries kT/(8 pi a^2) times -zeta3/2
    a = 100.0 * NM
    r = free_energy(gold_film("drude", 100.0), TOL)
    want = -K_B * 300.0 * ZETA3 / (16.0 * math.pi * a * a)
    assert r.l0_tm + r.l0_te == pytest.approx(want, rel=1e-10)


def test_layer_swap_symmetry():
    film = Drude(WP, LAW)
    cfg = LayeredConfig(film, 100.0 * NM, 300.0, sapphire(), Vacuum())
    swapped = LayeredConfig(film, 100.0 * NM, 300.0, Vacuum(), sapphire())
    assert free_energy(cfg, TOL).value == free_energy(swapped, TOL).value


def test_low_temperature_path_runs():
    r = free_energy(gold_film("plasma", 55.0, T=1.0), 1e-6)
    assert r.value < 0.0 and math.isfinite(r.value)


# ---------------------------------------------------------------------------
# Log-space deep suppression
# ---------------------------------------------------------------------------

def test_deep_plasma_film_log_space():
    cfg = gold_film("plasma", 100000.0)  # 100 um, omega_p_tilde ~ 9122
    r = free_energy(cfg, TOL, log_space=True)
    assert r.value == 0.0
    assert r.log_magnitude.sign == -1
    assert r.log_magnitude.log10_abs == pytest.approx(-3971.2555, abs=0.01)
    p = pressure(cfg, TOL, log_space=True)
    assert p.value == 0.0
    assert p.log_magnitude.log10_abs == pytest.approx(-3963.2954, abs=0.01)


def test_deep_drude_film_stays_linear():
    # the Drude l = 0 term survives at any thickness; log_space changes
    # nothing but the permission to go deep
    cfg = gold_film("drude", 100000.0)
    r = free_energy(cfg, 1e-6, log_space=True)
    a = 100000.0 * NM
    classical = -K_B * 300.0 * ZETA3 / (16.0 * math.pi * a * a)
    assert r.value == pytest.approx(classical, rel=1e-4)
    assert r.log_magnitude.value() == pytest.approx(r.value, rel=1e-12)


# ---------------------------------------------------------------------------
# Reduced-model cross-checks
# ---------------------------------------------------------------------------

def test_nonretarded_scaling_and_pins():
    f1 = nonrelativistic_free_energy(gold_film("plasma", 1.0), TOL)
    f2 = nonrelativistic_free_energy(gold_film("plasma", 2.0), TOL)
    assert f1 / f2 == pytest.approx(4.0, rel=1e-9)  # 1/a^2 law
    assert f1 == pytest.approx(-5.631149890661791e-3, rel=1e-7)
    fd = nonrelativistic_free_energy(gold_film("drude", 1.0), TOL)
    assert fd == pytest.approx(-5.6098909747776295e-3, rel=1e-7)
    assert abs(fd) < abs(f1)  # relaxation weakens the attraction


def test_zero_temperature_scaling_and_pin():
    e5 = zero_temperature_energy(gold_film("plasma", 5.0), TOL)
    e10 = zero_temperature_energy(gold_film("plasma", 10.0), TOL)
    assert e5 / e10 == pytest.approx(4.0, rel=1e-9)
    assert e5 == pytest.approx(-2.2524599553704327e-4, rel=1e-7)

"""Dielectric models, relaxation law, optical tables, KK transform."""

import math

import numpy as np
import pytest

from filmcasimir.constants import EV_TO_RAD_S
from filmcasimir.materials import (
    Drude,
    DrudeLike,
    DrudeTail,
    FiniteEpsilon,
    MaterialError,
    OpticalTable,
    Oscillator,
    Plasma,
    PlasmaLike,
    PlasmaTail,
    RelaxationLaw,
    Tabulated,
    Vacuum,
    evaluate,
    gold_drude,
    gold_plasma,
    gold_relaxation,
    kk_transform,
    sapphire,
    zero_frequency_class,
)

WP = 9.0 * EV_TO_RAD_S
LAW = RelaxationLaw(0.035 * EV_TO_RAD_S)


# ---------------------------------------------------------------------------
# Relaxation law
# ---------------------------------------------------------------------------

class TestRelaxationLaw:
    def test_room_anchor(self):
        assert LAW.gamma(300.0) == pytest.approx(0.035 * EV_TO_RAD_S, rel=1e-15)

    def test_branch_exponents(self):
        # residual T^2 below the helium crossover, T^5 between crossover
        # and T_Debye/4, linear above
        assert LAW.gamma(2.0) / LAW.gamma(1.0) == pytest.approx(4.0, rel=1e-12)
        assert LAW.gamma(8.4) / LAW.gamma(4.2) == pytest.approx(32.0, rel=1e-12)
        assert LAW.gamma(200.0) / LAW.gamma(100.0) == pytest.approx(2.0, rel=1e-12)

    def test_continuity_at_branch_joins(self):
        for t_join in (4.2, 0.25 * 165.0):
            below = LAW.gamma(t_join * (1.0 - 1e-9))
            above = LAW.gamma(t_join * (1.0 + 1e-9))
            assert below == pytest.approx(above, rel=1e-6)

    def test_zero_temperature(self):
        assert LAW.gamma(0.0) == 0.0
        with pytest.raises(MaterialError):
            LAW.gamma(-1.0)

    def test_parameter_validation(self):
        with pytest.raises(MaterialError):
            RelaxationLaw(-1.0)
        with pytest.raises(MaterialError):
            RelaxationLaw(1.0e13, debye_temperature=165.0, helium_crossover=80.0)


# ---------------------------------------------------------------------------
# Analytic models
# ---------------------------------------------------------------------------

def test_drude_permittivity():
    xi = 2.47e14
    want = 1.0 + WP**2 / (xi * (xi + LAW.gamma(300.0)))
    assert evaluate(Drude(WP, LAW), xi, 300.0) == pytest.approx(want, rel=1e-15)


def test_plasma_permittivity():
    xi = 2.47e14
    assert evaluate(Plasma(WP), xi, 300.0) == pytest.approx(
        1.0 + WP**2 / xi**2, rel=1e-15)


def test_vacuum_and_oscillator():
    assert evaluate(Vacuum(), 1e15, 300.0) == 1.0
    osc = Oscillator((7.03, 2.072), (1.0e14, 2.0e16))
    xi = 5.0e14
    want = 1.0 + 7.03 / (1.0 + (xi / 1.0e14) ** 2) \
        + 2.072 / (1.0 + (xi / 2.0e16) ** 2)
    assert evaluate(osc, xi, 300.0) == pytest.approx(want, rel=1e-15)


def test_gold_factories_and_sapphire():
    assert gold_drude().omega_p == pytest.approx(WP, rel=1e-15)
    assert gold_plasma().omega_p == pytest.approx(WP, rel=1e-15)
    assert gold_relaxation().gamma(300.0) == pytest.approx(LAW.gamma(300.0))
    # static permittivity just above 10
    assert evaluate(sapphire(), 1.0, 300.0) == pytest.approx(10.102, rel=1e-12)


def test_zero_frequency_classes():
    assert isinstance(zero_frequency_class(Drude(WP, LAW), 300.0), DrudeLike)
    assert isinstance(zero_frequency_class(Plasma(WP), 300.0), PlasmaLike)
    vac = zero_frequency_class(Vacuum(), 300.0)
    assert isinstance(vac, FiniteEpsilon) and vac.eps0 == 1.0
    sap = zero_frequency_class(sapphire(), 300.0)
    assert isinstance(sap, FiniteEpsilon)
    assert sap.eps0 == pytest.approx(10.102, rel=1e-12)


# ---------------------------------------------------------------------------
# Optical tables
# ---------------------------------------------------------------------------

def _tiny_table():
    return OpticalTable(np.array([1e14, 2e14, 4e14]),
                        np.array([1.0, 1.1, 1.2]),
                        np.array([0.5, 0.4, 0.3]))


class TestOpticalTable:
    def test_imag_eps(self):
        t = _tiny_table()
        assert np.allclose(t.imag_eps(), 2.0 * t.n * t.k)

    def test_validation(self):
        with pytest.raises(MaterialError):
            OpticalTable(np.array([1e14]), np.array([1.0]), np.array([0.1]))
        with pytest.raises(MaterialError):
            OpticalTable(np.array([2e14, 1e14]), np.ones(2), np.zeros(2))
        with pytest.raises(MaterialError):
            OpticalTable(np.array([1e14, 2e14]), np.array([1.0, -1.0]),
                         np.zeros(2))
        with pytest.raises(MaterialError):
            OpticalTable(np.array([1e14, 2e14]), np.ones(2),
                         np.array([0.1, -0.1]))

    def test_from_file(self, tmp_path):
        p = tmp_path / "au.dat"
        p.write_text("# omega_eV n k\n"
                     "0.1 1.5 2.0   # sample comment\n"
                     "\n"
                     "0.2 1.4 1.8\n")
        t = OpticalTable.from_file(p)
        assert t.omega[0] == pytest.approx(0.1 * EV_TO_RAD_S, rel=1e-15)
        assert t.n[1] == 1.4

    def test_from_file_bad_line(self, tmp_path):
        p = tmp_path / "bad.dat"
        p.write_text("0.1 1.5\n")
        with pytest.raises(MaterialError, match="bad.dat:1"):
            OpticalTable.from_file(p)


# ---------------------------------------------------------------------------
# Kramers-Kronig transform
# ---------------------------------------------------------------------------

def drude_synthetic_table(n_pts=800, lo_eV=1e-3, hi_eV=1e2):
    """n, k sampled from the analytic Drude permittivity."""
    gamma = LAW.gamma(300.0)
    w_eV = np.logspace(math.log10(lo_eV), math.log10(hi_eV), n_pts)
    w = w_eV * EV_TO_RAD_S
    eps = 1.0 - WP**2 / (w * (w + 1j * gamma))
    nk = np.sqrt(eps)
    return OpticalTable(w, np.abs(nk.real) + 0.0, np.abs(nk.imag))


def test_kk_drude_round_trip():
    table = drude_synthetic_table()
    tail = DrudeTail(WP, LAW)
    gamma = LAW.gamma(300.0)
    worst = 0.0
    for xi in np.logspace(math.log10(2.5e14), math.log10(2.5e16), 7):
        got = kk_transform(table, tail, xi, 300.0)
        want = 1.0 + WP**2 / (xi * (xi + gamma))
        worst = max(worst, abs(got / want - 1.0))
    assert worst < 1e-4


def test_kk_plasma_tail_adds_explicit_term():
    # a transparent table (k = 0) isolates the free-electron term: the
    # plasma-form extrapolation must contribute exactly omega_p^2/xi^2
    table = OpticalTable(np.array([1e15, 2e15, 4e15]),
                         np.array([1.0, 1.0, 1.0]),
                         np.zeros(3))
    xi = 3.0e14
    got = kk_transform(table, PlasmaTail(WP), xi, 300.0)
    assert got == pytest.approx(1.0 + WP**2 / xi**2, rel=1e-12)


def test_kk_domain_error():
    with pytest.raises(MaterialError):
        kk_transform(_tiny_table(), PlasmaTail(WP), 0.0, 300.0)


def test_tabulated_model_dispatches_to_kk():
    table = drude_synthetic_table(n_pts=200)
    tail = DrudeTail(WP, LAW)
    model = Tabulated(table, tail)
    xi = 1.0e15
    assert evaluate(model, xi, 300.0) == pytest.approx(
        kk_transform(table, tail, xi, 300.0), rel=1e-15)
    # plasma-form tail variant selects the plasma zero-frequency class
    assert isinstance(
        zero_frequency_class(Tabulated(table, PlasmaTail(WP)), 300.0),
        PlasmaLike)
    assert isinstance(zero_frequency_class(model, 300.0), DrudeLike)

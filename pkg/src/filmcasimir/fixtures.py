"""Regression fixture table: reference numbers the stack must reproduce.

Each fixture freezes one externally quoted or independently derived
number together with its tolerance band, the comparison mode, and the
permittivity model it assumes.  Entries with ``expected_fail`` set are
known modeling gaps, not regressions: the analytic Drude/plasma inputs
shipped here cannot land inside bands that were produced from measured
optical data, and two bands quote elementary-function expansions far
outside their asymptotic range.  Such entries report as ``xfail`` so a
drift in their measured value stays visible without failing the run.

All engine evaluations run at a fixed internal tolerance so the
pass/fail table is reproducible independent of the caller's settings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from . import asymptotics as asym
from .constants import C_LIGHT, LOG10_E, K_B, matsubara_frequency, omega_p_tilde
from .lifshitz import (
    LayeredConfig,
    free_energy,
    nonrelativistic_free_energy,
    pressure,
    reflection_coefficients,
)
from .materials import (
    DrudeTail,
    OpticalTable,
    Plasma,
    PlasmaTail,
    Tabulated,
    Vacuum,
    gold_drude,
    gold_plasma,
    gold_relaxation,
    kk_transform,
    sapphire,
)
from .specfun import ZETA3

NM = 1e-9
UM = 1e-6
ROOM = 300.0

# Engine settings used by every fixture runner.  Tight enough that the
# quadrature/truncation error is negligible against the narrowest band.
ENGINE_TOL = 1e-8


@dataclass(frozen=True)
class FixtureEnv:
    """Film models the runners evaluate.

    The default is the analytic pair (Drude and plasma, 9 eV / 0.035 eV).
    Supplying a measured optical table replaces both films with the
    tabulated model plus the matching low-frequency tail; recorded
    expected-fail flags describe the analytic models and are left
    unchanged, so a good table turns those entries into ``xpass``.
    """

    drude_film: object
    plasma_film: object
    label: str


def default_env() -> FixtureEnv:
    return FixtureEnv(gold_drude(), gold_plasma(), "analytic Drude/plasma 9 eV, 0.035 eV")


def tabulated_env(table: OpticalTable) -> FixtureEnv:
    wp = gold_plasma().omega_p
    law = gold_relaxation()
    return FixtureEnv(
        Tabulated(table, DrudeTail(wp, law)),
        Tabulated(table, PlasmaTail(wp)),
        "tabulated n,k with analytic low-frequency tails",
    )


class Kit:
    """Memoized engine access shared by the runners."""

    def __init__(self, env: FixtureEnv):
        self.env = env
        self.omega_p = gold_plasma().omega_p
        self.relaxation = gold_relaxation()
        self._cache: dict = {}

    def film(self, which: str):
        return self.env.drude_film if which == "drude" else self.env.plasma_film

    @staticmethod
    def plate(name: str):
        return Vacuum() if name == "vacuum" else sapphire()

    def config(self, which: str, plate: str, a: float, T: float = ROOM) -> LayeredConfig:
        return LayeredConfig.symmetric(self.film(which), self.plate(plate), a, T)

    def F(self, which: str, plate: str, a: float, T: float = ROOM):
        key = ("F", which, plate, a, T)
        if key not in self._cache:
            self._cache[key] = free_energy(self.config(which, plate, a, T), ENGINE_TOL)
        return self._cache[key]

    def P(self, which: str, plate: str, a: float, T: float = ROOM):
        key = ("P", which, plate, a, T)
        if key not in self._cache:
            self._cache[key] = pressure(self.config(which, plate, a, T), ENGINE_TOL)
        return self._cache[key]

    def ratio_F(self, plate: str, a: float) -> float:
        return abs(self.F("drude", plate, a).value / self.F("plasma", plate, a).value)


@dataclass(frozen=True)
class Fixture:
    fid: str
    description: str
    expected: float
    mode: str  # rel | abs | factor | le | ge
    tol: float  # band width for rel/abs/factor; unused for le/ge
    run: Callable[[Kit], float]
    kind: str = "reference"  # reference | derived | identity
    model: str = "both"
    expected_fail: bool = False
    data_limited: bool = False
    note: str = ""


@dataclass(frozen=True)
class FixtureResult:
    fid: str
    description: str
    kind: str
    model: str
    expected: float
    measured: float
    band: str
    status: str  # pass | fail | xfail | xpass
    expected_fail: bool
    note: str
    error: str = ""

    @property
    def ok(self) -> bool:
        """True unless this is an unexpected failure."""
        return self.status != "fail"


def _passes(fx: Fixture, measured: float) -> bool:
    if not math.isfinite(measured):
        return False
    e = fx.expected
    if fx.mode == "rel":
        return abs(measured - e) <= fx.tol * abs(e)
    if fx.mode == "abs":
        return abs(measured - e) <= fx.tol
    if fx.mode == "factor":
        if measured == 0.0 or (measured > 0) != (e > 0):
            return False
        q = measured / e
        return 1.0 / fx.tol <= q <= fx.tol
    if fx.mode == "le":
        return measured <= e
    if fx.mode == "ge":
        return measured >= e
    raise ValueError(f"unknown comparison mode {fx.mode!r}")


def _band(fx: Fixture) -> str:
    if fx.mode == "rel":
        return f"within {100.0 * fx.tol:g}%"
    if fx.mode == "abs":
        return f"+/- {fx.tol:g}"
    if fx.mode == "factor":
        return f"within factor {fx.tol:g}"
    if fx.mode == "le":
        return f"<= {fx.expected:g}"
    return f">= {fx.expected:g}"


# ---------------------------------------------------------------------------
# Runners that need more than a line
# ---------------------------------------------------------------------------

def _tail_ratio_asymptotic(kit: Kit, a: float) -> float:
    tail = asym.plasma_tail_l_ge_1_log(a, ROOM, kit.omega_p)
    combined = asym.plasma_l0_combined_log(a, ROOM, kit.omega_p)
    return 10.0 ** (tail.log10_abs - combined.log10_abs)


def _kk_roundtrip_dev(kit: Kit) -> float:
    wp = kit.omega_p
    gam = kit.relaxation.gamma(ROOM)
    xi1 = matsubara_frequency(ROOM, 1)
    om = np.logspace(math.log10(xi1 / 1e3), math.log10(xi1 * 1e4), 2500)
    eps_r = 1.0 - wp ** 2 / (om ** 2 + gam ** 2)
    eps_i = wp ** 2 * gam / (om * (om ** 2 + gam ** 2))
    mod = np.hypot(eps_r, eps_i)
    table = OpticalTable(om, np.sqrt((mod + eps_r) / 2), np.sqrt((mod - eps_r) / 2))
    tail = DrudeTail(wp, kit.relaxation)
    worst = 0.0
    for x in np.logspace(0.0, 2.0, 15) * xi1:
        got = kk_transform(table, tail, float(x), ROOM)
        want = 1.0 + wp ** 2 / (x * (x + gam))
        worst = max(worst, abs(got / want - 1.0))
    return worst


def _classical_dev(kit: Kit, kind: str) -> float:
    worst = 0.0
    for plate in ("vacuum", "sapphire"):
        for a in (150 * NM, 200 * NM, 300 * NM):
            if kind == "energy":
                got = kit.F("drude", plate, a).value
                want = asym.classical_drude_free_energy(a, ROOM)
            else:
                got = kit.P("drude", plate, a).value
                want = asym.classical_drude_pressure(a, ROOM)
            worst = max(worst, abs(got / want - 1.0))
    return worst


def _tail_fraction_margin(kit: Kit) -> float:
    r = kit.F("drude", "vacuum", 150 * NM)
    frac = abs(r.tail_l_ge_1) / abs(r.l0_tm + r.l0_te)
    bound = asym.drude_tail_bound(150 * NM, ROOM, kit.omega_p, kit.relaxation.gamma(ROOM))
    return frac / (bound / (ZETA3 / 2.0))


def _plasma_flatness(kit: Kit) -> float:
    mags = [abs(kit.F("plasma", "vacuum", 55 * NM, T).value)
            for T in (1.0, 50.0, 77.0, 150.0, 300.0)]
    return max(mags) / min(mags)


def _pressure_linearity(kit: Kit) -> float:
    p = {T: kit.P("drude", "vacuum", 55 * NM, T).value for T in (100.0, 200.0, 300.0)}
    span = p[300.0] - p[100.0]
    return abs((p[300.0] - 2.0 * p[200.0] + p[100.0]) / span)


def _gradient_consistency(kit: Kit) -> float:
    worst = 0.0
    a = 55 * NM
    for which in ("drude", "plasma"):
        h = a * 1e-4
        film = kit.film(which)
        fp = free_energy(LayeredConfig.symmetric(film, Vacuum(), a + h, ROOM), 1e-10).value
        fm = free_energy(LayeredConfig.symmetric(film, Vacuum(), a - h, ROOM), 1e-10).value
        p = kit.P(which, "vacuum", a).value
        worst = max(worst, abs(-(fp - fm) / (2.0 * h) / p - 1.0))
    return worst


def _swap_symmetry(kit: Kit) -> float:
    film = kit.film("plasma")
    one = free_energy(LayeredConfig(film, 100 * NM, ROOM, sapphire(), Vacuum()), ENGINE_TOL)
    two = free_energy(LayeredConfig(film, 100 * NM, ROOM, Vacuum(), sapphire()), ENGINE_TOL)
    return abs(one.value / two.value - 1.0)


def _nonretarded_agreement(kit: Kit) -> float:
    worst = 0.0
    for which in ("drude", "plasma"):
        cfg = LayeredConfig.symmetric(kit.film(which), Vacuum(), 1 * NM, ROOM)
        full = free_energy(cfg, 1e-7).value
        reduced = nonrelativistic_free_energy(cfg, 1e-7)
        worst = max(worst, abs(full / reduced - 1.0))
    return worst


def _reflection_ideal_dev(kit: Kit) -> float:
    cfg = LayeredConfig.symmetric(Plasma(kit.omega_p * 1e5), Vacuum(), 100 * NM, ROOM)
    r_tm, _, r_te, _ = reflection_coefficients(cfg, 1, 1.0)
    return max(abs(r_tm + 1.0), abs(r_te - 1.0))


def _combined_over_tm(kit: Kit) -> float:
    a = 500.0 * C_LIGHT / (2.0 * kit.omega_p)
    return (asym.plasma_l0_combined(a, ROOM, kit.omega_p)
            / asym.plasma_l0_tm(a, ROOM, kit.omega_p))


def _combined_over_split(kit: Kit) -> float:
    a = 100 * NM
    tm = asym.plasma_l0_tm(a, ROOM, kit.omega_p)
    te = asym.plasma_l0_te(a, ROOM, kit.omega_p, variant="exact")
    return asym.plasma_l0_combined(a, ROOM, kit.omega_p) / (tm + te)


def _te_variant_ratio(kit: Kit, variant: str) -> float:
    a = 110 * NM
    exact = asym.plasma_l0_te(a, ROOM, kit.omega_p, variant="exact")
    return asym.plasma_l0_te(a, ROOM, kit.omega_p, variant=variant) / exact


def _engine_tail_ratio_6um(kit: Kit) -> float:
    r = kit.F("plasma", "vacuum", 6 * UM)
    return r.tail_l_ge_1 / (r.l0_tm + r.l0_te)


_DATA_NOTE = ("reference computed from measured optical data; analytic "
              "Drude/plasma permittivity has no interband contribution")


def _build() -> tuple:
    wp = gold_plasma().omega_p
    f: list[Fixture] = []
    add = f.append

    # -- dimensionless Matsubara-tail bounds (Drude film, vacuum)
    for a_nm, expected, tol in ((110, 0.058, 0.02), (120, 0.026, 0.02), (150, 0.0024, 0.05)):
        add(Fixture(
            f"drude-tail-bound-{a_nm}nm",
            f"dimensionless l>=1 tail bound, Drude film {a_nm} nm, 300 K",
            expected, "rel", tol,
            lambda k, a=a_nm: asym.drude_tail_bound(
                a * NM, ROOM, k.omega_p, k.relaxation.gamma(ROOM)),
            model="drude"))
    add(Fixture(
        "zero-term-normalization",
        "zeta(3)/2 scale of the dimensionless l=0 Drude term",
        0.601, "rel", 2e-3, lambda k: ZETA3 / 2.0, kind="derived", model="drude"))
    add(Fixture(
        "zeta3-doubled",
        "2 x (zeta(3)/2) consistency of the classical coefficient",
        1.202056, "rel", 1e-6, lambda k: 2.0 * (ZETA3 / 2.0), kind="identity", model="-"))

    # -- plasma large-separation tail ratios (asymptotic route, log space)
    for a_um, expected in ((6, 4.95), (30, 1.66), (50, 1.06), (100, 0.46)):
        add(Fixture(
            f"plasma-tail-ratio-{a_um}um",
            f"(l>=1 tail)/(l=0 term) for a plasma film at {a_um} um, 300 K",
            expected, "rel", 0.05,
            lambda k, a=a_um: _tail_ratio_asymptotic(k, a * UM),
            model="plasma"))
    add(Fixture(
        "plasma-l0-pressure-100nm",
        "magnitude of the l=0 plasma pressure term at 100 nm, 300 K",
        1.5e-3, "rel", 0.05,
        lambda k: abs(asym.plasma_l0_pressure(100 * NM, ROOM, k.omega_p)),
        model="plasma"))
    add(Fixture(
        "exp-suppression-100um-log",
        "log10 of exp(-omega_p_tilde) at 100 um",
        math.log10(2.5) - 3566.0, "rel", 0.05,
        lambda k: -omega_p_tilde(100 * UM, k.omega_p) * LOG10_E,
        model="plasma", expected_fail=True,
        note=("recorded magnitude implies omega_p_tilde ~ 8211 where "
              "2 a omega_p / c = 9122; kept as quoted with a widened band")))

    # -- relaxation and optical-data pipeline
    add(Fixture(
        "relaxation-over-first-matsubara",
        "gamma(300 K) / xi_1(300 K)",
        0.21, "abs", 0.01,
        lambda k: k.relaxation.gamma(ROOM) / matsubara_frequency(ROOM, 1),
        model="drude"))
    add(Fixture(
        "relaxation-room-rad-s",
        "gamma(300 K) in rad/s for the 0.035 eV room value",
        5.32e13, "rel", 5e-3, lambda k: k.relaxation.gamma(ROOM), model="drude"))
    add(Fixture(
        "penetration-depth-nm",
        "effective penetration depth c/omega_p in nm",
        22.0, "rel", 0.01, lambda k: C_LIGHT / k.omega_p / NM, model="-"))
    add(Fixture(
        "kk-drude-roundtrip-max-dev",
        "max relative deviation of the tabulated pipeline from the "
        "analytic Drude epsilon(i xi) over [xi_1, 100 xi_1]",
        0.005, "le", 0.0, _kk_roundtrip_dev, kind="derived", model="drude"))

    # -- zero-frequency structure
    add(Fixture(
        "reflection-ideal-limits",
        "r_TM -> -1 and r_TE -> +1 for an overdense film (max deviation)",
        1e-3, "le", 0.0, _reflection_ideal_dev, kind="identity", model="plasma"))
    add(Fixture(
        "combined-over-tm-large-w",
        "combined l=0 closed form over TM closed form at omega_p_tilde = 500",
        2.0, "rel", 0.01, _combined_over_tm, kind="derived", model="plasma"))
    add(Fixture(
        "combined-over-split-100nm",
        "combined l=0 closed form over (TM + exact TE) at 100 nm",
        1.0, "rel", 0.30, _combined_over_split, kind="derived", model="plasma",
        expected_fail=True,
        note=("the combined form doubles the TM leading term; the exact "
              "static TE integral at omega_p_tilde ~ 9 is ~4.5x below its "
              "own leading term, so the quotient sits near 1.44")))
    add(Fixture(
        "te-expansion-vs-exact-110nm",
        "elementary-function expansion of the static TE term over the "
        "exact quadrature at 110 nm",
        1.0, "rel", 0.01, lambda k: _te_variant_ratio(k, "expansion19"),
        kind="derived", model="plasma", expected_fail=True,
        note=("expansion in sqrt(8 pi/w) converges only for much larger "
              "omega_p_tilde; at w ~ 10 it overshoots by ~4.6x")))
    add(Fixture(
        "te-leading-vs-exact-110nm",
        "leading-order static TE term over the exact quadrature at 110 nm",
        1.0, "rel", 0.05, lambda k: _te_variant_ratio(k, "leading20"),
        kind="derived", model="plasma", expected_fail=True,
        note="same asymptotic-range limitation as the full expansion"))

    # -- classical limit
    add(Fixture(
        "classical-free-energy-agreement",
        "worst engine/closed-form deviation of the Drude free energy at "
        "150/200/300 nm, vacuum and sapphire",
        0.01, "le", 0.0, lambda k: _classical_dev(k, "energy"),
        kind="derived", model="drude"))
    add(Fixture(
        "classical-pressure-agreement",
        "worst engine/closed-form deviation of the Drude pressure at "
        "150/200/300 nm, vacuum and sapphire",
        0.01, "le", 0.0, lambda k: _classical_dev(k, "pressure"),
        kind="derived", model="drude"))
    add(Fixture(
        "drude-config-universality-180nm",
        "|F_vacuum/F_sapphire - 1| for the Drude film at 180 nm",
        5e-5, "le", 0.0,
        lambda k: abs(k.F("drude", "vacuum", 180 * NM).value
                      / k.F("drude", "sapphire", 180 * NM).value - 1.0),
        model="drude"))
    add(Fixture(
        "drude-tail-fraction-150nm",
        "engine |tail|/|l0| at 150 nm against the dimensionless bound",
        1.0, "le", 0.0, _tail_fraction_margin, kind="derived", model="drude"))

    # -- temperature behavior
    add(Fixture(
        "drude-temperature-ratio-200nm",
        "|F(300 K)| / |F(77 K)| for the Drude film at 200 nm",
        3.9, "rel", 0.02,
        lambda k: abs(k.F("drude", "vacuum", 200 * NM, 300.0).value
                      / k.F("drude", "vacuum", 200 * NM, 77.0).value),
        model="drude"))
    add(Fixture(
        "plasma-temperature-flatness-55nm",
        "max/min of |F_plasma| over T in [1, 300] K at 55 nm",
        1.02, "le", 0.0, _plasma_flatness, model="plasma"))
    add(Fixture(
        "drude-temperature-monotone-55nm",
        "|F(300 K)| / |F(77 K)| for the Drude film at 55 nm (must exceed 1)",
        1.0, "ge", 0.0,
        lambda k: abs(k.F("drude", "vacuum", 55 * NM, 300.0).value
                      / k.F("drude", "vacuum", 55 * NM, 77.0).value),
        model="drude"))
    add(Fixture(
        "drude-pressure-linearity-55nm",
        "curvature/span of P(T) at T = 100/200/300 K, Drude film, 55 nm",
        0.05, "le", 0.0, _pressure_linearity, kind="derived", model="drude"))

    # -- magnitude fixtures (tabulated-data limited)
    for plate, triple in (("sapphire", (1.97, 61.9, 3.6e5)), ("vacuum", (1.72, 50.45, 3.17e5))):
        for a_nm, expected in zip((50, 100, 200), triple):
            mode = "factor" if a_nm == 200 else "rel"
            tol = 2.0 if a_nm == 200 else 0.30
            xfail = plate == "vacuum" and a_nm == 100
            add(Fixture(
                f"free-energy-ratio-{plate}-{a_nm}nm",
                f"Drude/plasma free-energy ratio, {plate} plates, {a_nm} nm",
                expected, mode, tol,
                lambda k, p=plate, a=a_nm: k.ratio_F(p, a * NM),
                data_limited=True, expected_fail=xfail,
                note=_DATA_NOTE if xfail else ""))
    for plate, a_nm, expected, xfail in (
            ("sapphire", 50, 42.95, False), ("sapphire", 100, 0.1633, True),
            ("vacuum", 50, 58.60, True), ("vacuum", 100, 0.2012, True)):
        add(Fixture(
            f"plasma-free-energy-{plate}-{a_nm}nm",
            f"|F| of the plasma film, {plate} plates, {a_nm} nm, in nJ/m^2",
            expected, "rel", 0.30,
            lambda k, p=plate, a=a_nm: abs(k.F("plasma", p, a * NM).value) / 1e-9,
            model="plasma", data_limited=True, expected_fail=xfail,
            note=(_DATA_NOTE if xfail else "") +
                 ("" if xfail else "nJ/m^2 reading, consistent with the "
                                   "classical limit at 100 nm")))
    for a_nm, expected in ((50, 7.318), (100, 0.0245)):
        add(Fixture(
            f"plasma-pressure-vacuum-{a_nm}nm",
            f"|P| of the plasma film in vacuum at {a_nm} nm, in Pa",
            expected, "rel", 0.30,
            lambda k, a=a_nm: abs(k.P("plasma", "vacuum", a * NM).value),
            model="plasma", data_limited=True, expected_fail=True,
            note=_DATA_NOTE))
    for plate, expected in (("vacuum", 1.24), ("sapphire", 1.33)):
        add(Fixture(
            f"pressure-ratio-{plate}-50nm",
            f"Drude/plasma pressure ratio, {plate} plates, 50 nm",
            expected, "rel", 0.20,
            lambda k, p=plate: abs(k.P("drude", p, 50 * NM).value
                                   / k.P("plasma", p, 50 * NM).value),
            data_limited=True))
    for a_nm, expected in ((100, 1.23), (200, 1.15)):
        add(Fixture(
            f"plasma-config-ratio-{a_nm}nm",
            f"vacuum/sandwiched |F| ratio for the plasma film at {a_nm} nm",
            expected, "rel", 0.10,
            lambda k, a=a_nm: abs(k.F("plasma", "vacuum", a * NM).value
                                  / k.F("plasma", "sapphire", a * NM).value),
            model="plasma", data_limited=True, expected_fail=True,
            note=_DATA_NOTE))
    add(Fixture(
        "approach-agreement-10nm",
        "|F_drude/F_plasma - 1| at 10 nm (approaches coincide when thin)",
        0.05, "le", 0.0,
        lambda k: abs(k.ratio_F("vacuum", 10 * NM) - 1.0)))

    # -- structural consistency
    add(Fixture(
        "pressure-l0-dominance-100nm",
        "|P_plasma| / |l=0 pressure term| at 100 nm (nonzero terms dominate)",
        5.0, "ge", 0.0,
        lambda k: abs(k.P("plasma", "vacuum", 100 * NM).value
                      / asym.plasma_l0_pressure(100 * NM, ROOM, k.omega_p)),
        kind="derived", model="plasma"))
    add(Fixture(
        "pressure-gradient-consistency-55nm",
        "central-difference check of P = -dF/da at 55 nm, both approaches",
        1e-4, "le", 0.0, _gradient_consistency, kind="identity"))
    add(Fixture(
        "layer-swap-symmetry",
        "exchanging the two plates leaves the free energy unchanged",
        1e-12, "le", 0.0, _swap_symmetry, kind="identity", model="plasma"))
    add(Fixture(
        "nonretarded-agreement-1nm",
        "worst |F_full/F_nonretarded - 1| at 1 nm, both approaches",
        0.01, "le", 0.0, _nonretarded_agreement, kind="derived",
        expected_fail=True,
        note=("both routes are converged to ~1e-13; the residual 1.6% is "
              "the genuine retardation correction at this thickness")))
    add(Fixture(
        "engine-tail-ratio-6um",
        "engine (l>=1)/(l=0) free-energy ratio for the plasma film at 6 um",
        4.95, "rel", 0.05, _engine_tail_ratio_6um, model="plasma",
        expected_fail=True,
        note=("the quoted ratio comes from the leading asymptotic forms; "
              "the direct sum keeps sqrt(8 pi/w) TE corrections, ~20% at "
              "omega_p_tilde ~ 550, and lands near 4.52")))
    return tuple(f)


FIXTURES = _build()


def run_fixtures(table: Optional[OpticalTable] = None,
                 ids: Optional[Iterable[str]] = None) -> list[FixtureResult]:
    """Evaluate the fixture table and return one result per entry.

    `table` switches the film models to the tabulated pipeline;
    `ids` restricts the run to the named fixtures.
    """
    env = default_env() if table is None else tabulated_env(table)
    kit = Kit(env)
    wanted = set(ids) if ids is not None else None
    results = []
    for fx in FIXTURES:
        if wanted is not None and fx.fid not in wanted:
            continue
        error = ""
        try:
            measured = float(fx.run(kit))
        except Exception as exc:  # recorded, not raised: the table must complete
            measured = math.nan
            error = f"{type(exc).__name__}: {exc}"
        passed = not error and _passes(fx, measured)
        if passed:
            status = "xpass" if fx.expected_fail else "pass"
        else:
            status = "xfail" if fx.expected_fail else "fail"
        model = fx.model if not (fx.data_limited and table is not None) else "tabulated"
        results.append(FixtureResult(
            fid=fx.fid, description=fx.description, kind=fx.kind, model=model,
            expected=fx.expected, measured=measured, band=_band(fx),
            status=status, expected_fail=fx.expected_fail, note=fx.note,
            error=error))
    return results


def unexpected_failures(results: Sequence[FixtureResult]) -> list[FixtureResult]:
    return [r for r in results if not r.ok]

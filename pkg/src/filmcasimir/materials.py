"""Dielectric response along the imaginary frequency axis.

Every material the engine sees is one of a small set of models evaluated
at the Matsubara frequencies: vacuum, a Drude or plasma metal, a sum of
undamped oscillators for transparent dielectrics, or tabulated optical
data turned into epsilon(i xi) through the Kramers-Kronig transform.

Frequencies are angular (rad/s) throughout; temperatures in K.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .constants import (
    EV_TO_RAD_S,
    GOLD_DEBYE_K,
    GOLD_GAMMA_ROOM_EV,
    GOLD_OMEGA_P_EV,
    HELIUM_CROSSOVER_K,
)


class MaterialError(ValueError):
    """Invalid material parameters or evaluation outside the model domain."""


# ---------------------------------------------------------------------------
# Relaxation frequency vs temperature
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RelaxationLaw:
    """Temperature dependence of the Drude relaxation frequency.

    Linear (phonon) scaling above a quarter of the Debye temperature,
    a T^5 Bloch-Grueneisen branch down to the helium crossover, and a
    residual T^2 branch below that.  The branches are glued continuously
    so gamma(T) has no jumps anywhere.

    Parameters
    ----------
    gamma_room : float
        Relaxation frequency at 300 K, rad/s.
    debye_temperature : float
        Debye temperature in K; the linear branch holds above a quarter
        of this value.
    helium_crossover : float
        Temperature in K below which the residual T^2 branch applies.
    """

    gamma_room: float
    debye_temperature: float = GOLD_DEBYE_K
    helium_crossover: float = HELIUM_CROSSOVER_K

    def __post_init__(self):
        if self.gamma_room <= 0 or self.debye_temperature <= 0 \
                or self.helium_crossover <= 0:
            raise MaterialError("relaxation parameters must be positive")
        if self.helium_crossover >= 0.25 * self.debye_temperature:
            raise MaterialError("helium crossover must sit below T_Debye / 4")

    def gamma(self, temperature: float) -> float:
        """Relaxation frequency at the given temperature, rad/s."""
        if temperature < 0:
            raise MaterialError(f"temperature must be >= 0, got {temperature}")
        t_lin = 0.25 * self.debye_temperature
        g_lin = self.gamma_room / 300.0  # slope of the linear branch
        if temperature >= t_lin:
            return g_lin * temperature
        g_at_lin = g_lin * t_lin
        t_he = self.helium_crossover
        if temperature >= t_he:
            return g_at_lin * (temperature / t_lin) ** 5
        g_at_he = g_at_lin * (t_he / t_lin) ** 5
        return g_at_he * (temperature / t_he) ** 2


# ---------------------------------------------------------------------------
# Tabulated optical data
# ---------------------------------------------------------------------------

class OpticalTable:
    """Measured optical constants n, k on an angular-frequency grid.

    The table is immutable after construction; the engine caches
    permittivities keyed on the table object.
    """

    def __init__(self, omega: np.ndarray, n: np.ndarray, k: np.ndarray):
        omega = np.asarray(omega, dtype=float)
        n = np.asarray(n, dtype=float)
        k = np.asarray(k, dtype=float)
        if omega.ndim != 1 or omega.shape != n.shape or omega.shape != k.shape:
            raise MaterialError("omega, n, k must be 1-d arrays of equal length")
        if omega.size < 2:
            raise MaterialError("optical table needs at least 2 samples")
        if not np.all(np.diff(omega) > 0):
            raise MaterialError("optical table frequencies must be strictly increasing")
        if not np.all(omega > 0):
            raise MaterialError("optical table frequencies must be positive")
        if not np.all(n > 0):
            raise MaterialError("refractive index n must be positive")
        if not np.all(k >= 0):
            raise MaterialError("extinction coefficient k must be non-negative")
        for a in (omega, n, k):
            a.setflags(write=False)
        self.omega = omega
        self.n = n
        self.k = k

    @classmethod
    def from_file(cls, path) -> "OpticalTable":
        """Load a whitespace-delimited table of `omega_eV  n  k` rows.

        Lines starting with '#' and blank lines are ignored.
        """
        omegas, ns, ks = [], [], []
        with open(path) as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                parts = line.split()
                if len(parts) != 3:
                    raise MaterialError(
                        f"{path}:{lineno}: expected 'omega_eV n k', got {raw!r}")
                try:
                    w, nn, kk = (float(p) for p in parts)
                except ValueError as exc:
                    raise MaterialError(f"{path}:{lineno}: {exc}") from exc
                omegas.append(w * EV_TO_RAD_S)
                ns.append(nn)
                ks.append(kk)
        return cls(np.array(omegas), np.array(ns), np.array(ks))

    def imag_eps(self) -> np.ndarray:
        """Im epsilon(omega) = 2 n k on the sample grid."""
        return 2.0 * self.n * self.k

    def __repr__(self):
        return (f"OpticalTable({self.omega.size} samples, "
                f"{self.omega[0]:.3e}..{self.omega[-1]:.3e} rad/s)")


# ---------------------------------------------------------------------------
# Dielectric models
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Vacuum:
    """epsilon = 1 identically."""


@dataclass(frozen=True)
class Drude:
    """epsilon(i xi) = 1 + omega_p^2 / (xi (xi + gamma(T)))."""

    omega_p: float
    relaxation: RelaxationLaw

    def __post_init__(self):
        if self.omega_p <= 0:
            raise MaterialError("plasma frequency must be positive")


@dataclass(frozen=True)
class Plasma:
    """epsilon(i xi) = 1 + omega_p^2 / xi^2 (dissipationless)."""

    omega_p: float

    def __post_init__(self):
        if self.omega_p <= 0:
            raise MaterialError("plasma frequency must be positive")


@dataclass(frozen=True)
class Oscillator:
    """Transparent dielectric: epsilon(i xi) = 1 + sum C_j w_j^2/(w_j^2 + xi^2)."""

    strengths: tuple
    resonances: tuple  # rad/s

    def __post_init__(self):
        if len(self.strengths) != len(self.resonances) or not self.strengths:
            raise MaterialError("oscillator strengths/resonances length mismatch")
        if any(c <= 0 for c in self.strengths) or any(w <= 0 for w in self.resonances):
            raise MaterialError("oscillator parameters must be positive")


@dataclass(frozen=True)
class DrudeTail:
    """Low-frequency extrapolation of tabulated data by a Drude term."""

    omega_p: float
    relaxation: RelaxationLaw


@dataclass(frozen=True)
class PlasmaTail:
    """Low-frequency extrapolation of tabulated data by a plasma term.

    Fallback used when the dissipationless approach must be combined
    with measured data: the analytic tail integral of the Drude form is
    replaced by an explicit omega_p^2/xi^2 addition.
    """

    omega_p: float


@dataclass(frozen=True, eq=False)
class Tabulated:
    """Optical data plus a low-frequency extrapolation model."""

    table: OpticalTable
    extrapolation: Union[DrudeTail, PlasmaTail]

    # identity-based hash/eq: the table arrays are frozen at construction
    def __hash__(self):
        return hash((id(self.table), self.extrapolation))

    def __eq__(self, other):
        return self is other


DielectricModel = Union[Vacuum, Drude, Plasma, Oscillator, Tabulated]


# ---------------------------------------------------------------------------
# Zero-frequency classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FiniteEpsilon:
    """epsilon(i xi -> 0) approaches a finite constant."""

    eps0: float


@dataclass(frozen=True)
class DrudeLike:
    """epsilon ~ omega_p^2 / (gamma xi) as xi -> 0."""

    omega_p: float
    gamma: float


@dataclass(frozen=True)
class PlasmaLike:
    """epsilon ~ omega_p^2 / xi^2 as xi -> 0."""

    omega_p: float


ZeroFrequencyClass = Union[FiniteEpsilon, DrudeLike, PlasmaLike]


def zero_frequency_class(model: DielectricModel,
                         temperature: float) -> ZeroFrequencyClass:
    """How epsilon(i xi) behaves as xi -> 0; decides the l = 0 treatment."""
    if isinstance(model, Vacuum):
        return FiniteEpsilon(1.0)
    if isinstance(model, Oscillator):
        return FiniteEpsilon(1.0 + sum(model.strengths))
    if isinstance(model, Drude):
        return DrudeLike(model.omega_p, model.relaxation.gamma(temperature))
    if isinstance(model, Plasma):
        return PlasmaLike(model.omega_p)
    if isinstance(model, Tabulated):
        ex = model.extrapolation
        if isinstance(ex, DrudeTail):
            return DrudeLike(ex.omega_p, ex.relaxation.gamma(temperature))
        return PlasmaLike(ex.omega_p)
    raise MaterialError(f"unknown dielectric model {model!r}")


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------

def evaluate(model: DielectricModel, xi, temperature: float):
    """epsilon(i xi) for the given model; xi scalar or ndarray, rad/s.

    xi must be positive for any model whose static permittivity
    diverges (Drude, plasma, tabulated metals); the l = 0 Matsubara
    term is handled by the zero-frequency classification instead.
    """
    scalar = np.isscalar(xi)
    xi_arr = np.atleast_1d(np.asarray(xi, dtype=float))
    if np.any(xi_arr < 0):
        raise MaterialError("imaginary frequency xi must be >= 0")
    diverges = isinstance(model, (Drude, Plasma, Tabulated))
    if diverges and np.any(xi_arr == 0.0):
        raise MaterialError(
            f"{type(model).__name__} permittivity diverges at xi = 0; "
            "use zero_frequency_class for the static limit")

    if isinstance(model, Vacuum):
        out = np.ones_like(xi_arr)
    elif isinstance(model, Drude):
        g = model.relaxation.gamma(temperature)
        out = 1.0 + model.omega_p**2 / (xi_arr * (xi_arr + g))
    elif isinstance(model, Plasma):
        out = 1.0 + model.omega_p**2 / xi_arr**2
    elif isinstance(model, Oscillator):
        out = np.ones_like(xi_arr)
        for c, w in zip(model.strengths, model.resonances):
            out += c * w**2 / (w**2 + xi_arr**2)
    elif isinstance(model, Tabulated):
        out = np.array([kk_transform(model.table, model.extrapolation,
                                     float(x), temperature) for x in xi_arr])
    else:
        raise MaterialError(f"unknown dielectric model {model!r}")
    return float(out[0]) if scalar else out


def _drude_tail_integral(omega_p: float, gamma: float,
                         omega_m: float, xi: float) -> float:
    """int_0^omega_m  omega Im eps_Drude / (omega^2 + xi^2) domega.

    Im eps_Drude = omega_p^2 gamma / (omega (omega^2 + gamma^2)), so the
    integrand is omega_p^2 gamma / ((omega^2 + gamma^2)(omega^2 + xi^2))
    with the closed form below; the xi = gamma pole of the partial
    fractions is removable and handled by its own branch.
    """
    if abs(xi - gamma) > 1e-6 * gamma:
        return omega_p**2 * gamma / (xi**2 - gamma**2) * (
            math.atan(omega_m / gamma) / gamma - math.atan(omega_m / xi) / xi)
    # xi == gamma limit
    return omega_p**2 * gamma * (
        omega_m / (2.0 * gamma**2 * (omega_m**2 + gamma**2))
        + math.atan(omega_m / gamma) / (2.0 * gamma**3))


def kk_transform(table: OpticalTable,
                 extrapolation: Union[DrudeTail, PlasmaTail],
                 xi: float, temperature: float) -> float:
    """epsilon(i xi) = 1 + (2/pi) int_0^inf omega Im eps / (omega^2 + xi^2).

    The tabulated range is integrated by the trapezoidal rule on a
    refined log-frequency grid (log-log interpolation of Im eps between
    samples); below the first sample the stated extrapolation
    contributes either the analytic Drude tail integral or an explicit
    plasma term.  Contributions above the last sample are neglected,
    which is the standard treatment when the data reach into the
    transparent regime.
    """
    if xi <= 0:
        raise MaterialError("kk_transform requires xi > 0")
    im = table.imag_eps()
    lg_w = np.log(table.omega)

    # refined grid: every sample interval subdivided to steps <= 0.01 in ln w
    pieces = [np.array([lg_w[0]])]
    for i in range(len(lg_w) - 1):
        m = max(2, int(math.ceil((lg_w[i + 1] - lg_w[i]) / 0.01)) + 1)
        pieces.append(np.linspace(lg_w[i], lg_w[i + 1], m)[1:])
    grid = np.concatenate(pieces)
    omega = np.exp(grid)

    positive = im > 0
    if positive.all():
        im_grid = np.exp(np.interp(grid, lg_w, np.log(im)))
    elif positive.any():
        # log-log interpolation breaks at zeros; fall back to linear there
        im_grid = np.interp(grid, lg_w, im)
        lo = np.searchsorted(lg_w, grid, side="right") - 1
        lo = np.clip(lo, 0, len(lg_w) - 2)
        ok = positive[lo] & positive[lo + 1]
        if ok.any():
            im_grid[ok] = np.exp(np.interp(grid[ok], lg_w[positive],
                                           np.log(im[positive])))
    else:
        im_grid = np.zeros_like(grid)

    # trapezoid in x = ln omega: int f domega = int f * omega dx
    integrand = im_grid * omega**2 / (omega**2 + xi**2)
    i_tab = float(np.trapezoid(integrand, grid))

    ex = extrapolation
    if isinstance(ex, DrudeTail):
        g = ex.relaxation.gamma(temperature)
        i_low = _drude_tail_integral(ex.omega_p, g, table.omega[0], xi)
        return 1.0 + (2.0 / math.pi) * (i_tab + i_low)
    if isinstance(ex, PlasmaTail):
        return 1.0 + ex.omega_p**2 / xi**2 + (2.0 / math.pi) * i_tab
    raise MaterialError(f"unknown extrapolation {ex!r}")


# ---------------------------------------------------------------------------
# Stock materials
# ---------------------------------------------------------------------------

def gold_relaxation() -> RelaxationLaw:
    return RelaxationLaw(GOLD_GAMMA_ROOM_EV * EV_TO_RAD_S)


def gold_drude() -> Drude:
    """Gold with omega_p = 9 eV and the standard relaxation law."""
    return Drude(GOLD_OMEGA_P_EV * EV_TO_RAD_S, gold_relaxation())


def gold_plasma() -> Plasma:
    """Gold in the dissipationless approach, omega_p = 9 eV."""
    return Plasma(GOLD_OMEGA_P_EV * EV_TO_RAD_S)


def sapphire() -> Oscillator:
    """Two-oscillator model of Al2O3: eps(0) just above 10."""
    return Oscillator((7.03, 2.072), (1.0e14, 2.0e16))

"""Closed-form limits, expansions, and bounds for the film free energy.

These serve three purposes: fast paths in regimes where the full engine
is wasteful, independent cross-validation oracles for the engine, and
the log-space route for the dissipationless film whose free energy
underflows double precision (|F| ~ 10^-3566 at 100 um).

Dimensionless variables: omega_p_tilde = 2 a omega_p / c,
zeta_1 = 4 pi a k_B T / (hbar c), gamma_tilde = 2 a gamma / c.
Validity thresholds are enforced as errors: these formulas silently
degrade outside their derivation assumptions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .constants import C_LIGHT, HBAR, K_B, LOG10_E
from .quadrature import integrate
from .specfun import (
    LogMagnitude,
    bessel_k2_scaled,
    log_sum_exp_series,
    polylog,
    zeta3,
)

EXPANSION_MIN_OMEGA_P_TILDE = 5.0
TAIL_MIN_OMEGA_P_TILDE = 91.0


class AsymptoticDomainError(ValueError):
    """Arguments outside the validity domain of an expansion."""


@dataclass(frozen=True)
class AsymptoticInput:
    """Geometry/material bundle with the derived dimensionless scales."""

    a: float
    T: float
    omega_p: Optional[float] = None
    gamma: Optional[float] = None

    def __post_init__(self):
        if not (self.a > 0.0 and self.T > 0.0):
            raise AsymptoticDomainError("a and T must be positive")

    @property
    def omega_p_tilde(self) -> float:
        if self.omega_p is None:
            raise AsymptoticDomainError("omega_p required for plasma branches")
        return 2.0 * self.a * self.omega_p / C_LIGHT

    @property
    def zeta_1(self) -> float:
        return 4.0 * math.pi * self.a * K_B * self.T / (HBAR * C_LIGHT)

    @property
    def gamma_tilde(self) -> float:
        if self.gamma is None:
            raise AsymptoticDomainError("gamma required for Drude branches")
        return 2.0 * self.a * self.gamma / C_LIGHT


def _w_tilde(a: float, omega_p: float) -> float:
    if omega_p is None or omega_p <= 0.0:
        raise AsymptoticDomainError("omega_p must be positive")
    return 2.0 * a * omega_p / C_LIGHT


def _zeta1(a: float, T: float) -> float:
    return 4.0 * math.pi * a * K_B * T / (HBAR * C_LIGHT)


def _require(cond: bool, msg: str):
    if not cond:
        raise AsymptoticDomainError(msg)


# ---------------------------------------------------------------------------
# Classical (Drude) zero-frequency values
# ---------------------------------------------------------------------------

def classical_drude_free_energy(a: float, T: float) -> float:
    """High-T / classical value of the Drude-film free energy, J/m^2.

    Independent of the plate materials: the film's zero-frequency TM
    reflection product is unity whatever bounds it.
    """
    _require(a > 0 and T > 0, "a and T must be positive")
    return -K_B * T * zeta3() / (16.0 * math.pi * a * a)


def classical_drude_pressure(a: float, T: float) -> float:
    """Classical Drude-film pressure -k_B T zeta(3)/(8 pi a^3), Pa."""
    _require(a > 0 and T > 0, "a and T must be positive")
    return -K_B * T * zeta3() / (8.0 * math.pi * a**3)


def ideal_metal_limits(approach: str, a: float, T: float) -> float:
    """omega_p -> inf free energy: classical for Drude, zero for plasma."""
    if approach == "drude":
        return classical_drude_free_energy(a, T)
    if approach == "plasma":
        return 0.0
    raise AsymptoticDomainError(f"approach must be drude|plasma, got {approach!r}")


# ---------------------------------------------------------------------------
# Plasma-film l = 0 terms
# ---------------------------------------------------------------------------

def plasma_l0_tm(a: float, T: float, omega_p: float) -> float:
    """Zero-frequency TM term of the plasma film in vacuum, J/m^2.

    Closed polylogarithm form; exact for all omega_p_tilde.
    """
    w = _w_tilde(a, omega_p)
    z = math.exp(-w)
    return -K_B * T / (16.0 * math.pi * a * a) * (
        w * polylog(2, z) + polylog(3, z))


def _te_static_reflection(u: np.ndarray, w: float) -> np.ndarray:
    q = np.sqrt(u * u + w * w)
    r = (q - u) / (q + u)
    return r * r


def _plasma_te_exact_dimensionless(w: float) -> float:
    """int_0^inf u ln(1 - r_TE^2(u) e^(-sqrt(u^2+w^2))) du for w <= 700,
    switching to an e^(-w)-scaled integrand once the direct exponential
    is too small to resolve."""
    if w <= 600.0:
        def f(u):
            x = np.sqrt(u * u + w * w)
            with np.errstate(under="ignore"):
                return u * np.log1p(-_te_static_reflection(u, w) * np.exp(-x))
        val, _ = integrate(f, sorted({0.0, w}), 1e-12)
        return val
    # ln(1 - y) = -y up to O(e^-w) relative error; pull e^-w out
    def g(u):
        x_minus_w = u * u / (np.sqrt(u * u + w * w) + w)
        return u * _te_static_reflection(u, w) * np.exp(-x_minus_w)
    scaled, _ = integrate(g, [0.0, w], 1e-12)
    return -scaled * math.exp(-w)


def plasma_l0_te(a: float, T: float, omega_p: float,
                 variant: str = "exact") -> float:
    """Zero-frequency TE term of the plasma film in vacuum, J/m^2.

    variant='exact' integrates the static TE reflection directly;
    'expansion19' is the Bessel-function expansion; 'leading20' keeps
    only the main term.  The expansions require omega_p_tilde >= 5.
    """
    w = _w_tilde(a, omega_p)
    pref = K_B * T / (16.0 * math.pi * a * a)
    if variant == "exact":
        _require(w <= 700.0, "linear-space exact TE needs omega_p_tilde <= 700; "
                             "use plasma_l0_te_log")
        return pref * _plasma_te_exact_dimensionless(w)
    _require(w >= EXPANSION_MIN_OMEGA_P_TILDE,
             f"expansion variants need omega_p_tilde >= 5, got {w:g}")
    if variant == "expansion19":
        return -pref * _expansion19_bracket(w) * math.exp(-w)
    if variant == "leading20":
        return -pref * w * (1.0 - math.sqrt(8.0 * math.pi / w) + 17.0 / w) \
            * math.exp(-w)
    raise AsymptoticDomainError(
        f"variant must be exact|expansion19|leading20, got {variant!r}")


def _expansion19_bracket(w: float) -> float:
    # [w e^-w - 4 w K_2(w) + (17 + 48/w + 48/w^2) e^-w] with e^-w factored
    # out; K_2 enters through its e^w-scaled form so the bracket stays O(w).
    return w - 4.0 * w * bessel_k2_scaled(w) + 17.0 + 48.0 / w + 48.0 / (w * w)


def plasma_l0_combined(a: float, T: float, omega_p: float) -> float:
    """Leading l = 0 term, TM and TE together: -(k_B T/(8 pi a^2)) w e^-w."""
    w = _w_tilde(a, omega_p)
    _require(w >= EXPANSION_MIN_OMEGA_P_TILDE,
             f"plasma_l0_combined needs omega_p_tilde >= 5, got {w:g}")
    return -K_B * T / (8.0 * math.pi * a * a) * w * math.exp(-w)


def plasma_l0_pressure(a: float, T: float, omega_p: float) -> float:
    """Leading l = 0 pressure of the plasma film: -(k_B T/(8 pi a^3)) w^2 e^-w."""
    w = _w_tilde(a, omega_p)
    _require(w >= EXPANSION_MIN_OMEGA_P_TILDE,
             f"plasma_l0_pressure needs omega_p_tilde >= 5, got {w:g}")
    return -K_B * T / (8.0 * math.pi * a**3) * w * w * math.exp(-w)


# ---------------------------------------------------------------------------
# Plasma-film l >= 1 tail
# ---------------------------------------------------------------------------

def _gaussian_sum(a: float, T: float, w: float) -> float:
    """sum_{l>=1} exp(-zeta_l^2/(2 w)), truncated at 1e-16 relative."""
    z1 = _zeta1(a, T)
    total = 0.0
    l = 0
    while True:
        l += 1
        t = math.exp(-(z1 * l) ** 2 / (2.0 * w))
        total += t
        if t < 1e-16 * total or t == 0.0:
            return total
        if l > 10**8:  # unreachable for physical inputs; guards T -> 0 abuse
            raise AsymptoticDomainError("plasma tail sum did not converge")


def plasma_tail_l_ge_1(a: float, T: float, omega_p: float) -> float:
    """Leading contribution of all l >= 1 terms for a thick plasma film.

    -(k_B T/(4 pi a^2)) w e^-w sum_l exp(-zeta_l^2/(2w)); derived for
    omega_p_tilde >= 91 (film thicknesses of a micrometer and up).
    """
    w = _w_tilde(a, omega_p)
    _require(w >= TAIL_MIN_OMEGA_P_TILDE,
             f"plasma_tail_l_ge_1 needs omega_p_tilde >= 91, got {w:g}")
    return -K_B * T / (4.0 * math.pi * a * a) * w * math.exp(-w) \
        * _gaussian_sum(a, T, w)


# ---------------------------------------------------------------------------
# Drude-film tail bound
# ---------------------------------------------------------------------------

def drude_tail_bound(a: float, T: float, omega_p: float, gamma: float,
                     constant: str = "generalized") -> float:
    """Dimensionless bound on the Drude film's l >= 1 Matsubara sum.

    2 sum_l [Li_3(z_l) + sqrt(zeta_l^2 + w^2) Li_2(z_l)] with
    z_l = exp(-sqrt(zeta_l^2 + c w^2)), in the units where the l = 0
    term is zeta(3)/2 ~ 0.601.  The constant c is the minimum ratio of
    the Drude to plasma permittivity over the Matsubara frequencies:
    0.82, the fixed gold room-temperature value ('fixed82'), or
    recomputed as 1/(1 + gamma_tilde/zeta_1) from the actual parameters
    ('generalized', default).
    """
    w = _w_tilde(a, omega_p)
    _require(w >= EXPANSION_MIN_OMEGA_P_TILDE,
             f"drude_tail_bound needs omega_p_tilde >= 5, got {w:g}")
    z1 = _zeta1(a, T)
    if constant == "fixed82":
        c = 0.82
    elif constant == "generalized":
        _require(gamma is not None and gamma > 0, "gamma must be positive")
        g_t = 2.0 * a * gamma / C_LIGHT
        c = 1.0 / (1.0 + g_t / z1)
    else:
        raise AsymptoticDomainError(
            f"constant must be fixed82|generalized, got {constant!r}")
    total = 0.0
    l = 0
    while True:
        zl2 = (z1 * l) ** 2
        z = math.exp(-math.sqrt(zl2 + c * w * w))
        t = 2.0 * (polylog(3, z) + math.sqrt(zl2 + w * w) * polylog(2, z))
        total += t
        if (l > 0 and t < 1e-16 * total) or t == 0.0:
            return total
        l += 1


# ---------------------------------------------------------------------------
# Log-space API
# ---------------------------------------------------------------------------

def classical_drude_free_energy_log(a: float, T: float) -> LogMagnitude:
    return LogMagnitude.from_value(classical_drude_free_energy(a, T))


def classical_drude_pressure_log(a: float, T: float) -> LogMagnitude:
    return LogMagnitude.from_value(classical_drude_pressure(a, T))


def plasma_l0_tm_log(a: float, T: float, omega_p: float) -> LogMagnitude:
    w = _w_tilde(a, omega_p)
    if w <= 600.0:
        return LogMagnitude.from_value(plasma_l0_tm(a, T, omega_p))
    # bracket -> (w + 1) e^-w with O(e^-w) relative corrections
    pref = K_B * T / (16.0 * math.pi * a * a)
    return LogMagnitude(math.log10(pref * (w + 1.0)) - w * LOG10_E, -1)


def plasma_l0_te_log(a: float, T: float, omega_p: float,
                     variant: str = "exact") -> LogMagnitude:
    w = _w_tilde(a, omega_p)
    pref = K_B * T / (16.0 * math.pi * a * a)
    if variant == "exact":
        if w <= 600.0:
            return LogMagnitude.from_value(plasma_l0_te(a, T, omega_p, "exact"))
        def g(u):
            x_minus_w = u * u / (np.sqrt(u * u + w * w) + w)
            return u * _te_static_reflection(u, w) * np.exp(-x_minus_w)
        scaled, _ = integrate(g, [0.0, w], 1e-12)
        return LogMagnitude(math.log10(pref * scaled) - w * LOG10_E, -1)
    _require(w >= EXPANSION_MIN_OMEGA_P_TILDE,
             f"expansion variants need omega_p_tilde >= 5, got {w:g}")
    if variant == "expansion19":
        b = _expansion19_bracket(w)
    elif variant == "leading20":
        b = w * (1.0 - math.sqrt(8.0 * math.pi / w) + 17.0 / w)
    else:
        raise AsymptoticDomainError(
            f"variant must be exact|expansion19|leading20, got {variant!r}")
    if b == 0.0:
        return LogMagnitude(-math.inf, 0)
    sign = -1 if b > 0 else 1
    return LogMagnitude(math.log10(pref * abs(b)) - w * LOG10_E, sign)


def plasma_l0_combined_log(a: float, T: float, omega_p: float) -> LogMagnitude:
    w = _w_tilde(a, omega_p)
    _require(w >= EXPANSION_MIN_OMEGA_P_TILDE,
             f"plasma_l0_combined needs omega_p_tilde >= 5, got {w:g}")
    pref = K_B * T / (8.0 * math.pi * a * a)
    return LogMagnitude(math.log10(pref * w) - w * LOG10_E, -1)


def plasma_l0_pressure_log(a: float, T: float, omega_p: float) -> LogMagnitude:
    w = _w_tilde(a, omega_p)
    _require(w >= EXPANSION_MIN_OMEGA_P_TILDE,
             f"plasma_l0_pressure needs omega_p_tilde >= 5, got {w:g}")
    pref = K_B * T / (8.0 * math.pi * a**3)
    return LogMagnitude(math.log10(pref * w * w) - w * LOG10_E, -1)


def plasma_tail_l_ge_1_log(a: float, T: float, omega_p: float) -> LogMagnitude:
    w = _w_tilde(a, omega_p)
    _require(w >= TAIL_MIN_OMEGA_P_TILDE,
             f"plasma_tail_l_ge_1 needs omega_p_tilde >= 91, got {w:g}")
    g = _gaussian_sum(a, T, w)
    if g == 0.0:
        return LogMagnitude(-math.inf, 0)
    pref = K_B * T / (4.0 * math.pi * a * a)
    return LogMagnitude(math.log10(pref * w * g) - w * LOG10_E, -1)


def drude_tail_bound_log(a: float, T: float, omega_p: float, gamma: float,
                         constant: str = "generalized") -> LogMagnitude:
    return LogMagnitude.from_value(
        drude_tail_bound(a, T, omega_p, gamma, constant))


# ---------------------------------------------------------------------------
# Engine log-space routes (deep plasma underflow)
# ---------------------------------------------------------------------------

def plasma_film_free_energy_log(a: float, T: float,
                                omega_p: float) -> LogMagnitude:
    """Leading log-magnitude of the plasma-film free energy, w_tilde > 600.

    l = 0 main term plus the Gaussian-sum tail of l >= 1; plate
    corrections are subleading at this depth of suppression.
    """
    return log_sum_exp_series([
        plasma_l0_combined_log(a, T, omega_p),
        plasma_tail_l_ge_1_log(a, T, omega_p),
    ])


def plasma_film_pressure_log(a: float, T: float,
                             omega_p: float) -> LogMagnitude:
    """Leading log-magnitude of the plasma-film pressure, w_tilde > 600.

    The same Gaussian tail factor multiplies the l = 0 pressure term:
    differentiating the free-energy asymptotics in a keeps only the
    w-tilde derivative of the exponent at leading order.
    """
    factor = 1.0 + 2.0 * _gaussian_sum(a, T, _w_tilde(a, omega_p))
    return plasma_l0_pressure_log(a, T, omega_p).scaled(factor)

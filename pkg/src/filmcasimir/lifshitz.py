"""Finite-temperature Lifshitz free energy and pressure of a thin film.

Geometry: a metallic film of thickness a (medium 0) bounded by two thick
plates (media +1/-1), which may be vacuum.  The free energy per unit
area is a Matsubara sum over imaginary frequencies xi_l = 2 pi k_B T l /
hbar; each term is a transverse-momentum integral over the TM and TE
reflection channels, with the l = 0 term weighted by 1/2 and dispatched
on how the permittivities behave at zero frequency.

All dimensionless work uses u = 2 a k_perp, zeta_l = 2 a xi_l / c and
omega_p_tilde = 2 a omega_p / c; the exponent in every integrand is the
film-side momentum sqrt(u^2 + eps_film zeta_l^2), which is what makes
the dissipationless (plasma) film exponentially dark at l = 0.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from . import asymptotics
from .constants import C_LIGHT, HBAR, K_B, matsubara_frequency
from .materials import (
    DielectricModel,
    DrudeLike,
    FiniteEpsilon,
    PlasmaLike,
    Vacuum,
    evaluate,
    zero_frequency_class,
)
from .quadrature import QuadratureError, integrate
from .specfun import LogMagnitude, polylog_signed

MAX_MATSUBARA_TERMS = 100000
# When the Matsubara spacing is much finer than the O(1) decay scales of
# the summand, the remaining sum is completed as a continuum integral
# (midpoint Euler-Maclaurin; correction ~ zeta_1^2 g'/24) instead of
# grinding tens of thousands of terms.
CONTINUUM_SWITCH_L = 2048
CONTINUUM_SWITCH_ZETA1 = 0.05
MAX_LINEAR_THICKNESS = 50e-6
LOG_SPACE_OMEGA_P_TILDE = 600.0


class ValidationError(ValueError):
    """Invalid engine inputs (tolerance, geometry, temperature)."""


class EngineError(RuntimeError):
    """The engine could not certify the requested tolerance."""


# ---------------------------------------------------------------------------
# Configuration and result types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LayeredConfig:
    """Film material, bounding plates, thickness (m), temperature (K)."""

    film: DielectricModel
    thickness: float
    temperature: float
    plate_left: DielectricModel = Vacuum()
    plate_right: DielectricModel = Vacuum()

    def __post_init__(self):
        if not (self.thickness > 0.0) or not math.isfinite(self.thickness):
            raise ValidationError(f"thickness must be positive, got {self.thickness}")
        if not (self.temperature > 0.0) or not math.isfinite(self.temperature):
            raise ValidationError(
                f"temperature must be positive, got {self.temperature}")

    @classmethod
    def symmetric(cls, film: DielectricModel, plate: DielectricModel,
                  thickness: float, temperature: float) -> "LayeredConfig":
        return cls(film, thickness, temperature, plate, plate)


@dataclass(frozen=True)
class MatsubaraContext:
    """Per-term data: frequencies and the three permittivities."""

    l: int
    xi: float
    zeta: float
    eps_film: float
    eps_left: float
    eps_right: float


@dataclass(frozen=True)
class MatsubaraTermResult:
    """Dimensionless contribution of one l >= 1 term, split by polarization."""

    l: int
    tm: float
    te: float
    quad_error: float


@dataclass(frozen=True)
class FreeEnergyResult:
    """Free energy per unit area with its l = 0 / tail decomposition.

    value = l0_tm + l0_te + tail_l_ge_1 exactly; truncation_error bounds
    the neglected remainder of the Matsubara sum plus accumulated
    quadrature error (J/m^2).
    """

    value: float
    log_magnitude: LogMagnitude
    l0_tm: float
    l0_te: float
    tail_l_ge_1: float
    l_max_used: int
    truncation_error: float


@dataclass(frozen=True)
class PressureResult:
    """Pressure (Pa) with the same decomposition contract as the free energy."""

    value: float
    l0: float
    tail_l_ge_1: float
    l_max_used: int
    truncation_error: float
    log_magnitude: Optional[LogMagnitude] = None


# ---------------------------------------------------------------------------
# Permittivities and contexts
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=1 << 18)
def _eps_cached(model: DielectricModel, temperature: float, l: int) -> float:
    return float(evaluate(model, matsubara_frequency(temperature, l), temperature))


def make_context(config: LayeredConfig, l: int) -> MatsubaraContext:
    """Evaluate the three permittivities at xi_l (memoized per model, T, l)."""
    if l < 1:
        raise ValidationError("contexts exist for l >= 1; l = 0 has its own dispatch")
    xi = matsubara_frequency(config.temperature, l)
    zeta = 2.0 * config.thickness * xi / C_LIGHT
    T = config.temperature
    return MatsubaraContext(
        l, xi, zeta,
        _eps_cached(config.film, T, l),
        _eps_cached(config.plate_left, T, l),
        _eps_cached(config.plate_right, T, l),
    )


def reflection_coefficients(config: LayeredConfig, l: int, u):
    """TM and TE reflection coefficients at xi_l for transverse momentum u.

    Returns (r_tm_left, r_tm_right, r_te_left, r_te_right); u may be an
    ndarray.  Conventions: r_tm = (eps_plate k_film - eps_film k_plate) /
    (eps_plate k_film + eps_film k_plate), r_te = (k_film - k_plate) /
    (k_film + k_plate), with k = sqrt(u^2 + eps zeta_l^2).
    """
    ctx = make_context(config, l)
    u = np.asarray(u, dtype=float)
    z2 = ctx.zeta**2
    kf = np.sqrt(u * u + ctx.eps_film * z2)
    tm = []
    te = []
    for ep in (ctx.eps_left, ctx.eps_right):
        kp = np.sqrt(u * u + ep * z2)
        tm.append((ep * kf - ctx.eps_film * kp) / (ep * kf + ctx.eps_film * kp))
        te.append((kf - kp) / (kf + kp))
    return tm[0], tm[1], te[0], te[1]


def _film_momentum_scale(config: LayeredConfig) -> float:
    """omega_p_tilde of the film when it has a plasma frequency, else 0."""
    zfc = zero_frequency_class(config.film, config.temperature)
    if isinstance(zfc, (DrudeLike, PlasmaLike)):
        return 2.0 * config.thickness * zfc.omega_p / C_LIGHT
    return 0.0


# ---------------------------------------------------------------------------
# Integrands (dimensionless, one Matsubara frequency)
# ---------------------------------------------------------------------------

def _channel_integrand(eps_f: float, eps_l: float, eps_r: float,
                       zeta: float, pol: str, kind: str) -> Callable:
    """u-integrand of one polarization: S_l summand for kind='energy',
    Lambda_l summand for kind='pressure'."""
    z2 = zeta * zeta

    def f(u: np.ndarray) -> np.ndarray:
        kf = np.sqrt(u * u + eps_f * z2)
        kl = np.sqrt(u * u + eps_l * z2)
        kr = np.sqrt(u * u + eps_r * z2)
        if pol == "tm":
            rl = (eps_l * kf - eps_f * kl) / (eps_l * kf + eps_f * kl)
            rr = (eps_r * kf - eps_f * kr) / (eps_r * kf + eps_f * kr)
        else:
            rl = (kf - kl) / (kf + kl)
            rr = (kf - kr) / (kf + kr)
        with np.errstate(under="ignore"):
            w = rl * rr * np.exp(-kf)
        if kind == "energy":
            return u * np.log1p(-w)
        return kf * u * w / (1.0 - w)

    return f


def _term_from_eps(eps_f: float, eps_l: float, eps_r: float, zeta: float,
                   breakpoints: list, quad_tol: float, kind: str):
    """(tm, te, quad_error) of the dimensionless term at one frequency."""
    out = []
    err = 0.0
    for pol in ("tm", "te"):
        f = _channel_integrand(eps_f, eps_l, eps_r, zeta, pol, kind)
        try:
            v, e = integrate(f, breakpoints, quad_tol)
        except QuadratureError as exc:
            raise EngineError(
                f"momentum integral failed at zeta={zeta:g} ({pol}): {exc}"
            ) from exc
        out.append(v)
        err += e
    return out[0], out[1], err


def _u_breakpoints(config: LayeredConfig, zeta: float) -> list:
    pts = {0.0, zeta, _film_momentum_scale(config)}
    return sorted(p for p in pts if p >= 0.0 and p == p)


def matsubara_term(config: LayeredConfig, l: int,
                   quad_tol: float = 1e-10) -> MatsubaraTermResult:
    """Dimensionless S_l contribution of one Matsubara frequency, l >= 1."""
    ctx = make_context(config, l)
    tm, te, err = _term_from_eps(
        ctx.eps_film, ctx.eps_left, ctx.eps_right, ctx.zeta,
        _u_breakpoints(config, ctx.zeta), quad_tol, "energy")
    return MatsubaraTermResult(l, tm, te, err)


def _pressure_term(config: LayeredConfig, l: int, quad_tol: float):
    ctx = make_context(config, l)
    return _term_from_eps(
        ctx.eps_film, ctx.eps_left, ctx.eps_right, ctx.zeta,
        _u_breakpoints(config, ctx.zeta), quad_tol, "pressure")


# ---------------------------------------------------------------------------
# Zero-frequency dispatch
# ---------------------------------------------------------------------------

def _static_scales(config: LayeredConfig):
    """Map each layer to (s, c): eps ~ c / zeta^s as zeta -> 0.

    s = 0 finite dielectric (c = eps(0)); s = 1 Drude-like with
    c = (2a/c_light) omega_p^2 / gamma; s = 2 plasma-like with
    c = omega_p_tilde^2.  All c values are dimensionless.
    """
    geom = 2.0 * config.thickness / C_LIGHT
    out = []
    for model in (config.film, config.plate_left, config.plate_right):
        zfc = zero_frequency_class(model, config.temperature)
        if isinstance(zfc, FiniteEpsilon):
            out.append((0, zfc.eps0))
        elif isinstance(zfc, DrudeLike):
            out.append((1, geom * zfc.omega_p**2 / zfc.gamma))
        else:
            out.append((2, (geom * zfc.omega_p) ** 2))
    return out


def _tm_side_constant(sf, cf, sp, cp):
    """(is_constant, value) of the static TM reflection for one side.

    The layer with the faster-diverging static permittivity wins: its
    side of the TM numerator dominates uniformly in u.
    """
    if sp > sf:
        return True, 1.0
    if sp < sf:
        return True, -1.0
    if sf < 2:
        return True, (cp - cf) / (cp + cf)
    if cp == cf:
        return True, 0.0
    return False, None


def _l0_reflections(scales, u: np.ndarray):
    """(rho_tm, rho_te, x0) at zeta = 0 for the quadrature fallback."""
    (sf, cf), (sl, cl), (sr, cr) = scales
    kf = np.sqrt(u * u + cf) if sf == 2 else u
    rho_tm = np.ones_like(u)
    rho_te = np.ones_like(u)
    for sp, cp in ((sl, cl), (sr, cr)):
        kp = np.sqrt(u * u + cp) if sp == 2 else u
        const, val = _tm_side_constant(sf, cf, sp, cp)
        rho_tm = rho_tm * (val if const
                           else (cp * kf - cf * kp) / (cp * kf + cf * kp))
        if sf == 2 or sp == 2:
            rho_te = rho_te * (kf - kp) / (kf + kp)
        else:
            rho_te = rho_te * 0.0
    return rho_tm, rho_te, kf


def _l0_breakpoints(scales) -> list:
    pts = {0.0}
    for s, c in scales:
        if s == 2:
            pts.add(math.sqrt(c))
    return sorted(pts)


def _l0_tm_closed_form(scales, kind: str):
    """Closed form of the (unhalved) l = 0 TM integral when the static
    reflection product is u-independent; None when quadrature is needed.

    With z = rho e^(-w), w = omega_p_tilde of a plasma-class film (else 0):
      energy:   int u ln(1 - rho e^(-sqrt(u^2+w^2))) du
                  = -[w Li_2(z) + Li_3(z)]
      pressure: int sqrt(u^2+w^2) u rho e^(-x)/(1 - rho e^(-x)) du
                  = w^2 Li_1(z) + 2 w Li_2(z) + 2 Li_3(z)
    """
    (sf, cf), (sl, cl), (sr, cr) = scales
    ok_l, r_l = _tm_side_constant(sf, cf, sl, cl)
    ok_r, r_r = _tm_side_constant(sf, cf, sr, cr)
    if not (ok_l and ok_r):
        return None
    rho = r_l * r_r
    w = math.sqrt(cf) if sf == 2 else 0.0
    z = rho * math.exp(-w)
    if kind == "energy":
        return -(w * polylog_signed(2, z) + polylog_signed(3, z))
    if w == 0.0:
        return 2.0 * polylog_signed(3, rho)
    li1 = -math.log1p(-z)
    return w * w * li1 + 2.0 * w * polylog_signed(2, z) \
        + 2.0 * polylog_signed(3, z)


def zero_frequency_term(config: LayeredConfig, quad_tol: float = 1e-10,
                        kind: str = "energy"):
    """Half-weighted l = 0 term, dimensionless, as (tm, te, quad_error).

    TM goes through closed forms whenever the static reflection product
    is u-independent (every metal-film case); the TE piece vanishes
    identically unless some layer is plasma-like, in which case it is
    always computed by explicit quadrature.
    """
    scales = _static_scales(config)
    pts = _l0_breakpoints(scales)
    err = 0.0

    tm = _l0_tm_closed_form(scales, kind)
    if tm is None:
        def f_tm(u):
            rho_tm, _, x0 = _l0_reflections(scales, u)
            with np.errstate(under="ignore"):
                w = rho_tm * np.exp(-x0)
            if kind == "energy":
                return u * np.log1p(-w)
            return x0 * u * w / (1.0 - w)
        tm, e = integrate(f_tm, pts, quad_tol)
        err += e

    if all(s < 2 for s, _ in scales):
        te = 0.0
    else:
        def f_te(u):
            _, rho_te, x0 = _l0_reflections(scales, u)
            with np.errstate(under="ignore"):
                w = rho_te * np.exp(-x0)
            if kind == "energy":
                return u * np.log1p(-w)
            return x0 * u * w / (1.0 - w)
        te, e = integrate(f_te, pts, quad_tol)
        err += e
    return 0.5 * tm, 0.5 * te, 0.5 * err


# ---------------------------------------------------------------------------
# Series summation
# ---------------------------------------------------------------------------

def _neumaier_add(total: float, comp: float, term: float):
    t = total + term
    if abs(total) >= abs(term):
        comp += (total - t) + term
    else:
        comp += (term - t) + total
    return t, comp


def _sum_series(term_fn: Callable[[int], tuple],
                continuum_fn: Optional[Callable],
                base_magnitude: float,
                zeta1: float,
                tol: float):
    """Sum term_fn(l) for l >= 1 under the engine's truncation policy.

    Stops once 5 consecutive terms fall below tol * |running total| and
    the geometric tail envelope is below tol/2 * |total|; switches to
    continuum completion when the Matsubara spacing is very fine; raises
    EngineError at the hard term cap.  Returns (sum, l_max,
    truncation_error, quadrature_error) in term_fn's units.
    """
    total, comp = 0.0, 0.0
    quad_err = 0.0
    consec = 0
    prev_mag = None
    l = 0
    while True:
        l += 1
        if l > MAX_MATSUBARA_TERMS:
            raise EngineError(
                f"Matsubara sum exceeded {MAX_MATSUBARA_TERMS} terms without "
                f"meeting tol={tol:g} (zeta_1={zeta1:g})")
        t, qe = term_fn(l)
        total, comp = _neumaier_add(total, comp, t)
        quad_err += qe
        scale = abs(total + comp) + base_magnitude
        mag = abs(t)
        if mag == 0.0:
            envelope = 0.0
        elif prev_mag is not None and 0.0 < mag < prev_mag:
            q = mag / prev_mag
            envelope = mag * q / (1.0 - q)
        else:
            envelope = math.inf
        prev_mag = mag
        if mag <= tol * scale:
            consec += 1
            if consec >= 5 and envelope <= 0.5 * tol * scale:
                return total + comp, l, envelope, quad_err
        else:
            consec = 0
        if (continuum_fn is not None and l >= CONTINUUM_SWITCH_L
                and zeta1 <= CONTINUUM_SWITCH_ZETA1):
            tail, tail_err = continuum_fn(l)
            total, comp = _neumaier_add(total, comp, tail)
            return total + comp, l, tail_err, quad_err


def _continuum_tail(config: LayeredConfig, l_from: int, zeta1: float,
                    quad_tol: float, kind: str):
    """Replace sum_{l > l_from} by (1/zeta_1) integral over zeta.

    Midpoint rule in Euler-Maclaurin form: the integral starts half a
    spacing above the last summed frequency, and the leading correction
    O(zeta_1^2 g'/24) per step is folded into the error bound.
    """
    geom = C_LIGHT / (2.0 * config.thickness)
    z_start = zeta1 * (l_from + 0.5)
    T = config.temperature

    def g(z: float) -> float:
        xi = z * geom
        tm, te, _ = _term_from_eps(
            float(evaluate(config.film, xi, T)),
            float(evaluate(config.plate_left, xi, T)),
            float(evaluate(config.plate_right, xi, T)),
            z, _u_breakpoints(config, z), quad_tol * 10.0, kind)
        return tm + te

    def g_vec(zs: np.ndarray) -> np.ndarray:
        return np.array([g(float(z)) for z in zs])

    w = _film_momentum_scale(config)
    pts = sorted({z_start, z_start + max(w, 10.0)})
    try:
        integral, ierr = integrate(g_vec, pts, quad_tol * 10.0,
                                   max_segments=512)
    except QuadratureError as exc:
        raise EngineError(f"continuum tail integration failed: {exc}") from exc
    em_err = abs(g(z_start + zeta1) - g(z_start)) / 24.0
    return integral / zeta1, ierr / zeta1 + em_err


# ---------------------------------------------------------------------------
# Public engine entry points
# ---------------------------------------------------------------------------

def _validate(config: LayeredConfig, tol: float, log_space: bool):
    if not (0.0 < tol <= 1e-2):
        raise ValidationError(f"tol must lie in (0, 1e-2], got {tol}")
    if config.thickness > MAX_LINEAR_THICKNESS and not log_space:
        raise ValidationError(
            f"thickness {config.thickness:g} m exceeds the linear-mode limit "
            f"{MAX_LINEAR_THICKNESS:g} m; pass log_space=True")


def _deep_plasma(config: LayeredConfig):
    """PlasmaLike film class when its omega_p_tilde is past the linear range."""
    zfc = zero_frequency_class(config.film, config.temperature)
    if isinstance(zfc, PlasmaLike):
        w = 2.0 * config.thickness * zfc.omega_p / C_LIGHT
        if w > LOG_SPACE_OMEGA_P_TILDE:
            return zfc
    return None


def free_energy(config: LayeredConfig, tol: float = 1e-6,
                log_space: bool = False) -> FreeEnergyResult:
    """Casimir free energy per unit area of the film, J/m^2.

    Parameters
    ----------
    config : LayeredConfig
        Film/plate materials, thickness (m), temperature (K).
    tol : float
        Relative truncation target for the Matsubara sum, in (0, 1e-2].
        Momentum integrals run at tol/10.
    log_space : bool
        Allow thicknesses beyond 50 um.  Independently of this flag, a
        plasma-class film with omega_p_tilde > 600 is evaluated through
        the leading-asymptotics log-magnitude route (the linear value
        underflows double precision); `value` is then reported as 0.0
        and only `log_magnitude` is meaningful.

    Raises
    ------
    ValidationError
        Bad tolerance, or thickness beyond 50 um without log_space.
    EngineError
        Tolerance could not be certified (term cap or quadrature).
    """
    _validate(config, tol, log_space)
    a, T = config.thickness, config.temperature
    pf = K_B * T / (8.0 * math.pi * a * a)

    deep = _deep_plasma(config)
    if deep is not None:
        lm = asymptotics.plasma_film_free_energy_log(a, T, deep.omega_p)
        return FreeEnergyResult(0.0, lm, 0.0, 0.0, 0.0, 0, 0.0)

    quad_tol = tol / 10.0
    s0_tm, s0_te, q0 = zero_frequency_term(config, quad_tol, "energy")
    zeta1 = 2.0 * a * matsubara_frequency(T, 1) / C_LIGHT

    def term(l: int):
        r = matsubara_term(config, l, quad_tol)
        return r.tm + r.te, r.quad_error

    def continuum(l_from: int):
        return _continuum_tail(config, l_from, zeta1, quad_tol, "energy")

    s_sum, l_max, trunc, qsum = _sum_series(
        term, continuum, abs(s0_tm + s0_te), zeta1, tol)

    l0_tm = pf * s0_tm
    l0_te = pf * s0_te
    tail = pf * s_sum
    value = l0_tm + l0_te + tail
    return FreeEnergyResult(
        value=value,
        log_magnitude=LogMagnitude.from_value(value),
        l0_tm=l0_tm,
        l0_te=l0_te,
        tail_l_ge_1=tail,
        l_max_used=l_max,
        truncation_error=pf * (trunc + qsum + q0),
    )


def pressure(config: LayeredConfig, tol: float = 1e-6,
             log_space: bool = False) -> PressureResult:
    """Casimir pressure on the film faces, Pa (negative = attractive).

    Same Matsubara machinery as free_energy with the pressure integrand
    sqrt(u^2 + eps_film zeta^2) u R e^(-x)/(1 - R e^(-x)) per
    polarization and an overall -k_B T/(8 pi a^3) prefactor.
    """
    _validate(config, tol, log_space)
    a, T = config.thickness, config.temperature
    pf = K_B * T / (8.0 * math.pi * a**3)

    deep = _deep_plasma(config)
    if deep is not None:
        lm = asymptotics.plasma_film_pressure_log(a, T, deep.omega_p)
        return PressureResult(0.0, 0.0, 0.0, 0, 0.0, lm)

    quad_tol = tol / 10.0
    s0_tm, s0_te, q0 = zero_frequency_term(config, quad_tol, "pressure")
    zeta1 = 2.0 * a * matsubara_frequency(T, 1) / C_LIGHT

    def term(l: int):
        tm, te, qe = _pressure_term(config, l, quad_tol)
        return tm + te, qe

    def continuum(l_from: int):
        return _continuum_tail(config, l_from, zeta1, quad_tol, "pressure")

    lam_sum, l_max, trunc, qsum = _sum_series(
        term, continuum, abs(s0_tm + s0_te), zeta1, tol)

    l0 = -pf * (s0_tm + s0_te)
    tail = -pf * lam_sum
    value = l0 + tail
    return PressureResult(
        value=value,
        l0=l0,
        tail_l_ge_1=tail,
        l_max_used=l_max,
        truncation_error=pf * (trunc + qsum + q0),
        log_magnitude=LogMagnitude.from_value(value) if value != 0.0 else None,
    )


# ---------------------------------------------------------------------------
# Nonretarded and zero-temperature routes
# ---------------------------------------------------------------------------

def _nonrel_rho(config: LayeredConfig, xi: float) -> float:
    """Product of the two nonretarded (c -> inf) reflection amplitudes."""
    T = config.temperature
    ef = float(evaluate(config.film, xi, T))
    rho = 1.0
    for plate in (config.plate_left, config.plate_right):
        ep = float(evaluate(plate, xi, T))
        rho *= (ef - ep) / (ef + ep)
    return rho


def _static_rho(config: LayeredConfig) -> float:
    """xi -> 0 limit of _nonrel_rho via the zero-frequency classes."""
    scales = _static_scales(config)
    sf, cf = scales[0]
    rho = 1.0
    for sp, cp in scales[1:]:
        if sf > sp:
            rho *= 1.0
        elif sf < sp:
            rho *= -1.0
        else:
            rho *= (cf - cp) / (cf + cp)
    return rho


def nonrelativistic_free_energy(config: LayeredConfig,
                                tol: float = 1e-6) -> float:
    """Free energy in the nonretarded limit (c -> inf), J/m^2.

    The momentum integral collapses to -Li_3 of the product of the
    static-form reflection amplitudes (the exponent becomes e^(-u) and
    the amplitudes lose their u dependence), so every Matsubara term is
    a closed form.
    """
    if not (0.0 < tol <= 1e-2):
        raise ValidationError(f"tol must lie in (0, 1e-2], got {tol}")
    a, T = config.thickness, config.temperature
    pf = K_B * T / (8.0 * math.pi * a * a)
    s0 = -polylog_signed(3, _static_rho(config))
    zeta1 = 2.0 * a * matsubara_frequency(T, 1) / C_LIGHT
    geom = C_LIGHT / (2.0 * a)

    def term(l: int):
        rho = _nonrel_rho(config, matsubara_frequency(T, l))
        return -polylog_signed(3, rho), 0.0

    def s_of_zeta(zs: np.ndarray) -> np.ndarray:
        return np.array([-polylog_signed(3, _nonrel_rho(config, float(z) * geom))
                         for z in zs])

    def continuum(l_from: int):
        z_start = zeta1 * (l_from + 0.5)
        integral, ierr = integrate(s_of_zeta, [z_start], tol / 10.0,
                                   max_segments=512)
        em = abs(float(s_of_zeta(np.array([z_start + zeta1]))[0])
                 - float(s_of_zeta(np.array([z_start]))[0])) / 24.0
        return integral / zeta1, ierr / zeta1 + em

    s_sum, _, _, _ = _sum_series(term, continuum, abs(0.5 * s0), zeta1, tol)
    return pf * (0.5 * s0 + s_sum)


def zero_temperature_energy(config: LayeredConfig, tol: float = 1e-6) -> float:
    """T -> 0 limit of the nonretarded free energy, J/m^2.

    The Matsubara sum becomes (hbar c / (32 pi^2 a^3)) times the zeta
    integral of the nonretarded summand.  The configured temperature
    enters only through the relaxation law of Drude-type materials.
    """
    if not (0.0 < tol <= 1e-2):
        raise ValidationError(f"tol must lie in (0, 1e-2], got {tol}")
    a = config.thickness
    geom = C_LIGHT / (2.0 * a)

    def s_of_zeta(zs: np.ndarray) -> np.ndarray:
        return np.array([-polylog_signed(3, _nonrel_rho(config, float(z) * geom))
                         for z in zs])

    w = _film_momentum_scale(config)
    integral, _ = integrate(s_of_zeta, sorted({0.0, max(w, 1.0)}), tol / 10.0,
                            max_segments=512)
    return HBAR * C_LIGHT / (32.0 * math.pi**2 * a**3) * integral

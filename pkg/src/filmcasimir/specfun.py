"""Special functions for the film free-energy engine.

Provides the Riemann zeta value zeta(3), polylogarithms Li_2 and Li_3 on
[0, 1], the modified Bessel function K_2 over the full argument range the
engine needs, and a log-magnitude representation for quantities whose
linear value underflows double precision.

Everything here is implemented from scratch on purpose: these routines
are cross-checked against independent quadrature and library oracles in
the test suite, so they must not share code with the checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

ZETA3 = 1.2020569031595943
PI2_OVER_6 = 1.6449340668482264
EULER_GAMMA = 0.5772156649015329

_LOG10_E = math.log10(math.e)


class SpecFunDomainError(ValueError):
    """Argument outside the supported domain of a special function."""


def zeta3() -> float:
    """Riemann zeta(3) = Li_3(1), accurate to full double precision."""
    return ZETA3


def _polylog_series(n: int, z: float) -> float:
    # Direct Dirichlet series; geometric convergence, adequate for |z| <= 0.5
    # and still exact (just slower) for any |z| < 1.
    total = 0.0
    term = z
    k = 1
    while True:
        contrib = term / k**n
        total += contrib
        if abs(contrib) < 1e-18 * max(abs(total), 1e-300):
            return total
        k += 1
        term *= z
        if k > 100000:
            # |z| extremely close to 1; series remainder below target anyway
            return total


def polylog(n: int, z: float) -> float:
    """Polylogarithm Li_n(z) for n in {2, 3} and z in [0, 1].

    Uses the defining series for z <= 1/2 and Landen-type reflection
    identities for z > 1/2, so the argument of every series call stays
    at or below 1/2 and the relative error stays near machine precision
    (target 1e-12 or better).

    Raises
    ------
    SpecFunDomainError
        If n is not an integer >= 2 or z lies outside [0, 1].
    """
    if not isinstance(n, (int, np.integer)) or n < 2:
        raise SpecFunDomainError(f"polylog order must be an integer >= 2, got {n!r}")
    if not math.isfinite(z) or z < 0.0 or z > 1.0:
        raise SpecFunDomainError(f"polylog argument must lie in [0, 1], got {z!r}")
    if z == 0.0:
        return 0.0
    if z == 1.0:
        if n == 2:
            return PI2_OVER_6
        if n == 3:
            return ZETA3
        return _zeta_int(n)
    if z <= 0.5 or n > 3:
        return _polylog_series(n, z)
    ln_z = math.log(z)
    if n == 2:
        # Euler reflection: Li_2(z) + Li_2(1-z) = pi^2/6 - ln(z) ln(1-z)
        return PI2_OVER_6 - ln_z * math.log1p(-z) - _polylog_series(2, 1.0 - z)
    # Trilogarithm Landen identity:
    # Li_3(z) + Li_3(1-z) + Li_3(1-1/z)
    #   = zeta(3) + ln^3 z / 6 + (pi^2/6) ln z - ln^2 z ln(1-z) / 2
    ln_1mz = math.log1p(-z)
    rhs = ZETA3 + ln_z**3 / 6.0 + PI2_OVER_6 * ln_z - 0.5 * ln_z**2 * ln_1mz
    return rhs - _polylog_series(3, 1.0 - z) - _polylog_series(3, 1.0 - 1.0 / z)


def _zeta_int(n: int) -> float:
    # zeta(n) for integer n >= 4 via direct sum; converges quickly.
    total = 0.0
    for k in range(1, 200000):
        t = 1.0 / k**n
        total += t
        if t < 1e-18 * total:
            break
    return total


def polylog_signed(n: int, z: float) -> float:
    """Li_n(z) extended to z in [-1, 1] via the square identity.

    Li_n(-y) = 2^(1-n) Li_n(y^2) - Li_n(y) reduces a negative argument to
    two calls on [0, 1].  Needed internally for asymmetric stacks where
    the product of the two reflection amplitudes is negative.
    """
    if z >= 0.0:
        return polylog(n, z)
    if z < -1.0 or not math.isfinite(z):
        raise SpecFunDomainError(f"polylog argument must lie in [-1, 1], got {z!r}")
    y = -z
    return 2.0 ** (1 - n) * polylog(n, y * y) - polylog(n, y)


# ---------------------------------------------------------------------------
# Modified Bessel function K_2
# ---------------------------------------------------------------------------

def _i0_series(x: float) -> float:
    q = 0.25 * x * x
    total = 1.0
    term = 1.0
    for k in range(1, 60):
        term *= q / (k * k)
        total += term
        if term < 1e-18 * total:
            break
    return total


def _i1_series(x: float) -> float:
    q = 0.25 * x * x
    total = 1.0
    term = 1.0
    for k in range(1, 60):
        term *= q / (k * (k + 1))
        total += term
        if term < 1e-18 * total:
            break
    return 0.5 * x * total


def _k0_small(x: float) -> float:
    # Ascending series, x < 2:
    # K_0 = -(ln(x/2) + gamma) I_0 + sum_{k>=1} (x^2/4)^k H_k / (k!)^2
    q = 0.25 * x * x
    s = 0.0
    term = 1.0
    h = 0.0
    for k in range(1, 60):
        term *= q / (k * k)
        h += 1.0 / k
        s += term * h
        if term * h < 1e-18 * max(s, 1.0):
            break
    return -(math.log(0.5 * x) + EULER_GAMMA) * _i0_series(x) + s


def _k1_small(x: float) -> float:
    # K_1 = ln(x/2) I_1 + 1/x
    #       - (x/4) sum_{k>=0} [psi(k+1) + psi(k+2)] (x^2/4)^k / (k! (k+1)!)
    q = 0.25 * x * x
    s = 0.0
    term = 1.0  # (x^2/4)^k / (k! (k+1)!)
    h_k = 0.0
    h_k1 = 1.0
    for k in range(0, 60):
        if k > 0:
            term *= q / (k * (k + 1))
            h_k += 1.0 / k
            h_k1 += 1.0 / (k + 1)
        coeff = -2.0 * EULER_GAMMA + h_k + h_k1
        s += coeff * term
        if term * (abs(coeff) + 1.0) < 1e-18 * max(abs(s), 1.0):
            break
    return math.log(0.5 * x) * _i1_series(x) + 1.0 / x - 0.25 * x * s


def _k_scaled_integral(nu: int, x: float) -> float:
    """e^x K_nu(x) by adaptive quadrature of the cosh representation.

    K_nu(x) = e^(-x) * int_0^inf exp(-x (cosh t - 1)) cosh(nu t) dt.
    Used for 2 <= x <= 700; each order is integrated independently so the
    recurrence check in the tests exercises genuinely distinct routes.
    """
    from .quadrature import integrate_interval

    # Upper limit where the damped exponent has killed the integrand.
    t_max = math.acosh(1.0 + 60.0 / x) + 3.0

    def f(t: np.ndarray) -> np.ndarray:
        return np.exp(-x * (np.cosh(t) - 1.0)) * np.cosh(nu * t)

    value, _ = integrate_interval(f, 0.0, t_max, rel_tol=1e-13)
    return value


_K2_ASYMPTOTIC_CUT = 700.0


def _k2_scaled_asymptotic(x: float) -> float:
    # e^x K_2(x) ~ sqrt(pi/(2x)) sum_k a_k / x^k,
    # a_0 = 1, a_{k+1} = a_k (16 - (2k+1)^2) / (8 (k+1)).
    total = 1.0
    a = 1.0
    xk = 1.0
    for k in range(0, 20):
        a *= (16.0 - (2 * k + 1) ** 2) / (8.0 * (k + 1))
        xk *= x
        term = a / xk
        total += term
        if abs(term) < 1e-17 * abs(total):
            break
    return math.sqrt(math.pi / (2.0 * x)) * total


def bessel_k2_scaled(x: float) -> float:
    """e^x K_2(x); the natural building block for log-space work."""
    if not (x > 0.0) or not math.isfinite(x):
        raise SpecFunDomainError(f"bessel_k2 requires x > 0, got {x!r}")
    if x < 2.0:
        return (_k0_small(x) + (2.0 / x) * _k1_small(x)) * math.exp(x)
    if x <= _K2_ASYMPTOTIC_CUT:
        return _k_scaled_integral(2, x)
    return _k2_scaled_asymptotic(x)


def bessel_k2(x: float) -> float:
    """Modified Bessel function of the second kind K_2(x), x > 0.

    Series route below x = 2 (via internal K_0, K_1 and the recurrence
    K_2 = K_0 + 2 K_1 / x), an independently integrated cosh
    representation for 2 <= x <= 700, and the divergent-asymptotic tail
    beyond.  Relative accuracy 1e-10 or better; underflows to 0.0 for
    x beyond roughly 746 (use bessel_k2_log there).
    """
    if not (x > 0.0) or not math.isfinite(x):
        raise SpecFunDomainError(f"bessel_k2 requires x > 0, got {x!r}")
    if x < 2.0:
        return _k0_small(x) + (2.0 / x) * _k1_small(x)
    if x <= _K2_ASYMPTOTIC_CUT:
        return math.exp(-x) * _k_scaled_integral(2, x)
    return math.exp(-x) * _k2_scaled_asymptotic(x) if x < 745.0 else 0.0


def bessel_k0(x: float) -> float:
    """K_0(x) for x > 0 (series below 2, cosh integral above)."""
    if not (x > 0.0) or not math.isfinite(x):
        raise SpecFunDomainError(f"bessel_k0 requires x > 0, got {x!r}")
    if x < 2.0:
        return _k0_small(x)
    return math.exp(-x) * _k_scaled_integral(0, x)


def bessel_k1(x: float) -> float:
    """K_1(x) for x > 0 (series below 2, cosh integral above)."""
    if not (x > 0.0) or not math.isfinite(x):
        raise SpecFunDomainError(f"bessel_k1 requires x > 0, got {x!r}")
    if x < 2.0:
        return _k1_small(x)
    return math.exp(-x) * _k_scaled_integral(1, x)


def bessel_k2_log(x: float) -> "LogMagnitude":
    """K_2(x) as a LogMagnitude, usable far past the underflow point."""
    return LogMagnitude(math.log10(bessel_k2_scaled(x)) - x * _LOG10_E, 1)


# ---------------------------------------------------------------------------
# Log-magnitude representation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LogMagnitude:
    """A real number stored as (log10 of |value|, sign).

    Exists because the plasma-approach free energy of a thick film falls
    below 1e-308 long before the geometry stops being interesting.  The
    sign is -1, 0, or +1; a zero value is (-inf, 0).
    """

    log10_abs: float
    sign: int

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or +1, got {self.sign!r}")
        if self.sign == 0 and self.log10_abs != -math.inf:
            raise ValueError("zero magnitude must carry log10_abs = -inf")

    @classmethod
    def from_value(cls, value: float) -> "LogMagnitude":
        if value == 0.0:
            return cls(-math.inf, 0)
        if not math.isfinite(value):
            raise ValueError(f"cannot take log-magnitude of {value!r}")
        return cls(math.log10(abs(value)), 1 if value > 0 else -1)

    def value(self) -> float:
        """Back to an ordinary float; overflows to +-inf, underflows to 0."""
        if self.sign == 0:
            return 0.0
        if self.log10_abs > 308.25:
            return math.inf * self.sign
        if self.log10_abs < -323.6:
            return 0.0
        # Split integer and fractional decimal exponents so the power of
        # ten is applied via a correctly rounded decimal literal.
        ip = math.floor(self.log10_abs)
        fp = self.log10_abs - ip
        return self.sign * (10.0**fp) * float(f"1e{int(ip)}")

    def scaled(self, factor: float) -> "LogMagnitude":
        """Multiply by an ordinary float without leaving log space."""
        if factor == 0.0 or self.sign == 0:
            return LogMagnitude(-math.inf, 0)
        s = self.sign * (1 if factor > 0 else -1)
        return LogMagnitude(self.log10_abs + math.log10(abs(factor)), s)


def log_sum_exp_series(terms: Sequence[LogMagnitude]) -> LogMagnitude:
    """Sum a series of like-signed LogMagnitude terms in log space.

    Zero terms are skipped.  Mixed signs are rejected: the engine only
    ever needs this for sums of negative free-energy contributions, and
    cancellation in log space would silently destroy precision.
    """
    live = [t for t in terms if t.sign != 0]
    if not live:
        return LogMagnitude(-math.inf, 0)
    sign = live[0].sign
    if any(t.sign != sign for t in live):
        raise ValueError("log_sum_exp_series requires all terms to share one sign")
    m = max(t.log10_abs for t in live)
    acc = 0.0
    for t in live:
        acc += 10.0 ** (t.log10_abs - m)
    return LogMagnitude(m + math.log10(acc), sign)

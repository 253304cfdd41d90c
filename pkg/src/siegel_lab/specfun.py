"""Real special functions: log-gamma, zeta, completed zeta, K-Bessel, divisor sums.

Everything here is double precision and real-argument only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, PoleError

EULER_GAMMA = 0.5772156649015329
# Stieltjes constants gamma_1..gamma_3 (gamma_0 is Euler's constant).
STIELTJES = (
    EULER_GAMMA,
    -0.07281584548367672,
    -0.009690363192872318,
    0.002053834420303346,
)
APERY = 1.2020569031595942

ZETA_STAR_POLE_GUARD = 1e-6
_ZETA_POLE_GUARD = 1e-9
_EM_CUTOFF = 25
_BERNOULLI = (
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
    Fraction(-691, 2730),
    Fraction(7, 6),
    Fraction(-3617, 510),
    Fraction(43867, 798),
    Fraction(-174611, 330),
    Fraction(854513, 138),
    Fraction(-236364091, 2730),
)
# B_{2k} / (2k)! for k = 1..12
_EM_COEFFS = tuple(float(b / math.factorial(2 * k)) for k, b in enumerate(_BERNOULLI, start=1))


@dataclass(frozen=True)
class LaurentPair:
    """Leading Laurent data ``residue / (s - s0) + constant_term`` at a simple pole."""

    residue: float
    constant_term: float


def _finite(x, name="argument"):
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")
    return x


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0."""
    x = _finite(x, "x")
    if x <= 0.0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def _zeta_euler_maclaurin(s: float) -> float:
    n = _EM_CUTOFF
    head = math.fsum(k ** -s for k in range(1, n))
    tail = n ** (1.0 - s) / (s - 1.0) + 0.5 * n ** -s
    # rising factorial s(s+1)...(s+2k-2) times N^{-s-2k+1}
    rising = s
    power = n ** (-s - 1.0)
    corr = 0.0
    for k, coeff in enumerate(_EM_COEFFS, start=1):
        corr += coeff * rising * power
        rising *= (s + 2 * k - 1) * (s + 2 * k)
        power /= n * n
    return head + tail + corr


def riemann_zeta(s: float) -> float:
    """Riemann zeta on the real line, s != 1."""
    s = _finite(s, "s")
    if abs(s - 1.0) < _ZETA_POLE_GUARD:
        raise PoleError(f"riemann_zeta: s={s} is within {_ZETA_POLE_GUARD} of the pole at 1", s)
    if s >= -0.5:
        return _zeta_euler_maclaurin(s)
    # functional equation; 1 - s > 1.5 so the right side is on the direct branch
    t = 1.0 - s
    return (
        2.0 ** s
        * math.pi ** (s - 1.0)
        * math.sin(0.5 * math.pi * s)
        * math.exp(math.lgamma(t))
        * _zeta_euler_maclaurin(t)
    )


def _check_zeta_star_arg(s: float, where: str) -> None:
    if abs(s) < ZETA_STAR_POLE_GUARD or abs(s - 1.0) < ZETA_STAR_POLE_GUARD:
        raise PoleError(
            f"{where}: argument {s} is within {ZETA_STAR_POLE_GUARD} of a pole of zeta* (0 or 1)", s
        )


def zeta_star(s: float) -> float:
    """Completed zeta pi^{-s/2} Gamma(s/2) zeta(s), symmetric under s -> 1 - s."""
    s = _finite(s, "s")
    _check_zeta_star_arg(s, "zeta_star")
    # evaluate on the half-line s >= 1/2 where the gamma factor is positive
    t = s if s >= 0.5 else 1.0 - s
    return math.exp(-0.5 * t * math.log(math.pi) + math.lgamma(0.5 * t)) * riemann_zeta(t)


def _log_gamma_factor_series(u: float) -> float:
    # ln[pi^{-(1+u)/2} Gamma((1+u)/2)] as a Taylor polynomial in u (value 0 at u=0)
    h = 0.5 * u
    psi0 = -EULER_GAMMA - 2.0 * math.log(2.0)
    psi1 = 0.5 * math.pi ** 2
    psi2 = -14.0 * APERY
    psi3 = math.pi ** 4
    return (
        -h * math.log(math.pi)
        + psi0 * h
        + psi1 * h ** 2 / 2.0
        + psi2 * h ** 3 / 6.0
        + psi3 * h ** 4 / 24.0
    )


def zeta_star_laurent_at_one() -> LaurentPair:
    """Residue and constant term of zeta* at s = 1."""
    psi_half = -EULER_GAMMA - 2.0 * math.log(2.0)
    return LaurentPair(residue=1.0, constant_term=EULER_GAMMA + 0.5 * (psi_half - math.log(math.pi)))


_LAURENT_SWITCH = 1e-3


def sigma_times_zeta_star(sigma: float) -> float:
    """sigma * zeta*(1 + sigma), continuous through sigma = 0 where it equals 1."""
    sigma = _finite(sigma, "sigma")
    if abs(sigma) > 0.5:
        raise DomainError(f"sigma_times_zeta_star requires |sigma| <= 0.5, got {sigma}")
    if abs(sigma) >= _LAURENT_SWITCH:
        return sigma * zeta_star(1.0 + sigma)
    g0, g1, g2, g3 = STIELTJES
    # sigma*zeta(1+sigma) = 1 + sum_n (-1)^n gamma_n sigma^{n+1} / n!
    szeta = 1.0 + g0 * sigma - g1 * sigma ** 2 + 0.5 * g2 * sigma ** 3 - g3 * sigma ** 4 / 6.0
    return szeta * math.exp(_log_gamma_factor_series(sigma))


_K_TRUNC = math.log(1e18)
_K_STEP = 1.0 / 64.0


def _k_cutoff(nu: float, x: float) -> float:
    # smallest T with x (cosh T - 1) - |nu| T >= ln 1e18, by fixed-point iteration
    t = math.acosh(1.0 + _K_TRUNC / x)
    for _ in range(50):
        t_new = math.acosh(1.0 + (_K_TRUNC + abs(nu) * t) / x)
        if abs(t_new - t) < 1e-12:
            break
        t = t_new
    return t_new


def _trapezoid_k_scaled(nu, x, t_max, h):
    t = np.arange(0.0, t_max + h, h)
    integrand = np.exp(-np.outer(x, np.cosh(t) - 1.0)) * np.cosh(nu * t)
    return h * (integrand.sum(axis=1) - 0.5 * integrand[:, 0] - 0.5 * integrand[:, -1])


def bessel_k_scaled(nu: float, x) -> np.ndarray:
    """e^x K_nu(x) for an array of positive x, by trapezoid quadrature of the cosh integral."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if x.size == 0:
        return x.copy()
    t_max = _k_cutoff(nu, float(x.min()))
    coarse = _trapezoid_k_scaled(nu, x, t_max, _K_STEP)
    fine = _trapezoid_k_scaled(nu, x, t_max, 0.5 * _K_STEP)
    return fine + (fine - coarse) / 3.0


def bessel_k(nu: float, x: float) -> float:
    """Modified Bessel function K_nu(x) for |nu| <= 2 and 0 < x <= 500."""
    nu = _finite(nu, "nu")
    x = _finite(x, "x")
    if x <= 0.0:
        raise DomainError(f"bessel_k requires x > 0, got {x}")
    if abs(nu) > 2.0:
        raise DomainError(f"bessel_k requires |nu| <= 2, got {nu}")
    if x > 500.0:
        raise DomainError(f"bessel_k requires x <= 500, got {x}")
    return float(math.exp(-x) * bessel_k_scaled(nu, x)[0])


def divisor_sigma(nu: float, n: int) -> float:
    """Sum of d**nu over the positive divisors d of n."""
    if int(n) != n or n < 1:
        raise DomainError(f"divisor_sigma requires an integer n >= 1, got {n}")
    n = int(n)
    total = 0.0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d ** nu
            q = n // d
            if q != d:
                total += q ** nu
        d += 1
    return total

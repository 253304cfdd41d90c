"""Nonholomorphic Eisenstein series on the upper half plane.

e(tau, s) is the sum of Im(g tau)^s over Gamma_infinity \\ SL(2, Z), identity coset
included, evaluated through its Fourier expansion

    e = y^s + phi(s) y^(1-s)
        + 4/zeta*(2s) sqrt(y) sum_n n^(s-1/2) sigma_{1-2s}(n) K_{s-1/2}(2 pi n y) cos(2 pi n x)

with phi(s) = zeta*(2s-1)/zeta*(2s).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError, PoleError
from .mold import MoldSpec
from .specfun import (
    ZETA_STAR_POLE_GUARD,
    bessel_k_scaled,
    divisor_sigma,
    riemann_zeta,
    sigma_times_zeta_star,
    zeta_star,
)

DEFAULT_TOL = 1e-12
MAX_TERMS = 10**6
MIN_HEIGHT = 0.05
GL2_WINDOW = 0.45


@dataclass(frozen=True)
class UpperHalfPoint:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)) or self.y <= 0:
            raise DomainError(f"point must have finite x and y > 0, got ({self.x}, {self.y})")

    def translate(self, n: float) -> "UpperHalfPoint":
        return UpperHalfPoint(self.x + n, self.y)

    def invert(self) -> "UpperHalfPoint":
        """-1/tau."""
        r2 = self.x ** 2 + self.y ** 2
        return UpperHalfPoint(-self.x / r2, self.y / r2)


@dataclass(frozen=True)
class Gl2Eval:
    value: float
    tail_bound: float


def scattering_phi(s: float) -> float:
    """zeta*(2s - 1) / zeta*(2s)."""
    for arg in (2 * s - 1, 2 * s):
        if abs(arg) < ZETA_STAR_POLE_GUARD or abs(arg - 1) < ZETA_STAR_POLE_GUARD:
            raise PoleError(f"scattering_phi: s={s} is at a pole (zeta* argument {arg})", s)
    return zeta_star(2 * s - 1) / zeta_star(2 * s)


def constant_term_gl2(tau: UpperHalfPoint, s: float) -> float:
    return tau.y ** s + scattering_phi(s) * tau.y ** (1 - s)


def _terms_needed(y: float, s: float, tol: float, coeff: float, nu: float) -> tuple:
    # K_nu(2 pi n y) <= e^{2 pi y} K_nu(2 pi y) e^{-2 pi n y} since e^x K_nu(x) decreases,
    # and n^{s-1/2} sigma_{1-2s}(n) <= 2 n^p with p = max(s, 1-s).
    q_log = -2 * math.pi * y
    k_scaled = float(bessel_k_scaled(nu, 2 * math.pi * y)[0])
    log_pref = math.log(2 * abs(coeff) * math.sqrt(y) * k_scaled)
    p = max(s, 1 - s)
    n = 0
    while True:
        m = n + 1
        log_first = log_pref + p * math.log(m) + q_log * m
        ratio = math.exp(p * math.log1p(1 / m) + q_log)
        if ratio < 1:
            log_bound = log_first - math.log1p(-ratio)
            if log_bound <= math.log(tol):
                return n, math.exp(log_bound)
        n += 1
        if n > MAX_TERMS:
            raise ConvergenceError(f"Fourier tail at y={y}, s={s} needs more than {MAX_TERMS} terms")


def fourier_tail(tau: UpperHalfPoint, s: float, tol: float = DEFAULT_TOL) -> Gl2Eval:
    """Non-constant part of e(tau, s), truncated so the omitted terms are below tol."""
    nu = s - 0.5
    if abs(nu) > 2:
        raise DomainError(f"fourier_tail supports s in [-1.5, 2.5], got {s}")
    if tau.y < MIN_HEIGHT:
        raise DomainError(f"fourier_tail needs y >= {MIN_HEIGHT}, got {tau.y}")
    if abs(2 * s) < ZETA_STAR_POLE_GUARD or abs(2 * s - 1) < ZETA_STAR_POLE_GUARD:
        raise PoleError(f"fourier_tail: zeta*(2s) singular at s={s}", s)
    coeff = 4.0 / zeta_star(2 * s)
    n_terms, bound = _terms_needed(tau.y, s, tol, coeff, nu)
    if n_terms == 0:
        return Gl2Eval(0.0, bound)
    ns = np.arange(1, n_terms + 1, dtype=float)
    xs = 2 * math.pi * ns * tau.y
    kv = np.exp(-xs) * bessel_k_scaled(nu, xs)
    sig = np.array([divisor_sigma(1 - 2 * s, int(n)) for n in ns])
    terms = ns ** nu * sig * kv * np.cos(2 * math.pi * ns * tau.x)
    value = coeff * math.sqrt(tau.y) * math.fsum(terms)
    return Gl2Eval(value, bound)


def eval_e(tau: UpperHalfPoint, s: float, tol: float = DEFAULT_TOL) -> Gl2Eval:
    """e(tau, s) with a bound on the truncation error of the Fourier tail."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    ct = constant_term_gl2(tau, s)
    tail = fourier_tail(tau, s, tol)
    return Gl2Eval(ct + tail.value, tail.tail_bound)


def eval_full_lattice(tau: UpperHalfPoint, s: float, tol: float = DEFAULT_TOL) -> float:
    """sum over (m, n) != (0, 0) of y^s / |m tau + n|^(2s) = 2 zeta(2s) e(tau, s)."""
    return 2 * riemann_zeta(2 * s) * eval_e(tau, s, tol).value


def pole_stable_phi(u: float) -> float:
    """u * phi(1 + u), continuous at u = 0 with value 3/pi."""
    if abs(u) <= 0.25:
        return 0.5 * sigma_times_zeta_star(2 * u) / zeta_star(2 + 2 * u)
    return u * scattering_phi(1 + u)


def residue_weighted_e(tau: UpperHalfPoint, u: float, tol: float = DEFAULT_TOL) -> float:
    """u * e(tau, 1 + u), continuous at u = 0 with value 3/pi."""
    tail = fourier_tail(tau, 1 + u, tol).value
    return u * tau.y ** (1 + u) + pole_stable_phi(u) * tau.y ** (-u) + u * tail


def gl2_mold(tau: UpperHalfPoint, tol: float = DEFAULT_TOL) -> MoldSpec:
    """e(x + i Y y, 1 + sigma) as a mold in the sweep multiplier y, with Y = tau.y."""
    x, height = tau.x, tau.y

    def A(sigma):
        return height ** (1 + sigma)

    def C(sigma):
        return height ** (-sigma) * pole_stable_phi(sigma)

    def D(y, sigma):
        return sigma * fourier_tail(UpperHalfPoint(x, height * y), 1 + sigma, tol).value

    return MoldSpec(
        a=1.0, b=1.0, c=-1.0, d=0.0, A=A, C=C, D=D,
        sigma_window=GL2_WINDOW, label=f"gl2(x={x!r}, Y={height!r})",
    )


def tail_decay_probe(tau: UpperHalfPoint, s: float, y_grid) -> list:
    """|e - constant term| at each height in y_grid, x fixed at tau.x."""
    ys = [float(v) for v in y_grid]
    if any(b <= a for a, b in zip(ys, ys[1:])) or (ys and ys[0] < 1):
        raise DomainError("y_grid must be increasing with minimum >= 1")
    return [(y, abs(fourier_tail(UpperHalfPoint(tau.x, y), s, tol=1e-300).value)) for y in ys]

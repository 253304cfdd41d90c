"""Minimal-parabolic Eisenstein series on GL(3) over Q, through its constant term
along the (2,1) parabolic.

The constant term is a sum of three Weyl terms

    T_w(g, lam) = (y2 sqrt(y1))^((w lam)_1 + 1) * M_w(lam) * e(tau1, ((w lam)_2 - (w lam)_3 + 1) / 2)

and the pole studied is along the hyperplane lam2 - lam3 = 1.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PoleError, PreconditionError
from .gl2 import DEFAULT_TOL, UpperHalfPoint, eval_e, residue_weighted_e
from .mold import MoldSpec
from .specfun import ZETA_STAR_POLE_GUARD, sigma_times_zeta_star, zeta_star

SUM_TOL = 1e-12
GENERICITY_FLOOR = 1e-8
BOUNDARY_TOL = 1e-9
MAX_WINDOW = 0.45


@dataclass(frozen=True)
class SpectralParam:
    l1: float
    l2: float
    l3: float

    def __post_init__(self):
        if abs(self.l1 + self.l2 + self.l3) > SUM_TOL:
            raise DomainError(f"spectral parameter must sum to 0, got {self.as_tuple()}")

    def as_tuple(self) -> tuple:
        return (self.l1, self.l2, self.l3)

    @classmethod
    def on_hyperplane(cls, l1: float) -> "SpectralParam":
        """The point of lam2 - lam3 = 1 with first coordinate l1."""
        l2 = 0.5 * (1.0 - l1)
        return cls(l1, l2, l2 - 1.0)


@dataclass(frozen=True)
class Gl3Point:
    x1: float
    x2: float
    x3: float
    y1: float
    y2: float

    def __post_init__(self):
        if self.y1 <= 0 or self.y2 <= 0:
            raise DomainError(f"Gl3Point needs y1, y2 > 0, got y1={self.y1}, y2={self.y2}")

    @property
    def tau1(self) -> UpperHalfPoint:
        return UpperHalfPoint(self.x1, self.y1)

    @property
    def height(self) -> float:
        """y2 sqrt(y1), the quantity raised to (w lam)_1 + 1."""
        return self.y2 * math.sqrt(self.y1)

    def scaled(self, y: float) -> "Gl3Point":
        """Right translate by diag(y, 1, 1): y2 -> y * y2."""
        return Gl3Point(self.x1, self.x2, self.x3, self.y1, self.y2 * y)


class WeylElt(enum.Enum):
    IDENTITY = "I"
    S_ALPHA = "s_alpha"
    LONG = "long"

    def act(self, lam: SpectralParam) -> SpectralParam:
        l1, l2, l3 = lam.as_tuple()
        if self is WeylElt.IDENTITY:
            return lam
        if self is WeylElt.S_ALPHA:
            return SpectralParam(l2, l1, l3)
        return SpectralParam(l3, l1, l2)


class Regime(enum.Enum):
    OMEGA1 = "omega1"
    OMEGA2 = "omega2"
    BOUNDARY = "boundary"


@dataclass(frozen=True)
class LambdaPath:
    lam0: SpectralParam
    lam1: SpectralParam

    def __post_init__(self):
        if abs(self.lam0.l2 - self.lam0.l3 - 1.0) > SUM_TOL:
            raise DomainError(f"lam0 must lie on lam2 - lam3 = 1, got {self.lam0.as_tuple()}")
        if abs(self.lam1.l2 - self.lam1.l3) > SUM_TOL:
            raise DomainError(f"lam1 must lie on lam2 = lam3, got {self.lam1.as_tuple()}")


def lambda_at(path: LambdaPath, sigma: float) -> SpectralParam:
    """(1 + sigma) lam0 - sigma lam1; its lam2 - lam3 equals 1 + sigma."""
    a, b = path.lam0.as_tuple(), path.lam1.as_tuple()
    l1, l2, _ = ((1 + sigma) * u - sigma * v for u, v in zip(a, b))
    # third coordinate fixed by the trace so the sum is exactly representable as 0
    return SpectralParam(l1, l2, -(l1 + l2))


def _zs_checked(arg: float, what: str) -> float:
    if abs(arg) < ZETA_STAR_POLE_GUARD or abs(arg - 1) < ZETA_STAR_POLE_GUARD:
        raise PoleError(f"{what}: zeta*({arg}) is at a pole", arg)
    return zeta_star(arg)


def intertwining_ratio(w: WeylElt, lam: SpectralParam) -> float:
    l1, l2, l3 = lam.as_tuple()
    if w is WeylElt.IDENTITY:
        return 1.0
    first = _zs_checked(l1 - l2, f"{w.name} ratio") / _zs_checked(l1 - l2 + 1, f"{w.name} ratio")
    if w is WeylElt.S_ALPHA:
        return first
    return (
        _zs_checked(l2 - l3, "LONG ratio") / _zs_checked(l2 - l3 + 1, "LONG ratio")
        * _zs_checked(l1 - l3, "LONG ratio") / _zs_checked(l1 - l3 + 1, "LONG ratio")
    )


def e_argument(w: WeylElt, lam: SpectralParam) -> float:
    wl = w.act(lam)
    return 0.5 * (wl.l2 - wl.l3 + 1)


def levi_eisenstein(g: Gl3Point, lam: SpectralParam, tol: float = DEFAULT_TOL) -> float:
    """(y2 sqrt(y1))^(lam1 + 1) e(tau1, (lam2 - lam3 + 1)/2)."""
    s = 0.5 * (lam.l2 - lam.l3 + 1)
    return g.height ** (lam.l1 + 1) * eval_e(g.tau1, s, tol).value


def weyl_term(w: WeylElt, g: Gl3Point, lam: SpectralParam, tol: float = DEFAULT_TOL) -> float:
    try:
        ratio = intertwining_ratio(w, lam)
        return ratio * levi_eisenstein(g, w.act(lam), tol)
    except PoleError as exc:
        raise PoleError(f"{w.name} term singular: {exc}", exc.argument) from exc


def constant_term_gl3(g: Gl3Point, lam: SpectralParam, tol: float = DEFAULT_TOL) -> float:
    return sum(weyl_term(w, g, lam, tol) for w in WeylElt)


def weyl_exponent(w: WeylElt, lam: SpectralParam) -> float:
    return w.act(lam).l1 + 1


def classify_regime(lam0: SpectralParam, tol: float = BOUNDARY_TOL) -> Regime:
    l1, l2, l3 = lam0.as_tuple()
    if l2 - l1 > tol and l1 - l3 > tol:
        return Regime.OMEGA1
    if l3 - l1 > tol and abs(l3 - (l1 + 1)) > tol:
        return Regime.OMEGA2
    return Regime.BOUNDARY


# first coordinates on the real hyperplane where some other lam_i - lam_j is 0 or +-1
_NON_GENERIC_L1 = (-1.0, -1.0 / 3.0, 1.0 / 3.0, 1.0)


def argmax_weyl(lam: SpectralParam) -> WeylElt:
    return max(WeylElt, key=lambda w: weyl_exponent(w, lam))


def wmax_region_scan(resolution: int, lo: float = -2.0, hi: float = 2.0) -> list:
    """Rows (lam, argmax Weyl element, matches, excluded) over lam1 in [lo, hi] on the hyperplane.

    ``matches`` says whether (argmax == S_ALPHA) agrees with membership in
    Omega1 u Omega2. Points within BOUNDARY_TOL of a non-generic locus are
    marked excluded (and reported as matching).
    """
    if resolution < 10:
        raise ValueError("resolution must be at least 10")
    rows = []
    for l1 in np.linspace(lo, hi, resolution):
        lam = SpectralParam.on_hyperplane(float(l1))
        excluded = any(abs(l1 - b) <= BOUNDARY_TOL for b in _NON_GENERIC_L1)
        arg = argmax_weyl(lam)
        in_region = classify_regime(lam) is not Regime.BOUNDARY
        matches = excluded or ((arg is WeylElt.S_ALPHA) == in_region)
        rows.append((lam, arg, matches, excluded))
    return rows


def _singular_e_part(g: Gl3Point, sigma: float, tol: float) -> float:
    # sigma * e(tau1, 1 + sigma/2): residue 2 * 3/pi = 6/pi at sigma = 0
    return 2.0 * residue_weighted_e(g.tau1, 0.5 * sigma, tol)


def _long_prefactor(lam: SpectralParam, sigma: float) -> float:
    # sigma * zeta*(1+sigma)/zeta*(2+sigma) * zeta*(l1-l3)/zeta*(l1-l3+1), on the path
    l1, l2, l3 = lam.as_tuple()
    return (
        sigma_times_zeta_star(sigma) / zeta_star(2 + sigma)
        * _zs_checked(l1 - l3, "LONG ratio") / _zs_checked(l1 - l3 + 1, "LONG ratio")
    )


def _affine(path: LambdaPath, w: WeylElt) -> tuple:
    """(slope, intercept) of sigma -> (w Lambda(sigma))_1 + 1."""
    e0 = weyl_exponent(w, lambda_at(path, 0.0))
    e1 = weyl_exponent(w, lambda_at(path, 1.0))
    return e1 - e0, e0


def _path_window(path: LambdaPath) -> float:
    # keep every regular factor away from its poles along the path
    lam0, lam1 = path.lam0.as_tuple(), path.lam1.as_tuple()
    diffs = []
    for i, j in ((0, 1), (0, 2)):
        base = lam0[i] - lam0[j]
        slope = (lam0[i] - lam0[j]) - (lam1[i] - lam1[j])
        for target in (-1.0, 0.0, 1.0):
            if slope == 0:
                continue
            diffs.append(abs((target - base) / slope))
    finite = [d for d in diffs if d > 0]
    window = 0.5 * min(finite) if finite else MAX_WINDOW
    return min(window, MAX_WINDOW)


@dataclass(frozen=True)
class Gl3Mold:
    spec: MoldSpec
    regime: Regime
    w_max: WeylElt
    w_ms: WeylElt
    w_other: WeylElt


def gl3_mold(g: Gl3Point, path: LambdaPath, tol: float = DEFAULT_TOL) -> Gl3Mold:
    """Fit the constant term at g diag(y,1,1) along Lambda(sigma) into the mold."""
    regime = classify_regime(path.lam0)
    if regime is Regime.BOUNDARY:
        raise PreconditionError(f"lam0={path.lam0.as_tuple()} is not in Omega1 or Omega2")
    lam0 = path.lam0
    e_gen = eval_e(g.tau1, 0.5 * (lam0.l1 - lam0.l3 + 1), tol).value
    if abs(e_gen) <= GENERICITY_FLOOR:
        raise PreconditionError(f"e(tau1, (lam1 - lam3 + 1)/2) = {e_gen} vanishes; not generic")

    w_max = WeylElt.S_ALPHA
    if regime is Regime.OMEGA1:
        w_ms, w_other = WeylElt.IDENTITY, WeylElt.LONG
    else:
        w_ms, w_other = WeylElt.LONG, WeylElt.IDENTITY
    a, b = _affine(path, w_max)
    c, d = _affine(path, w_ms)
    c_o, d_o = _affine(path, w_other)
    height = g.height

    def singular(w, sigma):
        # sigma * T_w(g, Lambda(sigma)), finite at sigma = 0
        lam = lambda_at(path, sigma)
        if w is WeylElt.IDENTITY:
            return height ** (lam.l1 + 1) * _singular_e_part(g, sigma, tol)
        s_long = e_argument(WeylElt.LONG, lam)
        return (
            height ** (lam.l3 + 1)
            * _long_prefactor(lam, sigma)
            * eval_e(g.tau1, s_long, tol).value
        )

    def A(sigma):
        return weyl_term(w_max, g, lambda_at(path, sigma), tol)

    def C(sigma):
        return singular(w_ms, sigma)

    def D(y, sigma):
        return y ** (c_o * sigma + d_o) * singular(w_other, sigma)

    spec = MoldSpec(
        a=a, b=b, c=c, d=d, A=A, C=C, D=D,
        sigma_window=_path_window(path),
        label=f"gl3({regime.value}, lam0={lam0.as_tuple()})",
    )
    return Gl3Mold(spec=spec, regime=regime, w_max=w_max, w_ms=w_ms, w_other=w_other)


def predicted_beta(regime: Regime, lam0: SpectralParam, tau1: UpperHalfPoint, height: float, tol: float = DEFAULT_TOL) -> float:
    """The asymptotic zero location as displayed for each region, at effective height y2 sqrt(y1).

    Returned with the sign of the displayed formula; compare magnitudes with
    the mold's prediction, whose sign follows the proof's orientation.
    """
    l1, l2, l3 = lam0.as_tuple()
    if regime is Regime.OMEGA1:
        num = 6 * _zs_checked(l1 - l2 + 1, "predicted_beta")
        den = (
            math.pi
            * _zs_checked(l1 - l2, "predicted_beta")
            * eval_e(tau1, 0.5 * (l1 - l3 + 1), tol).value
            * height ** (l2 - l1)
        )
    elif regime is Regime.OMEGA2:
        num = (
            6
            * _zs_checked(l1 - l2 + 1, "predicted_beta")
            * _zs_checked(l1 - l3, "predicted_beta")
            * eval_e(tau1, 0.5 * (l1 - l2 + 1), tol).value
        )
        den = (
            math.pi
            * _zs_checked(l1 - l2, "predicted_beta")
            * _zs_checked(l1 - l3 + 1, "predicted_beta")
            * eval_e(tau1, 0.5 * (l1 - l3 + 1), tol).value
            * height
        )
    else:
        raise PreconditionError("predicted_beta needs an Omega1 or Omega2 regime")
    if den == 0.0:
        raise PreconditionError("predicted_beta: vanishing denominator")
    return num / den


REFERENCE_LAMBDA = {
    Regime.OMEGA1: SpectralParam(0.0, 0.5, -0.5),
    Regime.OMEGA2: SpectralParam(-0.8, 0.9, -0.1),
}
REFERENCE_LAMBDA1 = SpectralParam(0.0, 0.0, 0.0)
REFERENCE_POINT = Gl3Point(0.0, 0.0, 0.0, 1.2, 1.0)

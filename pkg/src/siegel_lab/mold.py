"""The mold F(y, sigma): a large term plus a simple pole, and its zero next to the pole.

    F(y, s) = A(s) y^(a s + b) + B(y, s) + (y^(c s + d) C(s) + D(y, s)) / s

With b > d, F has a real zero in (-eps/log y, eps/log y) for large y, and
-beta ~ C(0) / (A(0) y^(b - d)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError, PreconditionError
from .zerofind import bisect, run_sweep, scan_for_bracket

DEFAULT_EPS = 2.0
DEFAULT_TOL = 1e-10
SCAN_POINTS = 40


def _zero2(y, sigma):
    return 0.0


@dataclass(frozen=True)
class MoldSpec:
    a: float
    b: float
    c: float
    d: float
    A: Callable[[float], float]
    C: Callable[[float], float]
    B: Callable[[float, float], float] = _zero2
    D: Callable[[float, float], float] = _zero2
    # half-width of the sigma interval where A and C are continuous and nonzero
    sigma_window: float = 0.5
    remark1: bool = False
    label: str = ""

    def __post_init__(self):
        if self.sigma_window <= 0:
            raise ValueError("sigma_window must be positive")
        if self.remark1:
            if not self.b < self.d:
                raise PreconditionError(f"remark1 spec needs b < d, got b={self.b}, d={self.d}")
        elif not self.b > self.d:
            raise PreconditionError(f"mold needs b > d, got b={self.b}, d={self.d}")


@dataclass(frozen=True)
class SiegelZeroReport:
    y: float
    epsilon: float
    bracket_lo: float
    bracket_hi: float
    beta: float
    predicted: float
    ratio: float
    sign_agrees: bool
    iterations: int
    residual: float
    flags: tuple = ()

    @property
    def found(self) -> bool:
        return not math.isnan(self.beta)


def failed_report(y, eps, *flags, predicted=math.nan) -> SiegelZeroReport:
    nan = math.nan
    return SiegelZeroReport(
        y=y, epsilon=eps, bracket_lo=nan, bracket_hi=nan, beta=nan,
        predicted=predicted, ratio=nan, sign_agrees=False, iterations=0,
        residual=nan, flags=tuple(flags),
    )


def eval_mold(spec: MoldSpec, y: float, sigma: float) -> float:
    if sigma == 0.0:
        raise DomainError("eval_mold: sigma = 0 is the pole")
    if abs(sigma) > spec.sigma_window:
        raise DomainError(f"eval_mold: |sigma|={abs(sigma)} outside window {spec.sigma_window}")
    if not y > 1.0:
        raise DomainError(f"eval_mold: y must exceed 1, got {y}")
    big = spec.A(sigma) * y ** (spec.a * sigma + spec.b) + spec.B(y, sigma)
    polar = y ** (spec.c * sigma + spec.d) * spec.C(sigma) + spec.D(y, sigma)
    return big + polar / sigma


def mold_terms(spec: MoldSpec, y: float, sigma: float) -> tuple:
    """Magnitudes of the four pieces of F at (y, sigma), used as a residual scale."""
    return (
        abs(spec.A(sigma) * y ** (spec.a * sigma + spec.b)),
        abs(spec.B(y, sigma)),
        abs(y ** (spec.c * sigma + spec.d) * spec.C(sigma) / sigma),
        abs(spec.D(y, sigma) / sigma),
    )


def is_remark2(spec: MoldSpec) -> bool:
    return spec.C(0.0) == 0.0


def predicted_zero(spec: MoldSpec, y: float) -> float:
    """-C(0) / (A(0) y^(b-d)); 0 when C(0) = 0, where the formula no longer applies."""
    a0 = spec.A(0.0)
    if a0 == 0.0:
        raise PreconditionError("predicted_zero needs A(0) != 0")
    c0 = spec.C(0.0)
    if c0 == 0.0:
        return 0.0
    return -c0 / (a0 * y ** (spec.b - spec.d))


def find_siegel_zero(spec: MoldSpec, y: float, eps: float = DEFAULT_EPS, tol: float = DEFAULT_TOL) -> SiegelZeroReport:
    """Locate a zero of F(y, .) in (-eps/log y, eps/log y).

    The interval is clipped to the mold's sigma window when it is wider (flag
    ``clipped``). Failure to bracket is reported through the ``no_bracket`` flag.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    y = float(y)
    half = eps / math.log(y)
    flags = []
    if half >= spec.sigma_window:
        half = spec.sigma_window
        flags.append("clipped")
    if spec.remark1:
        flags.append("remark1")

    if spec.remark1:
        predicted = math.nan
    else:
        predicted = predicted_zero(spec, y)
        if predicted == 0.0:
            flags.append("remark2")

    # the proof's orientation: with A(0), C(0) > 0 the zero sits at negative sigma
    prefer = None
    if not spec.remark1:
        orient = spec.A(0.0) * spec.C(0.0)
        if orient != 0.0:
            prefer = -1 if orient > 0 else 1

    f = lambda s: eval_mold(spec, y, s)
    bracket = scan_for_bracket(f, -half, half, points=SCAN_POINTS, prefer=prefer)
    if bracket is None:
        return failed_report(y, eps, *flags, "no_bracket", predicted=predicted)

    res = bisect(f, bracket, tol=tol)
    beta = res.root
    if predicted == 0.0 or math.isnan(predicted):
        ratio = math.nan
        sign_agrees = False
    else:
        ratio = abs(beta) / abs(predicted)
        sign_agrees = (beta < 0) == (predicted < 0)
    return SiegelZeroReport(
        y=y,
        epsilon=eps,
        bracket_lo=res.enclosing.lo,
        bracket_hi=res.enclosing.hi,
        beta=beta,
        predicted=predicted,
        ratio=ratio,
        sign_agrees=sign_agrees,
        iterations=res.iterations,
        residual=res.residual,
        flags=tuple(flags),
    )


def asymptotic_ratio_sweep(spec: MoldSpec, y_grid: Sequence[float], eps: float = DEFAULT_EPS, tol: float = DEFAULT_TOL) -> list:
    if len(y_grid) < 3:
        raise ValueError("asymptotic_ratio_sweep needs at least 3 heights")
    return run_sweep(spec, y_grid, eps, tol).rows


def verify_nonvanishing(spec: MoldSpec, y: float, eps: float = DEFAULT_EPS, points: int = 10_000) -> bool:
    """True iff a dense scan of (-eps/log y, eps/log y) minus 0 shows no sign change on either side."""
    if not spec.remark1:
        raise PreconditionError("verify_nonvanishing applies to remark1 specs (b < d) only")
    half = min(eps / math.log(y), spec.sigma_window)
    grid = np.linspace(-half, half, points + 2)[1:-1]
    grid = grid[grid != 0.0]
    for side in (grid[grid < 0], grid[grid > 0]):
        vals = np.array([eval_mold(spec, y, float(s)) for s in side])
        if np.any(vals == 0.0) or np.any(np.sign(vals[1:]) != np.sign(vals[:-1])):
            return False
    return True


def _const(v):
    return lambda sigma: v


def preset(name: str) -> MoldSpec:
    """Synthetic molds with known behaviour, used by the CLI demo and tests."""
    one = _const(1.0)
    if name == "trivial":
        # zero at sigma = -1/y exactly
        return MoldSpec(a=0.0, b=1.0, c=0.0, d=0.0, A=one, C=one, label="trivial")
    if name == "decaying_bd":
        return MoldSpec(
            a=1.0, b=1.0, c=-1.0, d=0.0, A=one, C=one,
            D=lambda y, s: y ** -0.5, label="decaying_bd",
        )
    if name == "remark1":
        return MoldSpec(a=0.0, b=0.0, c=0.0, d=1.0, A=one, C=one, remark1=True, label="remark1")
    if name == "remark2":
        return MoldSpec(
            a=0.0, b=1.0, c=0.0, d=0.0, A=one, C=lambda s: s,
            D=lambda y, s: y ** -0.5, label="remark2",
        )
    raise KeyError(f"unknown mold preset {name!r}")


PRESETS = ("trivial", "decaying_bd", "remark1", "remark2")

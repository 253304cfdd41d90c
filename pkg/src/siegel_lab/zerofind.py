"""Bracketing and bisection near a simple pole, plus the sweep harness."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Callable, NamedTuple, Optional, Sequence

THREADS_ENV = "SIEGEL_LAB_THREADS"


@dataclass(frozen=True)
class Bracket:
    lo: float
    hi: float
    f_lo: float
    f_hi: float

    def __post_init__(self):
        degenerate = self.lo == self.hi and self.f_lo == 0.0 and self.f_hi == 0.0
        if degenerate:
            return
        if not self.lo < self.hi:
            raise ValueError(f"invalid bracket: lo={self.lo} must be < hi={self.hi}")
        # compare signs, not the product: the product of tiny values underflows to 0
        if not _signs_differ(self.f_lo, self.f_hi):
            raise ValueError(
                f"invalid bracket: no sign change (f_lo={self.f_lo}, f_hi={self.f_hi})"
            )

    @property
    def degenerate(self) -> bool:
        return self.lo == self.hi


class BisectResult(NamedTuple):
    root: float
    residual: float
    iterations: int
    bracket: Bracket
    # smallest bracket visited that contains root in its interior (or the final one)
    enclosing: Bracket


def bisect(f: Callable[[float], float], bracket: Bracket, tol: float = 1e-10, max_iter: int = 60) -> BisectResult:
    """Bisection until the bracket width is below tol relative to the root.

    The returned root is whichever of the final endpoints or midpoint has the
    smallest |f|, so the residual never exceeds |f| at either final end.
    """
    if bracket.degenerate:
        return BisectResult(bracket.lo, 0.0, 0, bracket, bracket)
    lo, hi, f_lo, f_hi = bracket.lo, bracket.hi, bracket.f_lo, bracket.f_hi
    history = [bracket]
    it = 0
    while it < max_iter:
        mid = 0.5 * (lo + hi)
        if hi - lo <= tol * max(abs(mid), 1e-300):
            break
        f_mid = f(mid)
        it += 1
        if f_mid == 0.0:
            exact = Bracket(mid, mid, 0.0, 0.0)
            return BisectResult(mid, 0.0, it, exact, history[-1])
        if (f_mid < 0.0) == (f_lo < 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
        history.append(Bracket(lo, hi, f_lo, f_hi))

    mid = 0.5 * (lo + hi)
    f_mid = f(mid)
    candidates = [(abs(f_mid), mid), (abs(f_lo), lo), (abs(f_hi), hi)]
    residual, root = min(candidates, key=lambda c: c[0])
    final = history[-1]
    enclosing = final
    for b in reversed(history):
        if b.lo < root < b.hi:
            enclosing = b
            break
    return BisectResult(root, residual, it, final, enclosing)


def _signs_differ(a: float, b: float) -> bool:
    return (a < 0.0 < b) or (b < 0.0 < a)


def scan_for_bracket(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    strategy: str = "geometric-inward",
    points: int = 40,
    prefer: Optional[int] = None,
) -> Optional[Bracket]:
    """Look for a sign change of f on (lo, 0) or (0, hi), sampling geometrically toward 0.

    Samples are lo*2^-k and hi*2^-k for k = 0..points. On each side the sign
    change closest to 0 is kept. ``prefer`` (-1 or +1) picks the side when both
    have one; otherwise the change closest to 0 wins. A sample where f is
    exactly zero is returned as a degenerate bracket.
    """
    if strategy != "geometric-inward":
        raise ValueError(f"unknown scan strategy {strategy!r}")
    if not lo < 0.0 < hi:
        raise ValueError(f"scan interval must straddle 0, got ({lo}, {hi})")

    found = {}
    for side, end in ((-1, lo), (1, hi)):
        # ordered from the endpoint inward
        xs = [end * 2.0 ** -k for k in range(points + 1)]
        vals = [f(x) for x in xs]
        best = None
        for k, (x, v) in enumerate(zip(xs, vals)):
            if v == 0.0:
                best = Bracket(x, x, 0.0, 0.0)
            elif k > 0 and _signs_differ(vals[k - 1], v):
                a, fa, b, fb = xs[k - 1], vals[k - 1], x, v
                if a > b:
                    a, fa, b, fb = b, fb, a, fa
                best = Bracket(a, b, fa, fb)
        if best is not None:
            found[side] = best

    if not found:
        return None
    if len(found) == 1:
        return next(iter(found.values()))
    if prefer in found:
        return found[prefer]
    return min(found.values(), key=lambda br: min(abs(br.lo), abs(br.hi)))


def thread_count() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return n


@dataclass
class SweepTable:
    rows: list
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        ys = [r.y for r in self.rows]
        if any(b <= a for a, b in zip(ys, ys[1:])):
            raise ValueError("sweep rows must have strictly increasing y")

    def __len__(self):
        return len(self.rows)


def run_sweep(spec, y_grid: Sequence[float], eps: float = 2.0, tol: float = 1e-10, description: str = "") -> SweepTable:
    """One find_siegel_zero call per height; per-row failures become flags."""
    from .mold import find_siegel_zero, failed_report

    ys = [float(y) for y in y_grid]
    if any(b <= a for a, b in zip(ys, ys[1:])):
        raise ValueError("y_grid must be strictly increasing")

    def one(y):
        try:
            return find_siegel_zero(spec, y, eps, tol)
        except (ArithmeticError, ValueError, RuntimeError) as exc:
            return failed_report(y, eps, f"error:{type(exc).__name__}")

    workers = min(thread_count(), max(len(ys), 1))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(one, ys))
    else:
        rows = [one(y) for y in ys]

    meta = {
        "spec": description or getattr(spec, "label", ""),
        "epsilon": eps,
        "tol": tol,
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }
    return SweepTable(rows=rows, metadata=meta)

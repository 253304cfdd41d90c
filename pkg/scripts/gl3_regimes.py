"""GL(3) constant term along lam2 - lam3 = 1: zeros for both regions and the w_max scan.

    python3 scripts/gl3_regimes.py --y-grid 1e2:1e6:5 --out-dir runs/gl3
"""

import argparse
from dataclasses import dataclass, field
from pathlib import Path

from siegel_lab.cli import parse_grid
from siegel_lab.gl3 import (
    REFERENCE_LAMBDA,
    REFERENCE_LAMBDA1,
    REFERENCE_POINT,
    Gl3Point,
    LambdaPath,
    Regime,
    gl3_mold,
    predicted_beta,
    wmax_region_scan,
)
from siegel_lab.report import GL3_EXTRA_COLUMNS, SCAN_COLUMNS, SWEEP_COLUMNS, sweep_records, to_csv
from siegel_lab.zerofind import run_sweep


@dataclass
class Gl3Config:
    point: Gl3Point = REFERENCE_POINT
    y_grid: list = field(default_factory=lambda: [1e2, 1e3, 1e4, 1e5])
    eps: float = 2.0
    tol: float = 1e-10
    scan_resolution: int = 400
    out_dir: Path = Path("runs/gl3")


def sweep_regime(cfg: Gl3Config, regime: Regime) -> None:
    lam0 = REFERENCE_LAMBDA[regime]
    fitted = gl3_mold(cfg.point, LambdaPath(lam0, REFERENCE_LAMBDA1))
    spec = fitted.spec
    table = run_sweep(spec, cfg.y_grid, cfg.eps, cfg.tol)

    def extra(row):
        return {"w_max": fitted.w_max.name, "w_ms": fitted.w_ms.name, "sign_agrees": row.sign_agrees}

    path = cfg.out_dir / f"gl3_{regime.value}.csv"
    path.write_text(to_csv(sweep_records(table, extra), SWEEP_COLUMNS + GL3_EXTRA_COLUMNS))
    print(f"{regime.value}: lam0={lam0.as_tuple()}  w_ms={fitted.w_ms.name}  b-d={spec.b - spec.d:.12g}  ->  {path}")
    print(f"{'y':>10} {'beta':>14} {'displayed':>14} {'|ratio|':>9} sign")
    for row in table.rows:
        if not row.found:
            print(f"{row.y:>10g} {'--':>14}  {';'.join(row.flags)}")
            continue
        shown = predicted_beta(regime, lam0, cfg.point.tau1, cfg.point.height * row.y)
        agree = "mold" if row.sign_agrees else "other"
        print(f"{row.y:>10g} {row.beta:>14.6e} {shown:>14.6e} {abs(row.beta / shown):>9.5f} {agree}")


def scan(cfg: Gl3Config) -> None:
    rows = wmax_region_scan(cfg.scan_resolution)
    records = [
        {"lambda1": lam.l1, "lambda2": lam.l2, "lambda3": lam.l3, "argmax": arg.name, "matches": ok, "excluded": ex}
        for lam, arg, ok, ex in rows
    ]
    path = cfg.out_dir / "wmax_scan.csv"
    path.write_text(to_csv(records, SCAN_COLUMNS))
    bad = sum(1 for r in records if not r["matches"])
    print(f"w_max scan: {len(records)} points, {bad} mismatches  ->  {path}")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--y-grid", default="100,1000,10000,100000")
    p.add_argument("--resolution", type=int, default=400)
    p.add_argument("--out-dir", type=Path, default=Path("runs/gl3"))
    args = p.parse_args()
    cfg = Gl3Config(y_grid=parse_grid(args.y_grid), scan_resolution=args.resolution, out_dir=args.out_dir)
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    for regime in (Regime.OMEGA1, Regime.OMEGA2):
        sweep_regime(cfg, regime)
    scan(cfg)


if __name__ == "__main__":
    main()

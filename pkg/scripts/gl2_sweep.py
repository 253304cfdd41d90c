"""Siegel zeros of e(x + iy, s) near s = 1 and the ratio (1 - beta) * pi * y / 3.

    python3 scripts/gl2_sweep.py --x 0 0.3 --y-grid 50:3200:7 --out-dir runs/gl2
"""

import argparse
import math
from dataclasses import dataclass, field
from pathlib import Path

from siegel_lab.cli import parse_grid
from siegel_lab.gl2 import UpperHalfPoint, gl2_mold
from siegel_lab.report import SWEEP_COLUMNS, sweep_records, to_csv
from siegel_lab.zerofind import run_sweep


@dataclass
class Gl2SweepConfig:
    xs: list = field(default_factory=lambda: [0.0, 0.3])
    base_height: float = 1.0
    y_grid: list = field(default_factory=lambda: [50.0, 100.0, 200.0, 400.0, 800.0])
    eps: float = 2.0
    tol: float = 1e-10
    out_dir: Path = Path("runs/gl2")


def run(cfg: Gl2SweepConfig) -> None:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    for x in cfg.xs:
        spec = gl2_mold(UpperHalfPoint(x, cfg.base_height))
        table = run_sweep(spec, cfg.y_grid, cfg.eps, cfg.tol)
        path = cfg.out_dir / f"gl2_x{x:g}.csv"
        path.write_text(to_csv(sweep_records(table), SWEEP_COLUMNS))
        print(f"x = {x:g}  ->  {path}")
        print(f"{'y':>10} {'1-beta':>14} {'3/(pi y)':>14} {'ratio':>9}")
        for row in table.rows:
            if not row.found:
                print(f"{row.y:>10g} {'--':>14} {'--':>14} {'--':>9}  {';'.join(row.flags)}")
                continue
            height = row.y * cfg.base_height
            print(f"{row.y:>10g} {-row.beta:>14.6e} {3 / (math.pi * height):>14.6e} {row.ratio:>9.5f}")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--x", type=float, nargs="+", default=[0.0, 0.3])
    p.add_argument("--Y", type=float, default=1.0)
    p.add_argument("--y-grid", default="50,100,200,400,800")
    p.add_argument("--eps", type=float, default=2.0)
    p.add_argument("--out-dir", type=Path, default=Path("runs/gl2"))
    args = p.parse_args()
    run(Gl2SweepConfig(xs=args.x, base_height=args.Y, y_grid=parse_grid(args.y_grid), eps=args.eps, out_dir=args.out_dir))


if __name__ == "__main__":
    main()

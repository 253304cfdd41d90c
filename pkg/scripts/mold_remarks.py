"""Synthetic molds: exact zeros, a decaying perturbation, and the two degenerate cases.

    python3 scripts/mold_remarks.py --y-grid 1e2:1e8:7
"""

import argparse
import math

from siegel_lab.cli import parse_grid
from siegel_lab.mold import PRESETS, find_siegel_zero, preset, verify_nonvanishing


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--y-grid", default="1e2:1e8:7")
    p.add_argument("--eps", type=float, default=2.0)
    args = p.parse_args()
    grid = parse_grid(args.y_grid)

    for name in PRESETS:
        spec = preset(name)
        print(f"\n{name}: a={spec.a} b={spec.b} c={spec.c} d={spec.d}")
        for y in grid:
            rep = find_siegel_zero(spec, y, args.eps)
            if name == "remark1":
                # a missing bracket is the expected outcome; confirm with a dense scan
                dense = verify_nonvanishing(spec, y, args.eps)
                print(f"  y={y:<10g} bracket={'yes' if rep.found else 'no':<4} dense scan nonvanishing={dense}")
                continue
            ratio = "N/A" if math.isnan(rep.ratio) else f"{rep.ratio:.6f}"
            print(f"  y={y:<10g} beta={rep.beta: .6e} predicted={rep.predicted: .6e} ratio={ratio} {';'.join(rep.flags)}")


if __name__ == "__main__":
    main()

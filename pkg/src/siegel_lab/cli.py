"""Command-line front end.

    siegel-lab specfun --fn zeta --arg 2
    siegel-lab gl2-siegel --x 0 --Y 1 --y-grid 50,100,200,400,800 --out gl2.csv
    siegel-lab gl3-siegel --regime omega1 --y-grid 1e2:1e5:4 --out gl3.csv
    siegel-lab wmax-scan --resolution 400 --out scan.csv
    siegel-lab mold-demo --preset remark2 --y-grid 1e4,1e6
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import gl2, gl3, mold, report, specfun
from .errors import DomainError, PreconditionError
from .zerofind import run_sweep

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_STRICT = 3
EXIT_PRECONDITION = 4

SPECFUNS = ("zeta", "zeta_star", "bessel_k", "log_gamma")


class UsageError(Exception):
    pass


def parse_grid(text: str) -> list:
    """'50,100,200' or geometric shorthand 'lo:hi:count'."""
    text = text.strip()
    if not text:
        return []
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise UsageError(f"grid shorthand must be lo:hi:count, got {text!r}")
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
        if lo <= 0 or hi <= lo or count < 1:
            raise UsageError(f"bad geometric grid {text!r}")
        grid = [float(v) for v in np.geomspace(lo, hi, count)]
        # pin the endpoints exactly
        grid[0], grid[-1] = lo, hi if count > 1 else lo
    else:
        grid = [float(v) for v in text.split(",") if v.strip()]
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise UsageError(f"grid must be strictly increasing: {text!r}")
    return grid


def parse_vector(text: str, n: int, name: str) -> tuple:
    vals = [float(v) for v in text.split(",")]
    if len(vals) != n:
        raise UsageError(f"--{name} needs {n} comma-separated numbers, got {text!r}")
    return tuple(vals)


def format_scalar(value: float) -> str:
    if value != 0 and (abs(value) < 1e-3 or abs(value) >= 1e15):
        return f"{value:.15e}"
    return f"{value:.15f}"


def cmd_specfun(args) -> int:
    if args.fn == "bessel_k":
        if args.nu is None:
            raise UsageError("bessel_k needs --nu")
        value = specfun.bessel_k(args.nu, args.arg)
    elif args.fn == "zeta":
        value = specfun.riemann_zeta(args.arg)
    elif args.fn == "zeta_star":
        value = specfun.zeta_star(args.arg)
    else:
        value = specfun.log_gamma(args.arg)
    print(format_scalar(value))
    return EXIT_OK


def _emit(table, args, extra=None, extra_columns=()) -> int:
    records = report.sweep_records(table, extra)
    columns = report.SWEEP_COLUMNS + tuple(extra_columns)
    if args.format == "json":
        text = report.to_json(records, columns, table.metadata)
    else:
        text = report.to_csv(records, columns)
    report.write(text, args.out)
    failed = [r for r in table.rows if any(f.startswith("error") or f == "no_bracket" for f in r.flags)]
    if args.strict and failed:
        print(f"{len(failed)} row(s) failed", file=sys.stderr)
        return EXIT_STRICT
    return EXIT_OK


def cmd_gl2_siegel(args) -> int:
    grid = parse_grid(args.y_grid)
    if grid and args.Y * grid[0] < 1:
        raise UsageError("need Y * min(y_grid) >= 1")
    tau = gl2.UpperHalfPoint(args.x, args.Y)
    spec = gl2.gl2_mold(tau)
    table = run_sweep(spec, grid, args.eps, args.tol)
    return _emit(table, args)


def cmd_gl3_siegel(args) -> int:
    regime = gl3.Regime(args.regime)
    if args.lam0 is None:
        lam0 = gl3.REFERENCE_LAMBDA[regime]
    else:
        lam0 = gl3.SpectralParam(*parse_vector(args.lam0, 3, "lam0"))
    lam1 = gl3.SpectralParam(*parse_vector(args.lam1, 3, "lam1"))
    point = gl3.Gl3Point(*parse_vector(args.point, 5, "point"))
    try:
        path = gl3.LambdaPath(lam0, lam1)
    except DomainError as exc:
        raise PreconditionError(str(exc)) from exc
    actual = gl3.classify_regime(lam0)
    if actual is not regime:
        raise PreconditionError(f"lam0={lam0.as_tuple()} is in {actual.value}, not {regime.value}")
    fitted = gl3.gl3_mold(point, path)
    grid = parse_grid(args.y_grid)
    table = run_sweep(fitted.spec, grid, args.eps, args.tol)

    def extra(row):
        return {"w_max": fitted.w_max.name, "w_ms": fitted.w_ms.name, "sign_agrees": row.sign_agrees}

    return _emit(table, args, extra, report.GL3_EXTRA_COLUMNS)


def cmd_wmax_scan(args) -> int:
    rows = gl3.wmax_region_scan(args.resolution)
    records = [
        {
            "lambda1": lam.l1, "lambda2": lam.l2, "lambda3": lam.l3,
            "argmax": arg.name, "matches": matches, "excluded": excluded,
        }
        for lam, arg, matches, excluded in rows
    ]
    if args.format == "json":
        text = report.to_json(records, report.SCAN_COLUMNS, {"resolution": args.resolution})
    else:
        text = report.to_csv(records, report.SCAN_COLUMNS)
    report.write(text, args.out)
    mismatches = sum(1 for r in records if not r["matches"])
    excluded = sum(1 for r in records if r["excluded"])
    identity = sum(1 for r in records if r["argmax"] == "IDENTITY")
    summary = f"points={len(records)} mismatches={mismatches} excluded={excluded} identity_argmax={identity}"
    print(summary, file=sys.stderr if args.out in (None, "-") else sys.stdout)
    return EXIT_OK


def cmd_mold_demo(args) -> int:
    if args.preset not in mold.PRESETS:
        raise UsageError(f"unknown preset {args.preset!r}; choose from {', '.join(mold.PRESETS)}")
    spec = mold.preset(args.preset)
    table = run_sweep(spec, parse_grid(args.y_grid), args.eps, args.tol)
    return _emit(table, args)


def _add_output(p):
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")


def _add_sweep(p, grid_default):
    p.add_argument("--y-grid", default=grid_default, help="comma list or lo:hi:count (geometric)")
    p.add_argument("--eps", type=float, default=mold.DEFAULT_EPS)
    p.add_argument("--tol", type=float, default=mold.DEFAULT_TOL)
    p.add_argument("--strict", action="store_true", help="exit 3 if any row fails to bracket")
    _add_output(p)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="siegel-lab", description="Siegel zeros of Eisenstein series.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("specfun", help="evaluate a special function")
    p.add_argument("--fn", choices=SPECFUNS, required=True)
    p.add_argument("--arg", type=float, required=True)
    p.add_argument("--nu", type=float, default=None)
    p.set_defaults(func=cmd_specfun)

    p = sub.add_parser("gl2-siegel", help="Siegel zeros of e(x + iYy, s) along a y grid")
    p.add_argument("--x", type=float, default=0.0)
    p.add_argument("--Y", type=float, default=1.0)
    _add_sweep(p, "50,100,200,400,800")
    p.set_defaults(func=cmd_gl2_siegel)

    p = sub.add_parser("gl3-siegel", help="Siegel zeros of the GL(3) constant term")
    p.add_argument("--regime", choices=[r.value for r in gl3.Regime if r is not gl3.Regime.BOUNDARY],
                   default="omega1")
    p.add_argument("--lam0", default=None, help="l1,l2,l3 on l2 - l3 = 1 (default: regime reference)")
    p.add_argument("--lam1", default="0,0,0", help="l1,l2,l3 with l2 = l3")
    p.add_argument("--point", default="0,0,0,1.2,1", help="x1,x2,x3,y1,y2")
    _add_sweep(p, "100,1000,10000,100000")
    p.set_defaults(func=cmd_gl3_siegel)

    p = sub.add_parser("wmax-scan", help="brute-force w_max over the real hyperplane")
    p.add_argument("--resolution", type=int, default=400)
    _add_output(p)
    p.set_defaults(func=cmd_wmax_scan)

    p = sub.add_parser("mold-demo", help="synthetic molds")
    p.add_argument("--preset", required=True)
    _add_sweep(p, "10,100,1000")
    p.set_defaults(func=cmd_mold_demo)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "resolution", 10) < 10:
        parser.error("--resolution must be at least 10")
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (UsageError, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

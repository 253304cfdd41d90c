"""Siegel zeros of real-analytic Eisenstein series (GL(2) and a GL(3) example)."""

from .gl2 import UpperHalfPoint, eval_e, gl2_mold
from .gl3 import LambdaPath, Gl3Point, Regime, SpectralParam, WeylElt, gl3_mold
from .mold import MoldSpec, SiegelZeroReport, eval_mold, find_siegel_zero, predicted_zero
from .specfun import bessel_k, riemann_zeta, zeta_star
from .zerofind import SweepTable, run_sweep

__version__ = "0.1.0"

import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import sigma_zeta_star_mp, zeta_direct, zeta_star_mp
from siegel_lab.errors import DomainError, PoleError
from siegel_lab.specfun import (
    bessel_k,
    divisor_sigma,
    log_gamma,
    riemann_zeta,
    sigma_times_zeta_star,
    zeta_star,
    zeta_star_laurent_at_one,
)

# frozen from mpmath at 40 digits
ZETA_STAR_HALF = -3.9769662255065128793
K_QUARTER_3 = 0.035057056089413133983


@pytest.mark.parametrize(
    "x, expected",
    [(1.0, 0.0), (0.5, math.log(math.sqrt(math.pi))), (5.0, math.log(24.0))],
)
def test_log_gamma_examples(x, expected):
    assert log_gamma(x) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("x", [0.0, -1.5])
def test_log_gamma_domain(x):
    with pytest.raises(DomainError):
        log_gamma(x)


@given(st.floats(min_value=0.05, max_value=199.0))
def test_log_gamma_recursion(x):
    assert abs(log_gamma(x + 1) - log_gamma(x) - math.log(x)) <= 1e-12 * max(1.0, log_gamma(x + 1))


def test_log_gamma_against_mpmath():
    for x in np.linspace(0.05, 200, 97):
        assert abs(log_gamma(x) - float(mp.loggamma(x))) <= 1e-12 * max(1.0, abs(float(mp.loggamma(x))))


def test_zeta_examples():
    assert riemann_zeta(2.0) == pytest.approx(math.pi ** 2 / 6, abs=1e-10)
    assert riemann_zeta(0.0) == pytest.approx(-0.5, abs=1e-10)
    assert riemann_zeta(3.0) == pytest.approx(zeta_direct(3.0), abs=1e-10)


def test_zeta_pole_guard():
    with pytest.raises(PoleError):
        riemann_zeta(1.0 + 1e-10)
    assert math.isfinite(riemann_zeta(1.0 + 1e-8))


def test_zeta_against_mpmath_on_range():
    for s in np.linspace(-5, 50, 331):
        if abs(s - 1) < 1e-3:
            continue
        assert abs(riemann_zeta(s) - float(mp.zeta(s))) <= 1e-10


def test_zeta_star_examples():
    assert zeta_star(2.0) == pytest.approx(math.pi / 6, abs=1e-12)
    assert zeta_star(0.5) == pytest.approx(ZETA_STAR_HALF, rel=1e-12)
    assert zeta_star(0.5) == pytest.approx(float(zeta_star_mp(0.5)), rel=1e-12)
    assert abs(zeta_star(3.0) - zeta_star(-2.0)) <= 1e-10


@pytest.mark.parametrize("s", [0.0, 1.0, 5e-7, 1 - 5e-7])
def test_zeta_star_pole_guard(s):
    with pytest.raises(PoleError):
        zeta_star(s)


def test_zeta_star_functional_equation_200_samples():
    rng = np.random.default_rng(7)
    samples = rng.uniform(-4, 5, 400)
    samples = [s for s in samples if min(abs(s), abs(s - 1)) > 1e-3][:200]
    assert len(samples) == 200
    for s in samples:
        lhs, rhs = zeta_star(s), zeta_star(1 - s)
        assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(lhs))


def test_functional_equation_through_raw_zeta():
    # zeta_star folds s to max(s, 1 - s); check riemann_zeta across the symmetry
    def raw(s):
        return math.pi ** (-s / 2) * math.gamma(s / 2) * riemann_zeta(s)

    rng = np.random.default_rng(3)
    for s in rng.uniform(-4, 5, 200):
        if min(abs(s), abs(s - 1), abs(s + 2), abs(s + 4)) < 1e-3:
            continue
        assert abs(raw(s) - raw(1 - s)) <= 1e-10 * max(1.0, abs(raw(s)))


def test_zeta_star_against_mpmath():
    for s in np.linspace(-4, 5, 91):
        if min(abs(s), abs(s - 1)) < 1e-3:
            continue
        ref = float(zeta_star_mp(s))
        assert abs(zeta_star(s) - ref) <= 1e-11 * max(1.0, abs(ref))


def test_laurent_at_one():
    pair = zeta_star_laurent_at_one()
    assert pair.residue == 1
    assert pair.constant_term == pytest.approx(float((mp.euler - mp.log(4 * mp.pi)) / 2), abs=1e-14)
    # the truncation error is second order: about 0.99 * sigma^2
    for sigma in (0.01, -0.01, 1e-3, -1e-3):
        gap = abs(sigma * zeta_star(1 + sigma) - (pair.residue + sigma * pair.constant_term))
        assert gap <= 1.2 * sigma ** 2


@pytest.mark.xfail(strict=True, reason="second-order term is ~1e-4 at sigma=0.01; see ledger")
def test_laurent_first_order_within_1e6_at_one_percent():
    pair = zeta_star_laurent_at_one()
    assert abs(0.01 * zeta_star(1.01) - (pair.residue + 0.01 * pair.constant_term)) <= 1e-6


def test_sigma_times_zeta_star_examples():
    assert sigma_times_zeta_star(0.0) == 1.0
    assert sigma_times_zeta_star(0.1) == pytest.approx(0.1 * zeta_star(1.1), abs=1e-10)
    assert sigma_times_zeta_star(-0.1) == pytest.approx(-0.1 * zeta_star(0.9), abs=1e-10)


def test_sigma_times_zeta_star_continuity():
    const = zeta_star_laurent_at_one().constant_term
    for sigma in (1e-6, -1e-6):
        value = sigma_times_zeta_star(sigma)
        assert abs(value - 1.0) <= 1e-6
        assert abs(value - (1.0 + const * sigma)) <= 1e-8
    # the series branch and the direct branch meet at |sigma| = 1e-3
    for edge in (1e-3, -1e-3):
        below = sigma_times_zeta_star(edge * (1 - 1e-9))
        above = sigma_times_zeta_star(edge * (1 + 1e-9))
        assert abs(below - above) <= 1e-10


@pytest.mark.xfail(strict=True, reason="first-order drift is ~9.8e-7 at |sigma|=1e-6; see ledger")
def test_sigma_times_zeta_star_within_1e8_of_one():
    assert abs(sigma_times_zeta_star(1e-6) - 1.0) <= 1e-8


@given(st.floats(min_value=-0.5, max_value=0.5))
@settings(max_examples=200)
def test_sigma_times_zeta_star_against_exact(sigma):
    assert abs(sigma_times_zeta_star(sigma) - sigma_zeta_star_mp(sigma)) <= 1e-10


def test_sigma_times_zeta_star_domain():
    with pytest.raises(DomainError):
        sigma_times_zeta_star(0.6)


def test_bessel_examples():
    k_half = bessel_k(0.5, 1.0)
    assert k_half == pytest.approx(math.sqrt(math.pi / 2) * math.exp(-1), rel=1e-9)
    assert bessel_k(1.5, 2.0) == pytest.approx(bessel_k(0.5, 2.0) * (1 + 1 / 2.0), rel=1e-9)
    assert bessel_k(0.25, 3.0) == pytest.approx(K_QUARTER_3, rel=1e-9)


@pytest.mark.parametrize("nu, x", [(0.5, 0.0), (0.5, -1.0), (2.5, 1.0), (0.0, 501.0)])
def test_bessel_domain(nu, x):
    with pytest.raises(DomainError):
        bessel_k(nu, x)


def test_bessel_against_mpmath_grid():
    for nu in np.linspace(-2, 2, 17):
        for x in np.geomspace(1e-3, 500, 23):
            ref = float(mp.besselk(nu, x))
            assert abs(bessel_k(nu, x) / ref - 1) <= 1e-9, (nu, x)


@given(st.floats(min_value=-1.0, max_value=1.0), st.floats(min_value=0.01, max_value=400.0))
@settings(max_examples=150)
def test_bessel_recurrence(nu, x):
    k_up, k_down, k_mid = bessel_k(nu + 1, x), bessel_k(nu - 1, x), bessel_k(nu, x)
    assert abs(k_up - k_down - (2 * nu / x) * k_mid) <= 1e-8 * k_up


def test_divisor_sigma_examples():
    assert divisor_sigma(0, 6) == 4
    assert divisor_sigma(1, 6) == 12
    assert divisor_sigma(-1, 4) == pytest.approx(1.75)
    assert divisor_sigma(0, 1) == 1
    assert divisor_sigma(1, 49) == 57


@pytest.mark.parametrize("n", [0, -3, 2.5])
def test_divisor_sigma_domain(n):
    with pytest.raises(DomainError):
        divisor_sigma(1, n)


@given(
    st.integers(min_value=1, max_value=3000),
    st.integers(min_value=1, max_value=3000),
    st.sampled_from([-1.5, -1.0, 0.0, 0.3, 1.0, 2.0]),
)
def test_divisor_sigma_multiplicative(m, n, nu):
    if math.gcd(m, n) != 1:
        return
    assert divisor_sigma(nu, m * n) == pytest.approx(divisor_sigma(nu, m) * divisor_sigma(nu, n), rel=1e-12)


def test_divisor_sigma_brute_force():
    for n in range(1, 200):
        expected = sum(d ** 0.7 for d in range(1, n + 1) if n % d == 0)
        assert divisor_sigma(0.7, n) == pytest.approx(expected, rel=1e-13)

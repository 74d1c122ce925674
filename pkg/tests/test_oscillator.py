import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from fracschrod.oracle import ExpWeight, build_operator, harmonic_grid, inner_product, oracle_states, solve
from fracschrod.oscillator import (
    hermite,
    osc_eigenfunction,
    osc_normalization,
    osc_residual,
    osc_state,
    oscillator_energy,
    pn_oracle,
    pn_polynomial,
    quantize_oscillator,
    series_coefficients,
    series_ratio,
)
from fracschrod.params import Convention, PhysicalParams, derive_scales

MUS = [0.0, 0.5, 1.0, math.sqrt(2.0)]


def test_hermite_against_numpy():
    y = np.linspace(-3, 3, 13)
    for n in range(8):
        basis = np.zeros(n + 1)
        basis[n] = 1
        assert np.allclose(hermite(n, y), np.polynomial.hermite.hermval(y, basis))


@pytest.mark.parametrize("mu", MUS)
@pytest.mark.parametrize("n", range(11))
def test_pn_matches_quadrature(n, mu):
    assert pn_polynomial(n)(mu) == pytest.approx(pn_oracle(n, mu), rel=1e-9)


def test_pn_exact_values():
    assert [pn_polynomial(n).exact(1) for n in (1, 2, 3)] == [3, 14, 86]
    for n in range(12):
        assert pn_polynomial(n)(0) == math.factorial(n)


def test_pn_coefficients_are_integers():
    for n in range(25):
        assert all(isinstance(c, int) for c in pn_polynomial(n).coeffs)
    assert pn_polynomial(20).coeffs[-1] == 2**20


def test_pn_exact_fraction():
    half = pn_polynomial(2).exact(Fraction(1, 2))
    assert half == Fraction(2 + 8 * Fraction(1, 4) + 4 * Fraction(1, 16))


@given(st.integers(0, 12), st.floats(0.0, 3.0))
def test_pn_positive_and_increasing(n, mu):
    P = pn_polynomial(n)
    assert P(mu) >= math.factorial(n)
    assert P(mu + 0.1) >= P(mu)


@pytest.mark.parametrize("conv", list(Convention))
def test_series_terminates(osc_rest, conv):
    g = derive_scales(osc_rest, conv).g
    for lv in quantize_oscillator(osc_rest, conv, 5).levels:
        assert series_ratio(lv.n, lv.eps, g) == 0.0
        coeffs = series_coefficients(lv.n % 2, lv.eps, g, lv.n + 8)
        assert all(c == 0 for c in coeffs[lv.n + 1 :])
        assert coeffs[lv.n] != 0


def test_series_ratio_exact():
    g = Fraction(3, 2)
    for n in range(6):
        eps = n + Fraction(1, 2) + g * g / 8
        assert series_ratio(n, eps, g) == 0


def test_series_recovers_hermite():
    # with g = 0 the terminating series is proportional to H_n
    y = np.linspace(-2, 2, 9)
    for n in range(6):
        c = series_coefficients(n % 2, n + 0.5, 0.0, n + 1)
        poly = np.polynomial.polynomial.polyval(y, c)
        h = hermite(n, y)
        k = h[-1] / poly[-1]
        assert np.allclose(k * poly, h)


def test_rest_matched_energies(osc_rest):
    spec = quantize_oscillator(osc_rest, Convention.PAPER_OSCILLATOR, 5)
    assert np.allclose(spec.energies, 1.0 + np.arange(6) + 0.5, rtol=1e-15)
    eq8 = quantize_oscillator(osc_rest, Convention.EQ8_CONSISTENT, 0)
    assert eq8.eps[0] == pytest.approx(4.5)


def test_energy_formula_exact():
    sympy = pytest.importorskip("sympy")
    for n in range(6):
        E = oscillator_energy(n, 1, 1, sympy.sqrt(8))
        assert E == sympy.Integer(1) + sympy.Rational(2 * n + 1, 2)


@pytest.mark.parametrize("conv", list(Convention))
def test_oracle_levels(osc_rest, conv):
    s = derive_scales(osc_rest, conv)
    got = solve(osc_rest, "harmonic", harmonic_grid(s.mu, 4000), 6, conv).values
    assert np.allclose(got, quantize_oscillator(osc_rest, conv, 5).eps, atol=1e-6)


@pytest.mark.parametrize("n", range(6))
def test_normalization(osc_rest, n):
    mu = derive_scales(osc_rest).mu
    x = np.linspace(-25, 20, 20001)
    s = osc_eigenfunction(osc_rest, n, x)
    assert s.norm() == pytest.approx(1.0, abs=1e-12)
    assert osc_normalization(osc_rest, n, mu) == s.values[0] * 0 + osc_state(osc_rest, n).A_n


def test_ground_normalization_value():
    p = PhysicalParams(B=1 / math.sqrt(8))
    assert osc_normalization(p, 1, math.sqrt(2)) == pytest.approx(0.23752675, abs=1e-8)


@pytest.mark.parametrize("conv", list(Convention))
def test_residual(osc_rest, conv):
    for n in range(6):
        assert osc_residual(osc_rest, n, conv) < 1e-8


def test_analytic_derivative(osc_rest):
    st_ = osc_state(osc_rest, 3)
    x = np.linspace(-3, 2, 11)
    h = 1e-6
    fd = (st_(x + h) - st_(x - h)) / (2 * h)
    assert np.allclose(st_.derivative(x), fd, atol=1e-8)


def test_ground_peak_at_minus_mu(natural):
    s = derive_scales(natural)
    x = np.linspace(-3, 3, 60001)
    peak = x[np.argmax(osc_state(natural, 0)(x))]
    assert peak == pytest.approx(-s.mu / s.b, abs=1e-4)


def test_weighted_orthogonality(natural):
    s = derive_scales(natural)
    x = np.linspace(-14 - s.mu, 14, 8001) / s.b
    w = ExpWeight(s.g * s.b)
    for i in range(4):
        for j in range(i + 1, 4):
            a = osc_eigenfunction(natural, i, x)
            b = osc_eigenfunction(natural, j, x)
            assert abs(inner_product(a, b, w)) < 1e-10


def test_oracle_states_match_closed_form(natural):
    s = derive_scales(natural)
    grid = harmonic_grid(s.mu, 3000)
    _, states = oracle_states(build_operator(natural, "harmonic", grid), 3)
    for n, o in enumerate(states):
        ref = osc_state(natural, n).in_y(grid.points())
        ref = ref / math.sqrt(np.sum(ref**2) * grid.dx)
        if ref[np.argmax(np.abs(ref))] < 0:
            ref = -ref
        assert np.max(np.abs(ref - o.values)) < 1e-4

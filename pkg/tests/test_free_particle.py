import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from fracschrod.free_particle import (
    DampedPlaneWave,
    Regime,
    characteristic_roots,
    damped_packet,
    eq13_residual,
    fit_packet_translation,
    packet_translation,
    sample_damped_wave,
    translated_packet,
)
from fracschrod.params import PhysicalParams, underdamped_condition


def test_roots_natural_units(natural):
    r = characteristic_roots(natural, 1.0)
    assert r.regime is Regime.UNDERDAMPED
    assert r.lambda1 == complex(-1.0, 1.0)
    assert r.lambda2 == complex(-1.0, -1.0)


def test_critical_and_overdamped(natural):
    assert characteristic_roots(natural, 0.5).regime is Regime.CRITICAL
    r = characteristic_roots(natural, 0.1)
    assert r.regime is Regime.OVERDAMPED
    assert r.lambda1.real > r.lambda2.real


@given(st.floats(1e-3, 50.0), st.floats(1e-2, 1e2))
def test_vieta(E, B):
    p = PhysicalParams(B=B)
    r = characteristic_roots(p, E)
    q = 2.0 * p.m * E / p.hbar**2
    assert abs(r.lambda1 + r.lambda2 + 2.0 * p.xi) <= 1e-12 * max(1.0, p.xi)
    assert abs(r.lambda1 * r.lambda2 - q) <= 1e-9 * max(q, p.xi**2)


@given(st.floats(1e-3, 50.0), st.floats(1e-2, 1e2))
def test_regime_matches_condition(E, B):
    p = PhysicalParams(B=B)
    under = characteristic_roots(p, E).regime is Regime.UNDERDAMPED
    assert under == underdamped_condition(p, E)


def test_plane_wave_solves_equation(natural):
    wave = DampedPlaneWave.from_energy(natural, 3.0, 1.0, 0.5j)
    errs = []
    for n in (2001, 4001):
        s = sample_damped_wave(wave, np.linspace(0.0, 3.0, n))
        errs.append(eq13_residual(s, natural.xi, 6.0))
    assert errs[1] < 1e-5
    assert math.log2(errs[0] / errs[1]) == pytest.approx(2.0, abs=0.1)


def test_plane_wave_envelope(natural):
    wave = DampedPlaneWave(1.0, 2.0)
    x = np.linspace(0, 4, 9)
    assert np.allclose(np.abs(wave(x)), np.exp(-x))
    with pytest.raises(ValueError):
        DampedPlaneWave(1.0, -1.0)


@given(st.floats(0.0, 3.0), st.floats(0.1, 2.0), st.floats(0.0, 2.0), st.floats(-3.0, 3.0))
def test_packet_translation_identity(xi, c, t, k0):
    x = np.linspace(-4.0, 4.0, 81) + c * t
    pt = packet_translation(xi, c, t, k0)
    lhs = damped_packet(x, xi, c, t, k0)
    rhs = translated_packet(x, pt, c, t, k0)
    assert np.allclose(lhs, rhs, rtol=1e-12, atol=0)


def test_fit_recovers_half_xi():
    xi, c, t, k0 = 2.0, 1.0, 0.3, 1.5
    x = np.linspace(-5.0, 5.0, 401)
    fit = fit_packet_translation(x, damped_packet(x, xi, c, t, k0), c, t, k0)
    assert fit.shift == pytest.approx(xi / 2.0, abs=1e-10)
    assert fit.amplitude == pytest.approx(packet_translation(xi, c, t).amplitude, rel=1e-9)
    # the shift is xi/2, not xi
    assert abs(fit.shift - xi) > 0.5


def test_fit_rejects_non_gaussian():
    x = np.linspace(-3, 3, 101)
    with pytest.raises(ValueError):
        fit_packet_translation(x, np.exp(-0.3 * x**2), 0.0, 0.0, 0.0)

import math
import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fracschrod.box import quantize_box
from fracschrod.grid import GridSpec
from fracschrod.oracle import (
    EigensolverError,
    box_grid,
    build_operator,
    harmonic_grid,
    oracle_states,
    solve,
    spectral_shift_check,
    spectrum,
)
from fracschrod.params import Convention, PhysicalParams


def test_box_spectrum_reproduced(natural):
    got = solve(natural, "box", box_grid(natural, 4000), 5).values
    exact = quantize_box(natural, 5).energies
    assert np.all(np.abs(got - exact) / exact < 1e-6)
    assert got[0] == pytest.approx(5.4348, abs=1e-4)


def test_second_order_convergence(natural):
    exact = quantize_box(natural, 3).energies
    e1 = np.abs(solve(natural, "box", box_grid(natural, 400), 3, richardson=False).values - exact)
    e2 = np.abs(solve(natural, "box", box_grid(natural, 800), 3, richardson=False).values - exact)
    ratio = e1 / e2
    assert np.all(np.abs(ratio - 4.0) / 4.0 < 0.2)


def test_routes_agree(natural):
    g = box_grid(natural, 1000)
    a = solve(natural, "box", g, 4, route="raw").values
    b = solve(natural, "box", g, 4, route="transformed").values
    assert np.allclose(a, b, rtol=1e-7)


def test_symmetric_matrix(natural):
    m = build_operator(natural, "box", box_grid(natural, 50))
    d = m.dense()
    assert np.array_equal(d, d.T)
    assert m.size == 48


def test_eigenvalues_match_dense(natural):
    m = build_operator(natural, "harmonic", harmonic_grid(0.5, 200))
    ref = np.linalg.eigvalsh(m.dense())[:5] + m.shift
    assert np.allclose(spectrum(m, 5).values, ref, rtol=1e-10)


def test_pure_python_fallback(natural):
    code = (
        "from fracschrod import kernels, oracle, params;"
        "p = params.PhysicalParams();"
        "print(kernels.BACKEND, repr(float(oracle.solve(p, 'box', oracle.box_grid(p, 300), 1).values[0])))"
    )
    env = dict(os.environ, FRACSCHROD_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    name, value = out.stdout.split()
    assert name == "python"
    ref = solve(natural, "box", box_grid(natural, 300), 1).values[0]
    assert float(value) == pytest.approx(ref, rel=1e-12)


@settings(max_examples=8, deadline=None)
@given(st.floats(0.2, 3.0))
def test_box_shift_law(B):
    p = PhysicalParams(B=B)
    assert spectral_shift_check(p, "box", box_grid(p, 2000)) < 1e-8


@pytest.mark.slow
@pytest.mark.parametrize("B", [1.0, 1 / math.sqrt(8)])
def test_oscillator_shift_law(B):
    p = PhysicalParams(B=B)
    assert spectral_shift_check(p, "harmonic", convention=Convention.EQ8_CONSISTENT) < 1e-8


def test_states_normalized(natural):
    _, states = oracle_states(build_operator(natural, "box", box_grid(natural, 500)), 3)
    for s in states:
        assert s.norm() == pytest.approx(1.0, abs=1e-12)


def test_custom_potential(natural):
    g = GridSpec(-0.5, 0.5, 400)
    m = build_operator(natural, np.zeros(400), g)
    assert spectrum(m, 1).values[0] == pytest.approx(quantize_box(natural, 1).energies[0], rel=1e-4)
    with pytest.raises(ValueError):
        solve(natural, np.zeros(400), g, 1)


def test_bad_requests(natural):
    g = box_grid(natural, 100)
    with pytest.raises(ValueError):
        build_operator(natural, "well", g)
    with pytest.raises(ValueError):
        spectrum(build_operator(natural, "box", g), 30)
    with pytest.raises(TypeError):
        build_operator(natural, "box", np.linspace(0, 1, 10))
    with pytest.raises(EigensolverError):
        spectrum(build_operator(natural, "box", g), 3, maxiter=2)

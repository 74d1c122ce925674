import numpy as np
import pytest

from fracschrod.grid import GridSpec, WaveSample, derivative, derivative_matrix, second_derivative, trapezoid


def test_gridspec_validation():
    with pytest.raises(ValueError):
        GridSpec(0.0, 1.0, 15)
    with pytest.raises(ValueError):
        GridSpec(1.0, 1.0, 100)


def test_refined_halves_spacing():
    g = GridSpec(-1.0, 2.0, 301)
    assert g.refined().dx == pytest.approx(g.dx / 2)
    assert g.points()[0] == -1.0 and g.points()[-1] == 2.0


def test_wavesample_rejects_nonuniform():
    with pytest.raises(ValueError):
        WaveSample(np.array([0.0, 1.0, 3.0]), np.zeros(3))
    with pytest.raises(ValueError):
        WaveSample(np.array([0.0]), np.zeros(1))


def test_normalized_gaussian():
    x = np.linspace(-10, 10, 2001)
    s = WaveSample(x, 3.0 * np.exp(-x**2 / 2)).normalized()
    assert s.norm() == pytest.approx(1.0, abs=1e-14)
    assert trapezoid(s.density(), s.dx) == pytest.approx(1.0, abs=1e-14)


@pytest.mark.parametrize("n", [101, 201, 401])
def test_fourth_order_derivatives(n):
    x = np.linspace(0.0, 2.0, n)
    h = x[1] - x[0]
    err1 = np.max(np.abs(derivative(np.sin(x), h) - np.cos(x)))
    err2 = np.max(np.abs(second_derivative(np.sin(x), h) + np.sin(x)))
    assert err1 < 5 * h**4
    assert err2 < 50 * h**4 / h


def test_derivative_order_observed():
    errs = []
    for n in (101, 201):
        x = np.linspace(0.0, 2.0, n)
        errs.append(np.max(np.abs(derivative(np.exp(x), x[1] - x[0]) - np.exp(x))))
    assert np.log2(errs[0] / errs[1]) > 3.5


def test_derivative_matrix_matches_function():
    x = np.linspace(0.0, 1.0, 40)
    D = derivative_matrix(40, x[1] - x[0])
    assert np.allclose(D @ x**3, derivative(x**3, x[1] - x[0]), atol=1e-12)


def test_derivative_needs_six_points():
    with pytest.raises(ValueError):
        derivative(np.zeros(5), 0.1)

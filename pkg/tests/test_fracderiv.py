import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fracschrod.fracderiv import (
    SampledFunction,
    check_order,
    derivative_table,
    gl_derivative,
    gl_transform,
    gl_weights,
    power_rule_oracle,
    read_sampled_csv,
    semigroup_residual,
    write_derivative_csv,
)


def _sample(func, dx, b=1.0):
    return SampledFunction.from_callable(func, 0.0, b, dx)


def test_weights_recurrence():
    w = gl_weights(0.5, 5)
    # (-1)^k binom(1/2, k)
    assert np.allclose(w, [1.0, -0.5, -0.125, -0.0625, -0.0390625])


def test_order_bounds():
    for bad in (0.0, -0.5, 1.5):
        with pytest.raises(ValueError):
            check_order(bad)


@pytest.mark.parametrize("p", [0.0, 1.0, 2.0])
def test_half_derivative_power_rule(p):
    f = _sample(lambda x: x**p, 1e-4)
    got = gl_derivative(f, 0.5, 1.0)
    assert abs(got - power_rule_oracle(p, 0.5, 1.0)) < 1e-3


def test_half_derivative_of_x():
    f = _sample(lambda x: x, 1e-3)
    got = gl_derivative(f, 0.5, 0.5)
    assert got == pytest.approx(2.0 * math.sqrt(0.5 / math.pi), abs=1e-3)


@pytest.mark.parametrize("p", [1.0, 2.0, 3.0])
def test_convergence_at_least_linear(p):
    errs = []
    for dx in (1e-2, 5e-3, 2.5e-3):
        f = _sample(lambda x: x**p, dx)
        errs.append(abs(gl_derivative(f, 0.5, 1.0) - power_rule_oracle(p, 0.5, 1.0)))
    orders = np.log2(np.array(errs[:-1]) / np.array(errs[1:]))
    assert np.all(orders > 0.9)


def test_power_rule_pole():
    assert power_rule_oracle(0.0, 1.0, 2.0) == 0.0


def test_alpha_one_is_backward_difference():
    dx = 1e-3
    f = _sample(np.sin, dx)
    d = gl_transform(f, 1.0)
    expected = (f.values[1:] - f.values[:-1]) / dx
    assert np.allclose(d[1:], expected, atol=1e-12)
    assert abs(d[500] - math.cos(0.5)) < dx


@settings(max_examples=30, deadline=None)
@given(st.floats(-3, 3), st.floats(-3, 3))
def test_linearity(a, b):
    dx = 1e-2
    f = _sample(np.cos, dx)
    g = _sample(lambda x: x**2, dx)
    h = SampledFunction(0.0, dx, a * f.values + b * g.values)
    lhs = gl_transform(h, 0.5)
    rhs = a * gl_transform(f, 0.5) + b * gl_transform(g, 0.5)
    assert np.allclose(lhs, rhs, atol=1e-11 * (1 + abs(a) + abs(b)))


def test_complex_input():
    dx = 1e-2
    f = SampledFunction(0.0, dx, np.exp(1j * np.arange(101) * dx))
    d = gl_transform(f, 0.5)
    re = gl_transform(SampledFunction(0.0, dx, f.values.real), 0.5)
    assert np.allclose(d.real, re)


def test_semigroup_residual_shrinks():
    res = []
    for dx in (4e-3, 2e-3, 1e-3):
        f = _sample(lambda x: x**2, dx, 1.0 + 2 * dx)
        res.append(semigroup_residual(f, 1.0))
    order = math.log2(res[0] / res[-1]) / 2
    assert order >= 0.5
    assert res[-1] < 10 * math.sqrt(1e-3)


def test_semigroup_needs_interior_point():
    f = _sample(lambda x: x, 0.1)
    with pytest.raises(ValueError):
        semigroup_residual(f, 1.0)
    with pytest.raises(ValueError):
        semigroup_residual(f, 0.3)


def test_evaluation_point_must_be_on_grid():
    f = _sample(lambda x: x, 0.1)
    with pytest.raises(ValueError):
        gl_derivative(f, 0.5, 0.55)
    with pytest.raises(ValueError):
        gl_derivative(f, 0.5, 0.0)


def test_csv_round_trip(tmp_path):
    src = tmp_path / "in.csv"
    src.write_text("# comment\nx,value\n0,0\n0.5,0.25\n1,1\n1.5,2.25\n")
    f = read_sampled_csv(src)
    assert f.dx == 0.5 and len(f.values) == 4
    out = tmp_path / "out.csv"
    write_derivative_csv(out, f, 0.5, header_lines=["alpha = 0.5"])
    text = out.read_text()
    assert text.startswith("# alpha = 0.5\nx,value,derivative\n")
    assert text == derivative_table(f, 0.5, header_lines=["alpha = 0.5"])


def test_csv_rejects_nonuniform(tmp_path):
    src = tmp_path / "in.csv"
    src.write_text("x,value\n0,0\n0.5,0\n1.5,0\n2,0\n")
    with pytest.raises(ValueError):
        read_sampled_csv(src)

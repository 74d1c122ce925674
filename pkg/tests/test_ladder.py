import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fracschrod.grid import WaveSample
from fracschrod.ladder import (
    BuildStateWarning,
    LadderKind,
    LadderOperator,
    adjointness_audit,
    apply_ladder,
    build_state,
    commutator_value,
    destroy_ratio_derived,
    fractionary_energy_paper,
    ladder_grid,
    ladder_ratio,
    ladder_shift_residual,
    measured_ratio,
    momentum_expectation_paper,
)
from fracschrod.oscillator import osc_state, pn_oracle
from fracschrod.params import PhysicalParams, derive_scales

UNDAMPED = PhysicalParams(B=math.inf)


def test_constants_opposite(osc_rest):
    a = LadderOperator.destroy(osc_rest).constant
    assert a == pytest.approx(1.0)
    assert LadderOperator.create(osc_rest).constant == -a


def test_annihilates_ground(osc_rest):
    x = ladder_grid(osc_rest)
    psi = WaveSample(x, osc_state(osc_rest, 0)(x))
    out = apply_ladder(LadderOperator.destroy(osc_rest), psi)
    assert out.norm() < 1e-6


@pytest.mark.parametrize("params", [PhysicalParams(), PhysicalParams(B=1 / math.sqrt(8)), UNDAMPED])
def test_built_states_match(params):
    for n in range(6):
        with warnings.catch_warnings():
            warnings.simplefilter("error", BuildStateWarning)
            built = build_state(n, params)
        ref = osc_state(params, n)(built.x)
        assert np.max(np.abs(built.values - ref)) < 1e-5


def test_build_state_warns_on_noisy_grid(osc_rest):
    x = ladder_grid(osc_rest, dy=2e-4)
    with pytest.warns(BuildStateWarning):
        build_state(8, osc_rest, x, tol=1e-9)


def test_commutator(osc_rest):
    chk = commutator_value(osc_rest)
    assert chk.value == pytest.approx(math.sqrt(0.5))
    assert abs(chk.numeric - chk.value) < 1e-6
    assert chk.max_deviation < 1e-6


def test_commutator_scales():
    p = PhysicalParams(m=2.0, c=3.0, hbar=0.5, omega=1.5)
    chk = commutator_value(p)
    assert chk.value == pytest.approx(0.5 * 2 * 3 * math.sqrt(2 * 1.5 / (2 * 0.5)))
    assert abs(chk.numeric - chk.value) < 1e-6 * chk.value


@pytest.mark.parametrize("mu", [0.0, 0.5, 1.0, math.sqrt(2)])
def test_ratio_against_quadrature(mu):
    for n in range(1, 8):
        expected = math.sqrt(pn_oracle(n, mu) / pn_oracle(n - 1, mu))
        assert ladder_ratio(n, mu) == pytest.approx(expected, rel=1e-9)


def test_ratios_at_zero_shift():
    for n in range(1, 10):
        assert ladder_ratio(n, 0.0) == pytest.approx(math.sqrt(n), rel=1e-15)
        assert destroy_ratio_derived(n, 0.0) == pytest.approx(math.sqrt(n), rel=1e-15)


@settings(max_examples=25)
@given(st.integers(1, 10), st.floats(0.05, 3.0))
def test_tabulated_and_derived_differ_when_shifted(n, mu):
    tab = ladder_ratio(n, mu)
    der = destroy_ratio_derived(n, mu)
    assert tab > der


def test_measured_ratios(osc_rest):
    mu = derive_scales(osc_rest).mu
    for n in (1, 2, 3):
        got = measured_ratio(osc_rest, n, LadderKind.DESTROY)
        assert got == pytest.approx(destroy_ratio_derived(n, mu), rel=1e-9)
    for n in (0, 1, 2):
        got = measured_ratio(osc_rest, n, LadderKind.CREATE)
        assert got == pytest.approx(ladder_ratio(n, mu, LadderKind.CREATE), rel=1e-9)


def test_measured_at_zero_shift():
    for n in (1, 4):
        assert measured_ratio(UNDAMPED, n, "Destroy") == pytest.approx(math.sqrt(n), rel=1e-9)


def test_shift_residual(osc_rest):
    for n in (1, 3):
        assert ladder_shift_residual(osc_rest, n, LadderKind.DESTROY) < 1e-5
    assert ladder_shift_residual(osc_rest, 0, LadderKind.CREATE) < 1e-5
    with pytest.raises(ValueError):
        ladder_shift_residual(osc_rest, 0, LadderKind.DESTROY)


def test_adjoint_defect(osc_rest):
    audit = adjointness_audit(osc_rest)
    assert audit.defect == pytest.approx(audit.expected, abs=1e-12)
    assert audit.expected == pytest.approx(2.0)
    assert audit.spread < 1e-10
    assert abs(adjointness_audit(UNDAMPED).defect) < 1e-12


@pytest.mark.parametrize("n", range(4))
def test_expectations_vanish(osc_rest, n):
    mom = momentum_expectation_paper(osc_rest, n)
    assert abs(mom.quadrature_value) < 1e-10
    assert mom.paper_formula_value == pytest.approx(-0.5j)
    en = fractionary_energy_paper(n, osc_rest)
    assert abs(en.quadrature_value) < 1e-10
    assert en.deviation > 0.1


def test_fractionary_energy_tabulated_values(osc_rest):
    assert fractionary_energy_paper(0, osc_rest).paper_formula_value == pytest.approx(2.0)
    assert fractionary_energy_paper(1, osc_rest).paper_formula_value == pytest.approx(-2.0)


def test_rejects_bad_levels():
    with pytest.raises(ValueError):
        ladder_ratio(0, 1.0)
    with pytest.raises(ValueError):
        build_state(13, UNDAMPED)
    with pytest.raises(ValueError):
        apply_ladder(LadderOperator.create(UNDAMPED), WaveSample(np.arange(5.0), np.zeros(5)))

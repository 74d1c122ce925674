"""Damped (fractional-momentum) quantum mechanics: closed forms and numerical oracles."""

from .kernels import BACKEND
from .params import Convention, DerivedScales, PhysicalParams, Problem, derive_scales
from .grid import GridSpec, WaveSample
from .fracderiv import SampledFunction, gl_derivative, gl_transform, power_rule_oracle
from .free_particle import characteristic_roots, packet_translation
from .box import box_eigenfunction, box_normalization, quantize_box
from .oscillator import osc_eigenfunction, osc_normalization, pn_oracle, pn_polynomial, quantize_oscillator
from .ladder import LadderKind, LadderOperator, apply_ladder, build_state, commutator_value, ladder_ratio
from .oracle import build_operator, inner_product, solve, spectral_shift_check, spectrum
from .report import RunConfig, Verdict, VerificationRow, claim_suite

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Convention",
    "DerivedScales",
    "GridSpec",
    "LadderKind",
    "LadderOperator",
    "PhysicalParams",
    "Problem",
    "RunConfig",
    "SampledFunction",
    "Verdict",
    "VerificationRow",
    "WaveSample",
    "apply_ladder",
    "box_eigenfunction",
    "box_normalization",
    "build_operator",
    "build_state",
    "characteristic_roots",
    "claim_suite",
    "commutator_value",
    "derive_scales",
    "gl_derivative",
    "gl_transform",
    "inner_product",
    "ladder_ratio",
    "osc_eigenfunction",
    "osc_normalization",
    "packet_translation",
    "pn_oracle",
    "pn_polynomial",
    "power_rule_oracle",
    "quantize_box",
    "quantize_oscillator",
    "solve",
    "spectral_shift_check",
    "spectrum",
]

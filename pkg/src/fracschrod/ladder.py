"""Fractional ladder operators acting on sampled oscillator states.

In ``y = b x`` the operators read

    a_f   = (y + d/dy) / sqrt(2) + kappa
    a_f^+ = (y - d/dy) / sqrt(2) - kappa,   kappa = (m/2B) sqrt(eps_r / 2).

They are not adjoint to each other: the transpose of ``a_f`` differs from
``a_f^+`` by ``2 kappa``.  States carry the shift ``mu = (m/2B) sqrt(eps_r)``,
so ``kappa = mu / sqrt(2)``.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .grid import WaveSample, derivative, derivative_matrix, second_derivative, trapezoid
from .oscillator import hermite_table, osc_state, pn_polynomial
from .params import Convention, PhysicalParams, derive_scales

__all__ = [
    "AdjointAudit",
    "BuildStateWarning",
    "CommutatorCheck",
    "ExpectationReport",
    "LadderKind",
    "LadderOperator",
    "adjointness_audit",
    "apply_hamiltonian",
    "apply_ladder",
    "build_state",
    "commutator_value",
    "destroy_ratio_derived",
    "fractionary_energy_paper",
    "ladder_grid",
    "ladder_ratio",
    "ladder_shift_residual",
    "measured_ratio",
    "momentum_expectation_paper",
]

_PAPER = Convention.PAPER_OSCILLATOR


class LadderKind(enum.Enum):
    DESTROY = "Destroy"
    CREATE = "Create"


@dataclass(frozen=True)
class LadderOperator:
    kind: LadderKind
    params: PhysicalParams

    @property
    def constant(self) -> float:
        """``+(m/2B) sqrt(eps_r/2)`` for Destroy, the negative for Create."""
        kappa = derive_scales(self.params, _PAPER).mu / math.sqrt(2.0)
        return kappa if self.kind is LadderKind.DESTROY else -kappa

    @classmethod
    def destroy(cls, params):
        return cls(LadderKind.DESTROY, params)

    @classmethod
    def create(cls, params):
        return cls(LadderKind.CREATE, params)


def ladder_grid(params: PhysicalParams, dy: float = 1e-3, pad: float = 14.0) -> np.ndarray:
    """Physical ``x`` grid covering ``y`` in ``[-mu - pad, pad]``."""
    s = derive_scales(params, _PAPER)
    n = int(round((2 * pad + s.mu) / dy)) + 1
    return np.linspace(-s.mu - pad, pad, n) / s.b


def apply_ladder(op: LadderOperator, psi: WaveSample) -> WaveSample:
    """``sqrt(m w / 2 hbar) x psi + const psi +- sqrt(hbar / 2 m w) psi'``."""
    if len(psi) < 6:
        raise ValueError("grid too coarse for the fourth-order derivative")
    p = op.params
    pos = math.sqrt(p.m * p.omega / (2.0 * p.hbar))
    mom = math.sqrt(p.hbar / (2.0 * p.m * p.omega))
    sign = 1.0 if op.kind is LadderKind.DESTROY else -1.0
    d = derivative(psi.values, psi.dx)
    out = pos * psi.x * psi.values + op.constant * psi.values + sign * mom * d
    return psi.with_values(out, f"{op.kind.value}({psi.label})")


@dataclass(frozen=True)
class CommutatorCheck:
    """Closed-form value, least-squares numerical estimate and worst pointwise deviation."""

    value: float
    numeric: float
    max_deviation: float


def commutator_value(params: PhysicalParams, points: int = 4001) -> CommutatorCheck:
    """``[a_f, -hbar m c d/dx] = hbar m c sqrt(m w / 2 hbar)``.

    The numerical check applies the commutator to three Gaussians on a grid
    and compares with the constant times the function, away from the edges.
    """
    p = params
    value = p.hbar * p.m * p.c * math.sqrt(p.m * p.omega / (2.0 * p.hbar))
    if p.omega == 0.0:
        return CommutatorCheck(0.0, 0.0, 0.0)
    x = np.linspace(-8.0, 8.0, points)
    dx = x[1] - x[0]
    op = LadderOperator.destroy(p)
    kin = -p.hbar * p.m * p.c
    inner = slice(50, -50)
    worst, num, den = 0.0, 0.0, 0.0
    for centre, width in ((0.0, 1.0), (0.7, 0.6), (-1.1, 1.4)):
        f = WaveSample(x, np.exp(-(((x - centre) / width) ** 2)))
        af_kf = apply_ladder(op, f.with_values(kin * derivative(f.values, dx)))
        kf_af = kin * derivative(apply_ladder(op, f).values, dx)
        comm = (af_kf.values - kf_af)[inner]
        fi = f.values[inner]
        worst = max(worst, float(np.max(np.abs(comm - value * fi))))
        num += float(np.dot(fi, comm))
        den += float(np.dot(fi, fi))
    return CommutatorCheck(value, num / den, worst)


def ladder_ratio(n: int, mu: float, kind: LadderKind = LadderKind.DESTROY) -> float:
    """Tabulated ladder factors: ``sqrt(P_n / P_{n-1})`` (Destroy), ``sqrt(P_{n+1} / P_n)`` (Create)."""
    kind = LadderKind(kind)
    if kind is LadderKind.DESTROY:
        if n < 1:
            raise ValueError("destroy ratio needs n >= 1")
        return math.sqrt(pn_polynomial(n)(mu) / pn_polynomial(n - 1)(mu))
    if n < 0:
        raise ValueError("n must be >= 0")
    return math.sqrt(pn_polynomial(n + 1)(mu) / pn_polynomial(n)(mu))


def destroy_ratio_derived(n: int, mu: float) -> float:
    """Factor in ``a_f psi_n = r psi_{n-1}`` from the Hermite identity ``H_n' = 2n H_{n-1}``.

    Equals ``n sqrt(P_{n-1} / P_n)``, which coincides with ``sqrt(n)`` only at ``mu = 0``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return n * math.sqrt(pn_polynomial(n - 1)(mu) / pn_polynomial(n)(mu))


def _state(params, n, x):
    return WaveSample(x, osc_state(params, n, _PAPER)(x), f"psi_{n}")


def measured_ratio(params: PhysicalParams, n: int, kind: LadderKind, x=None) -> float:
    """Least-squares ``r`` in ``a psi_n = r psi_{n -+ 1}`` from sampled states."""
    kind = LadderKind(kind)
    x = ladder_grid(params) if x is None else np.asarray(x, dtype=float)
    target = n - 1 if kind is LadderKind.DESTROY else n + 1
    if target < 0:
        raise ValueError("destroy needs n >= 1")
    out = apply_ladder(LadderOperator(kind, params), _state(params, n, x))
    ref = _state(params, target, x)
    return float(trapezoid(out.values * ref.values, out.dx) / trapezoid(ref.values**2, ref.dx))


class BuildStateWarning(UserWarning):
    pass


def build_state(n: int, params: PhysicalParams, x=None, tol: float = 1e-5) -> WaveSample:
    """``(a_f^+)^n psi_0 / sqrt(P_n(mu))`` on a grid.

    Warns with :class:`BuildStateWarning` when the sup-norm distance to the
    closed-form ``psi_n`` exceeds ``tol``.  Each derivative amplifies rounding
    noise by roughly ``1/dy``, so the default grid coarsens with ``n``.
    """
    if not 0 <= n <= 12:
        raise ValueError("build_state supports 0 <= n <= 12")
    if x is None:
        x = ladder_grid(params, dy=min(0.005 * max(n, 1), 0.03))
    x = np.asarray(x, dtype=float)
    mu = derive_scales(params, _PAPER).mu
    psi = _state(params, 0, x)
    op = LadderOperator.create(params)
    for _ in range(n):
        psi = apply_ladder(op, psi)
    psi = psi.with_values(psi.values / math.sqrt(pn_polynomial(n)(mu)), f"built_{n}")
    err = float(np.max(np.abs(psi.values - _state(params, n, x).values)))
    if err > tol:
        warnings.warn(f"built state {n} deviates by {err:.3g}", BuildStateWarning, stacklevel=2)
    return psi


def apply_hamiltonian(params: PhysicalParams, psi: WaveSample) -> WaveSample:
    """Damped oscillator Hamiltonian ``hbar w (-u''/2 - (g/2) u' + y^2 u / 2)`` with ``y = b x``."""
    s = derive_scales(params, _PAPER)
    dy = psi.dx * s.b
    y = psi.x * s.b
    f = psi.values
    hf = -0.5 * second_derivative(f, dy) - 0.5 * s.g * derivative(f, dy) + 0.5 * y * y * f
    return psi.with_values(params.hbar * params.omega * hf, f"H({psi.label})")


def ladder_shift_residual(params: PhysicalParams, n: int, kind: LadderKind, x=None) -> float:
    """``|H (a psi_n) - (eps_n -+ 1) hbar w (a psi_n)| / |(eps_n -+ 1) hbar w (a psi_n)|``."""
    kind = LadderKind(kind)
    if kind is LadderKind.DESTROY and n < 1:
        raise ValueError("a_f annihilates psi_0")
    x = ladder_grid(params) if x is None else np.asarray(x, dtype=float)
    s = derive_scales(params, _PAPER)
    eps = n + 0.5 + s.g * s.g / 8.0
    eps += -1.0 if kind is LadderKind.DESTROY else 1.0
    phi = apply_ladder(LadderOperator(kind, params), _state(params, n, x))
    target = eps * params.hbar * params.omega * phi.values
    return float(np.linalg.norm(apply_hamiltonian(params, phi).values - target) / np.linalg.norm(target))


@dataclass(frozen=True)
class AdjointAudit:
    defect: float
    expected: float
    spread: float


def adjointness_audit(params: PhysicalParams, points: int = 201, edge: int = 3) -> AdjointAudit:
    """Compare ``A^T`` for the Destroy matrix with the Create matrix on a small grid.

    Rows near the ends use one-sided stencils and are excluded.  ``defect`` is
    the mean diagonal of the interior difference, ``spread`` the largest
    deviation of that block from ``defect * I``.
    """
    x = np.linspace(-6.0, 6.0, points)
    dx = x[1] - x[0]
    p = params
    pos = math.sqrt(p.m * p.omega / (2.0 * p.hbar)) * np.diag(x)
    mom = math.sqrt(p.hbar / (2.0 * p.m * p.omega)) * derivative_matrix(points, dx)
    eye = np.eye(points)
    a = pos + LadderOperator.destroy(p).constant * eye + mom
    ad = pos + LadderOperator.create(p).constant * eye - mom
    diff = (a.T - ad)[edge:-edge, edge:-edge]
    defect = float(np.mean(np.diag(diff)))
    spread = float(np.max(np.abs(diff - defect * np.eye(len(diff)))))
    return AdjointAudit(defect, 2.0 * LadderOperator.destroy(p).constant, spread)


@dataclass(frozen=True)
class ExpectationReport:
    quantity: str
    paper_formula_value: complex
    quadrature_value: complex

    @property
    def deviation(self) -> float:
        return abs(self.paper_formula_value - self.quadrature_value)


def _gauss_expectation(params: PhysicalParams, n: int) -> float:
    """``int psi_n psi_n' dx``, exact by Gauss-Hermite nodes around ``y = -mu``."""
    s = derive_scales(params, _PAPER)
    st = osc_state(params, n, _PAPER)
    t, w = np.polynomial.hermite.hermgauss(n + 8)
    y = t - s.mu
    H = hermite_table(n, y)
    dH = 2.0 * n * H[n - 1] if n > 0 else 0.0
    # psi psi' dx = A^2 b H (H' - (y + mu) H) exp(-(y + mu)^2) dy / b
    return float(st.A_n**2 * np.dot(w, H[n] * (dH - (y + s.mu) * H[n])))


def fractionary_energy_paper(n: int, params: PhysicalParams) -> ExpectationReport:
    """Tabulated fractional kinetic energy against ``int psi_n (-hbar m c / 2B) psi_n' dx``.

    The tabulated value is ``hbar w (n - P_n/P_{n-1}) + m^2 mc^2 / (4 B^2)``
    with the ratio term dropped at ``n = 0``.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    p = params
    mu = derive_scales(p, _PAPER).mu
    ratio = pn_polynomial(n)(mu) / pn_polynomial(n - 1)(mu) if n > 0 else 0.0
    paper = p.hbar * p.omega * (n - ratio) + p.m**2 / (4.0 * p.B**2) * p.rest_energy
    quad = -p.hbar * p.m * p.c / (2.0 * p.B) * _gauss_expectation(p, n)
    return ExpectationReport(f"fractionary_energy_{n}", complex(paper), complex(quad))


def momentum_expectation_paper(params: PhysicalParams, n: int) -> ExpectationReport:
    """Tabulated ``sqrt(2 hbar m w eps_r) / (2 i sqrt 2)`` against ``int psi_n (-i hbar) psi_n' dx``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    p = params
    eps_r = derive_scales(p, _PAPER).eps_r
    paper = math.sqrt(2.0 * p.hbar * p.m * p.omega * eps_r) / (2j * math.sqrt(2.0))
    quad = -1j * p.hbar * _gauss_expectation(p, n)
    return ExpectationReport(f"momentum_{n}", complex(paper), complex(quad))

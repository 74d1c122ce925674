"""Damped harmonic oscillator in the dimensionless coordinate ``y = b x``.

The equation ``psi'' + g psi' + (2 eps - y^2) psi = 0`` is solved by
``psi = H_n(y) exp(-(y + mu)^2 / 2)`` with ``mu = g/2`` and
``eps_n = n + 1/2 + g^2/8``.  Normalisation involves the even polynomial
``P_n(mu) = sum_k G_{n,2k} mu^{2k}``, kept in exact integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .grid import WaveSample, derivative, second_derivative
from .params import Convention, PhysicalParams, derive_scales

__all__ = [
    "OscEigenfunction",
    "OscLevel",
    "OscillatorSpectrum",
    "PnPolynomial",
    "hermite",
    "hermite_table",
    "osc_eigenfunction",
    "osc_normalization",
    "osc_residual",
    "osc_state",
    "oscillator_energy",
    "pn_oracle",
    "pn_polynomial",
    "quantize_oscillator",
    "series_coefficients",
    "series_ratio",
]


def hermite_table(n_max: int, y) -> np.ndarray:
    """Physicists' ``H_0 .. H_n_max`` at ``y`` via ``H_{n+1} = 2y H_n - 2n H_{n-1}``."""
    y = np.asarray(y, dtype=float)
    out = np.empty((n_max + 1,) + y.shape)
    out[0] = 1.0
    if n_max >= 1:
        out[1] = 2.0 * y
    for n in range(1, n_max):
        out[n + 1] = 2.0 * y * out[n] - 2.0 * n * out[n - 1]
    return out


def hermite(n: int, y) -> np.ndarray:
    return hermite_table(n, y)[n]


def series_ratio(n, eps, g):
    """``C_{n+2} / C_n = (2n + 1 + g^2/4 - 2 eps) / ((n+1)(n+2))``.

    Works on floats, ``Fraction`` or symbolic inputs alike.
    """
    return ((2 * n + 1) + g * g / 4 - 2 * eps) / ((n + 1) * (n + 2))


def series_coefficients(parity: int, eps, g, terms: int) -> list:
    """Power-series coefficients ``C_0 .. C_{terms-1}`` of the polynomial factor.

    ``parity`` 0 starts from ``C_0 = 1, C_1 = 0``; parity 1 from ``C_0 = 0, C_1 = 1``.
    """
    coeffs = [0] * terms
    coeffs[parity] = 1
    for n in range(parity, terms - 2, 2):
        coeffs[n + 2] = coeffs[n] * series_ratio(n, eps, g)
    return coeffs


def oscillator_energy(n, hbar, omega, g):
    """``hbar omega (n + 1/2 + g^2/8)``; symbolic inputs stay exact."""
    return hbar * omega * (Fraction(2 * n + 1, 2) + g * g / 8)


@dataclass(frozen=True)
class OscLevel:
    n: int
    eps: float
    E: float


@dataclass(frozen=True)
class OscillatorSpectrum:
    levels: tuple[OscLevel, ...]
    convention: Convention

    @property
    def eps(self) -> np.ndarray:
        return np.array([lv.eps for lv in self.levels])

    @property
    def energies(self) -> np.ndarray:
        return np.array([lv.E for lv in self.levels])


def quantize_oscillator(
    params: PhysicalParams, convention: Convention = Convention.PAPER_OSCILLATOR, n_max: int = 5
) -> OscillatorSpectrum:
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    convention = Convention.parse(convention)
    g = derive_scales(params, convention).g
    levels = []
    for n in range(n_max + 1):
        eps = (n + 0.5) + g * g / 8
        levels.append(OscLevel(n, eps, params.hbar * params.omega * eps))
    return OscillatorSpectrum(tuple(levels), convention)


@dataclass(frozen=True)
class PnPolynomial:
    """``P_n(mu) = sum_k coeffs[k] * mu^(2k)`` with exact integer coefficients."""

    n: int
    coeffs: tuple[int, ...]

    def __call__(self, mu):
        mu2 = mu * mu
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * mu2 + c
        return acc

    def exact(self, mu: Fraction | int) -> Fraction:
        return self(Fraction(mu))


@lru_cache(maxsize=None)
def _pn_coeffs(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _pn_coeffs(n - 1)
    coeffs = [math.factorial(n)]
    for k in range(1, n):
        num = n * n * prev[k]
        q, r = divmod(num, n - k)
        if r:
            raise ArithmeticError(f"non-integer coefficient at n={n}, k={k}")
        coeffs.append(q)
    coeffs.append(2**n)
    return tuple(coeffs)


def pn_polynomial(n: int) -> PnPolynomial:
    """Coefficients from the previous degree: ``G_{n,2k} = n^2 G_{n-1,2k} / (n-k)``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return PnPolynomial(n, _pn_coeffs(n))


def pn_oracle(n: int, mu: float) -> float:
    """``(2^n sqrt(pi))^-1 int H_n(t - mu)^2 exp(-t^2) dt`` by Gauss-Hermite quadrature.

    Uses numpy's Hermite series, not :func:`hermite_table`, so it shares no
    code with the recursion it checks.  Exact for ``n + 5`` nodes.
    """
    if not 0 <= n <= 30:
        raise ValueError("oracle supports 0 <= n <= 30")
    t, w = np.polynomial.hermite.hermgauss(n + 5)
    basis = np.zeros(n + 1)
    basis[n] = 1.0
    h = np.polynomial.hermite.hermval(t - mu, basis)
    return float(np.dot(w, h * h) / (2.0**n * math.sqrt(math.pi)))


def osc_normalization(params: PhysicalParams, n: int, mu: float) -> float:
    """``(m omega / (hbar pi 2^{2n}))^{1/4} / sqrt(P_n(mu))``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    pref = (params.m * params.omega / (params.hbar * math.pi * 4.0**n)) ** 0.25
    return pref / math.sqrt(pn_polynomial(n)(float(mu)))


@dataclass(frozen=True)
class OscEigenfunction:
    """``A_n H_n(b x) exp(-(b x + mu)^2 / 2)``, unit norm in ``x``."""

    n: int
    mu: float
    A_n: float
    b: float
    params: PhysicalParams

    def __call__(self, x):
        y = self.b * np.asarray(x, dtype=float)
        return self.A_n * hermite(self.n, y) * np.exp(-0.5 * (y + self.mu) ** 2)

    def derivative(self, x):
        y = self.b * np.asarray(x, dtype=float)
        H = hermite_table(self.n, y)
        dH = 2.0 * self.n * H[self.n - 1] if self.n > 0 else 0.0
        return self.A_n * self.b * (dH - (y + self.mu) * H[self.n]) * np.exp(-0.5 * (y + self.mu) ** 2)

    def in_y(self, y):
        """Same state normalised in ``y`` rather than ``x``."""
        return self(np.asarray(y, dtype=float) / self.b) / math.sqrt(self.b)


def osc_state(
    params: PhysicalParams,
    n: int,
    convention: Convention = Convention.PAPER_OSCILLATOR,
    mu: float | None = None,
) -> OscEigenfunction:
    scales = derive_scales(params, convention)
    mu = scales.mu if mu is None else mu
    return OscEigenfunction(n, mu, osc_normalization(params, n, mu), scales.b, params)


def osc_eigenfunction(
    params: PhysicalParams,
    n: int,
    grid,
    convention: Convention = Convention.PAPER_OSCILLATOR,
    mu: float | None = None,
) -> WaveSample:
    """Sample the normalised eigenfunction on a grid in ``x``.

    ``mu`` defaults to ``g/2`` of the chosen convention.
    """
    x = np.asarray(grid, dtype=float)
    if not np.all(np.isfinite(x)):
        raise ValueError("grid must be finite")
    return WaveSample(x, osc_state(params, n, convention, mu)(x), f"osc_{n}")


def osc_residual(
    params: PhysicalParams,
    n: int,
    convention: Convention = Convention.PAPER_OSCILLATOR,
    dy: float = 1e-3,
    half_width: float = 10.0,
) -> float:
    """Largest 4th-order finite-difference residual of the dimensionless equation for level ``n``."""
    scales = derive_scales(params, convention)
    state = osc_state(params, n, convention)
    y = np.arange(-scales.mu - half_width, -scales.mu + half_width + dy / 2, dy)
    f = state.in_y(y)
    eps = (n + 0.5) + scales.g * scales.g / 8
    res = second_derivative(f, dy) + scales.g * derivative(f, dy) + (2.0 * eps - y**2) * f
    return float(np.max(np.abs(res)))

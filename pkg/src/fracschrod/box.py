"""Damped infinite well on ``[-L/2, L/2]``.

Level ``n`` carries energy ``m^3 c^2 / (2 B^2) + hbar^2 pi^2 n^2 / (2 m L^2)``
and the tabulated wave number ``k_n = 2 pi n / L``; eigenfunctions are
``A_n exp(-xi x) sin(k_n x)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .grid import WaveSample
from .params import PhysicalParams

__all__ = [
    "BoxEigenfunction",
    "BoxLevel",
    "BoxSpectrum",
    "box_eigenfunction",
    "box_state",
    "MomentumExpectation",
    "box_energy",
    "box_momentum_expectation",
    "box_normalization",
    "box_zero_point",
    "quantize_box",
    "quantization_residual",
]

# csch(xi L) below this is indistinguishable from zero in the normalisation
_CSCH_FLOOR = 1e-300


def box_zero_point(m, c, B):
    """``m^3 c^2 / (2 B^2)``; plain arithmetic, so symbolic inputs stay exact."""
    return m**3 * c**2 / (2 * B**2)


def box_energy(n, m, c, hbar, B, L, pi=math.pi):
    """Closed-form level energy; pass ``pi=sympy.pi`` for exact evaluation."""
    return box_zero_point(m, c, B) + hbar**2 * pi**2 * n**2 / (2 * m * L**2)


@dataclass(frozen=True)
class BoxLevel:
    n: int
    k: float
    E: float


@dataclass(frozen=True)
class BoxSpectrum:
    levels: tuple[BoxLevel, ...]

    @property
    def energies(self) -> np.ndarray:
        return np.array([lv.E for lv in self.levels])

    @property
    def wave_numbers(self) -> np.ndarray:
        return np.array([lv.k for lv in self.levels])


def quantize_box(params: PhysicalParams, levels: int = 5) -> BoxSpectrum:
    """Closed-form levels ``n = 1 .. levels``."""
    if levels < 1:
        raise ValueError("levels must be positive")
    p = params
    return BoxSpectrum(
        tuple(
            BoxLevel(n, 2.0 * math.pi * n / p.L, box_energy(n, p.m, p.c, p.hbar, p.B, p.L))
            for n in range(1, levels + 1)
        )
    )


def quantization_residual(params: PhysicalParams, E: float) -> float:
    """``|sin(sqrt|Delta| L / 2)|`` with ``Delta = 4 xi^2 - 8 m E / hbar^2``."""
    delta = 4.0 * params.xi**2 - 8.0 * params.m * E / params.hbar**2
    return abs(math.sin(math.sqrt(abs(delta)) * params.L / 2.0))


def box_normalization(params: PhysicalParams, n: int) -> float:
    """``A_n = sqrt(2 xi [(xi L / 2 pi n)^2 + 1] csch(xi L))``; ``sqrt(2/L)`` when undamped."""
    if n < 1:
        raise ValueError("n must be >= 1")
    xi, L = params.xi, params.L
    z = xi * L
    if z == 0.0:
        return math.sqrt(2.0 / L)
    if z < 1e-6:
        # 2 xi csch(xi L) = (2/L) (1 - z^2/6 + ...)
        return math.sqrt((2.0 / L) * (1.0 - z * z / 6.0) * ((z / (2 * math.pi * n)) ** 2 + 1.0))
    ez = math.exp(-z)
    csch = 2.0 * ez / (1.0 - ez * ez)
    if csch < _CSCH_FLOOR:
        raise OverflowError(f"csch(xi L) underflows for xi L = {z:g}")
    return math.sqrt(2.0 * xi * ((z / (2.0 * math.pi * n)) ** 2 + 1.0) * csch)


@dataclass(frozen=True)
class BoxEigenfunction:
    n: int
    A_n: float
    xi: float
    k_n: float
    L: float

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        return self.A_n * np.exp(-self.xi * x) * np.sin(self.k_n * x)

    def derivative(self, x):
        x = np.asarray(x, dtype=float)
        env = self.A_n * np.exp(-self.xi * x)
        return env * (self.k_n * np.cos(self.k_n * x) - self.xi * np.sin(self.k_n * x))


def box_state(params: PhysicalParams, n: int) -> BoxEigenfunction:
    """Callable closed-form eigenfunction (pointwise evaluation)."""
    return BoxEigenfunction(n, box_normalization(params, n), params.xi, 2.0 * math.pi * n / params.L, params.L)


def box_eigenfunction(params: PhysicalParams, n: int, grid) -> WaveSample:
    """Sample ``A_n exp(-xi x) sin(k_n x)``; the grid must lie inside the well."""
    x = np.asarray(grid, dtype=float)
    half = params.L / 2.0
    if x.min() < -half * (1 + 1e-12) or x.max() > half * (1 + 1e-12):
        raise ValueError("grid must lie within [-L/2, L/2]")
    psi = box_state(params, n)(x)
    # the walls are exact zeros, not sin(2 pi n * 0.5) rounding noise
    psi[np.isclose(np.abs(x), half, rtol=0, atol=1e-14 * max(half, 1.0))] = 0.0
    return WaveSample(x, psi, f"box_{n}")


@dataclass(frozen=True)
class MomentumExpectation:
    quadrature: complex
    boundary_term: complex


def box_momentum_expectation(params: PhysicalParams, n: int, nodes: int = 256) -> MomentumExpectation:
    """``int psi_n (-i hbar) psi_n' dx`` by Gauss-Legendre quadrature, and its exact value.

    For real ``psi_n`` the integrand is ``(hbar/2i) d(psi^2)/dx``, so the exact
    value is the boundary term ``-(i hbar / 2) [psi_n^2]``, zero at the walls.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    ef = box_state(params, n)
    t, w = np.polynomial.legendre.leggauss(nodes)
    half = params.L / 2.0
    x = half * t
    quad = complex(-1j * params.hbar * half * np.dot(w, ef(x) * ef.derivative(x)))
    walls = box_eigenfunction(params, n, np.array([-half, half])).values
    boundary = complex(-0.5j * params.hbar * (walls[1] ** 2 - walls[0] ** 2))
    return MomentumExpectation(quad, boundary)

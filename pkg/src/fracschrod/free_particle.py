"""Free particle: characteristic roots, damped plane waves, packet translation."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .grid import WaveSample
from .params import PhysicalParams

__all__ = [
    "CharacteristicRoots",
    "DampedPlaneWave",
    "PacketTranslation",
    "Regime",
    "characteristic_roots",
    "damped_packet",
    "eq13_residual",
    "fit_packet_translation",
    "packet_translation",
    "sample_damped_wave",
    "translated_packet",
]


class Regime(enum.Enum):
    UNDERDAMPED = "UnderDamped"
    CRITICAL = "Critical"
    OVERDAMPED = "OverDamped"


@dataclass(frozen=True)
class CharacteristicRoots:
    lambda1: complex
    lambda2: complex
    discriminant: float
    regime: Regime


def _energy_term(params: PhysicalParams, E: float) -> float:
    return 2.0 * params.m * E / params.hbar**2


def characteristic_roots(params: PhysicalParams, E: float) -> CharacteristicRoots:
    """Roots of ``lambda^2 + 2 xi lambda + 2mE/hbar^2 = 0``.

    Complex pairs come positive-imaginary first; real pairs come larger first.
    """
    xi = params.xi
    q = _energy_term(params, E)
    disc = 4.0 * xi**2 - 4.0 * q
    if disc < 0:
        k = math.sqrt(-disc) / 2.0
        return CharacteristicRoots(complex(-xi, k), complex(-xi, -k), disc, Regime.UNDERDAMPED)
    if disc == 0:
        return CharacteristicRoots(complex(-xi), complex(-xi), disc, Regime.CRITICAL)
    half = math.sqrt(disc) / 2.0
    # avoid cancellation: take the larger-magnitude root, get the other from the product
    big = -xi - half if xi >= 0 else -xi + half
    small = q / big if big != 0 else 0.0
    hi, lo = max(big, small), min(big, small)
    return CharacteristicRoots(complex(hi), complex(lo), disc, Regime.OVERDAMPED)


@dataclass(frozen=True)
class DampedPlaneWave:
    """``psi(x) = exp(-xi x) (A exp(ikx) + B exp(-ikx))``."""

    xi: float
    k: float
    ampA: complex = 1.0
    ampB: complex = 0.0

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be non-negative")

    @classmethod
    def from_energy(cls, params: PhysicalParams, E: float, ampA=1.0, ampB=0.0):
        roots = characteristic_roots(params, E)
        return cls(params.xi, math.sqrt(abs(roots.discriminant)) / 2.0, ampA, ampB)

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        return np.exp(-self.xi * x) * (
            self.ampA * np.exp(1j * self.k * x) + self.ampB * np.exp(-1j * self.k * x)
        )


def sample_damped_wave(wave: DampedPlaneWave, grid) -> WaveSample:
    x = np.asarray(grid, dtype=float)
    if not np.all(np.isfinite(x)):
        raise ValueError("grid must be finite")
    return WaveSample(x, wave(x), "damped_plane_wave")


def eq13_residual(sample: WaveSample, xi: float, energy_term: float) -> float:
    """Largest ``|psi'' + 2 xi psi' + (2mE/hbar^2) psi|`` from central differences."""
    f, h = sample.values, sample.dx
    d2 = (f[2:] - 2.0 * f[1:-1] + f[:-2]) / h**2
    d1 = (f[2:] - f[:-2]) / (2.0 * h)
    return float(np.max(np.abs(d2 + 2.0 * xi * d1 + energy_term * f[1:-1])))


@dataclass(frozen=True)
class PacketTranslation:
    """``exp(-xi x) u(x - ct) = amplitude * u(x - ct + shift)`` for a unit Gaussian ``u``."""

    shift: float
    amplitude: float

    def __post_init__(self):
        if not self.amplitude > 0:
            raise ValueError("amplitude must be positive")


def packet_translation(xi: float, c: float, t: float, k0: float = 0.0) -> PacketTranslation:
    """Complete the square in ``-xi x - (x - ct)^2``.

    The carrier ``k0`` rides along unchanged; it is accepted for symmetry with
    the packet samplers.
    """
    return PacketTranslation(shift=xi / 2.0, amplitude=math.exp(-xi * c * t + xi**2 / 4.0))


def damped_packet(x, xi: float, c: float, t: float, k0: float) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    u = x - c * t
    return np.exp(-xi * x) * np.exp(-(u**2) + 1j * k0 * u)


def translated_packet(x, pt: PacketTranslation, c: float, t: float, k0: float) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    u = x - c * t
    return pt.amplitude * np.exp(-((u + pt.shift) ** 2) + 1j * k0 * u)


def fit_packet_translation(x, psi, c: float, t: float, k0: float) -> PacketTranslation:
    """Recover shift and amplitude from samples by a quadratic fit of ``log|psi|``.

    Independent of :func:`packet_translation`: only the sampled values are used.
    """
    x = np.asarray(x, dtype=float)
    psi = np.asarray(psi) * np.exp(-1j * k0 * (x - c * t))
    mag = np.abs(psi)
    keep = mag > 1e-200
    coef = np.polyfit(x[keep] - c * t, np.log(mag[keep]), 2)
    a, b, const = coef
    # -(u + s)^2 + log A = -u^2 - 2su - s^2 + log A
    if abs(a + 1.0) > 1e-6:
        raise ValueError("samples are not a unit-width Gaussian")
    shift = b / (2.0 * a)
    return PacketTranslation(shift=float(shift), amplitude=math.exp(const + shift**2))

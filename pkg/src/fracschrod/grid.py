"""Uniform grids, sampled wavefunctions and fourth-order difference stencils."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "GridSpec",
    "WaveSample",
    "derivative",
    "second_derivative",
    "derivative_matrix",
    "trapezoid",
]


@dataclass(frozen=True)
class GridSpec:
    """``n_points`` equally spaced points on ``[x_min, x_max]``, ends included."""

    x_min: float
    x_max: float
    n_points: int

    def __post_init__(self):
        if int(self.n_points) != self.n_points or self.n_points < 16:
            raise ValueError("n_points must be an integer >= 16")
        if not self.x_max > self.x_min:
            raise ValueError("x_max must exceed x_min")

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / (self.n_points - 1)

    def points(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, int(self.n_points))

    def refined(self) -> GridSpec:
        """Same interval with the spacing halved."""
        return GridSpec(self.x_min, self.x_max, 2 * int(self.n_points) - 1)


@dataclass(frozen=True)
class WaveSample:
    """A (possibly complex) function sampled on a uniform grid."""

    x: np.ndarray
    values: np.ndarray
    label: str = field(default="", compare=False)

    def __post_init__(self):
        x = np.asarray(self.x, dtype=float)
        v = np.asarray(self.values)
        if x.ndim != 1 or v.shape != x.shape:
            raise ValueError("x and values must be 1-D arrays of equal length")
        if len(x) < 2:
            raise ValueError("need at least two samples")
        steps = np.diff(x)
        if not np.all(steps > 0) or np.ptp(steps) > 1e-9 * abs(steps[0]) * len(x):
            raise ValueError("grid must be uniform and increasing")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "values", v)

    @property
    def dx(self) -> float:
        return float((self.x[-1] - self.x[0]) / (len(self.x) - 1))

    def __len__(self):
        return len(self.x)

    def density(self) -> np.ndarray:
        return np.abs(self.values) ** 2

    def norm(self) -> float:
        return float(np.sqrt(trapezoid(self.density(), self.dx)))

    def normalized(self) -> WaveSample:
        return WaveSample(self.x, self.values / self.norm(), self.label)

    def with_values(self, values, label=None) -> WaveSample:
        return WaveSample(self.x, values, self.label if label is None else label)

    def same_grid(self, other: WaveSample) -> bool:
        return len(self.x) == len(other.x) and np.array_equal(self.x, other.x)


def trapezoid(values, dx: float):
    """Composite trapezoid rule on a uniform grid."""
    v = np.asarray(values)
    return dx * (v.sum() - 0.5 * (v[0] + v[-1]))


# one-sided fourth-order stencils for the two outermost points
_D1_EDGE = np.array(
    [[-25.0, 48.0, -36.0, 16.0, -3.0, 0.0], [-3.0, -10.0, 18.0, -6.0, 1.0, 0.0]]
) / 12.0
_D2_EDGE = np.array(
    [[45.0, -154.0, 214.0, -156.0, 61.0, -10.0], [10.0, -15.0, -4.0, 14.0, -6.0, 1.0]]
) / 12.0


def derivative(values, dx: float) -> np.ndarray:
    """First derivative, fourth order everywhere (one-sided at the ends)."""
    f = np.asarray(values)
    if len(f) < 6:
        raise ValueError("fourth-order stencils need at least 6 samples")
    out = np.empty_like(f, dtype=np.result_type(f, float))
    out[2:-2] = (f[:-4] - 8.0 * f[1:-3] + 8.0 * f[3:-1] - f[4:]) / 12.0
    head, tail = f[:6], f[-6:][::-1]
    out[0], out[1] = _D1_EDGE @ head
    out[-1], out[-2] = -(_D1_EDGE @ tail)
    return out / dx


def second_derivative(values, dx: float) -> np.ndarray:
    """Second derivative, fourth order everywhere (one-sided at the ends)."""
    f = np.asarray(values)
    if len(f) < 6:
        raise ValueError("fourth-order stencils need at least 6 samples")
    out = np.empty_like(f, dtype=np.result_type(f, float))
    out[2:-2] = (-f[:-4] + 16.0 * f[1:-3] - 30.0 * f[2:-2] + 16.0 * f[3:-1] - f[4:]) / 12.0
    out[0], out[1] = _D2_EDGE @ f[:6]
    out[-1], out[-2] = _D2_EDGE @ f[-6:][::-1]
    return out / dx**2


def derivative_matrix(n: int, dx: float) -> np.ndarray:
    """Dense matrix form of :func:`derivative` (for small audits)."""
    eye = np.eye(n)
    return np.column_stack([derivative(eye[:, j], dx) for j in range(n)])

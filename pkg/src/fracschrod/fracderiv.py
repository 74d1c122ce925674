"""Grunwald-Letnikov fractional derivatives on uniform grids.

The lower terminal is always the first grid point.  For functions continuous
on ``[a, x]`` the GL sum converges to the Riemann-Liouville derivative as the
step shrinks.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import kernels

__all__ = [
    "SampledFunction",
    "check_order",
    "gl_weights",
    "gl_derivative",
    "gl_transform",
    "power_rule_oracle",
    "semigroup_residual",
    "read_sampled_csv",
    "write_derivative_csv",
    "derivative_table",
]


@dataclass(frozen=True)
class SampledFunction:
    """Samples ``values[i] = f(x0 + i*dx)``."""

    x0: float
    dx: float
    values: np.ndarray

    def __post_init__(self):
        if not self.dx > 0:
            raise ValueError("dx must be positive")
        v = np.asarray(self.values)
        if v.ndim != 1 or len(v) < 4:
            raise ValueError("need at least 4 samples")
        object.__setattr__(self, "values", v)

    @classmethod
    def from_callable(cls, func, a: float, b: float, dx: float) -> SampledFunction:
        n = int(round((b - a) / dx))
        x = a + dx * np.arange(n + 1)
        return cls(a, dx, np.asarray(func(x)))

    @property
    def x(self) -> np.ndarray:
        return self.x0 + self.dx * np.arange(len(self.values))

    def index_of(self, x: float) -> int:
        pos = (x - self.x0) / self.dx
        i = int(round(pos))
        if abs(pos - i) > 1e-6 or not 0 <= i < len(self.values):
            raise ValueError(f"x={x!r} is not a grid point")
        return i


def check_order(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"order must lie in (0, 1], got {alpha}")
    return alpha


def gl_weights(alpha: float, n: int) -> np.ndarray:
    """``w_k = (-1)^k binom(alpha, k)`` for ``k < n`` via the product recurrence."""
    k = np.arange(1, n)
    return np.concatenate(([1.0], np.cumprod((k - 1.0 - alpha) / k)))


def _apply(weights, values):
    if np.iscomplexobj(values):
        return kernels.toeplitz_lower_apply(weights, np.ascontiguousarray(values.real)) + 1j * (
            kernels.toeplitz_lower_apply(weights, np.ascontiguousarray(values.imag))
        )
    return kernels.toeplitz_lower_apply(weights, np.ascontiguousarray(values, dtype=float))


def gl_transform(f: SampledFunction, alpha: float) -> np.ndarray:
    """GL derivative of order ``alpha`` at every grid point.

    Entry 0 is the degenerate one-term sum ``f(a) / dx**alpha``.
    """
    alpha = check_order(alpha)
    w = gl_weights(alpha, len(f.values))
    return _apply(w, f.values) / f.dx**alpha


def gl_derivative(f: SampledFunction, alpha: float, x: float):
    """GL approximation of the order-``alpha`` derivative at grid point ``x > a``."""
    alpha = check_order(alpha)
    i = f.index_of(x)
    if i < 1:
        raise ValueError("evaluation point must lie strictly above the terminal")
    w = gl_weights(alpha, i + 1)
    window = f.values[i::-1]
    return np.dot(w, window) / f.dx**alpha


def power_rule_oracle(p: float, alpha: float, x: float) -> float:
    """RL derivative of ``(x-a)^p`` with ``a = 0``:
    ``Gamma(p+1) / Gamma(p+1-alpha) * x^(p-alpha)``, or 0 at a pole."""
    if p < 0 or x <= 0:
        raise ValueError("need p >= 0 and x > 0")
    z = p + 1.0 - alpha
    if z <= 0 and z == math.floor(z):
        return 0.0
    return math.gamma(p + 1.0) / math.gamma(z) * x ** (p - alpha)


def semigroup_residual(f: SampledFunction, x: float) -> float:
    """``|D^1/2 (D^1/2 f)(x) - f'(x)|`` with a central difference for ``f'``."""
    i = f.index_of(x)
    if i < 8:
        raise ValueError("need at least 8 grid points below x")
    if i + 1 >= len(f.values):
        raise ValueError("x must be interior to the grid")
    head = SampledFunction(f.x0, f.dx, f.values[: i + 1])
    inner = SampledFunction(f.x0, f.dx, gl_transform(head, 0.5))
    twice = gl_derivative(inner, 0.5, x)
    central = (f.values[i + 1] - f.values[i - 1]) / (2.0 * f.dx)
    return float(abs(twice - central))


def read_sampled_csv(path: str | Path) -> SampledFunction:
    """Read a two-column CSV (``x``, ``value``) on a uniform grid."""
    xs, vs = [], []
    with open(path, newline="", encoding="utf-8") as fh:
        rows = (r for r in csv.reader(fh) if r and not r[0].lstrip().startswith("#"))
        header = [h.strip() for h in next(rows)]
        if header[:2] != ["x", "value"]:
            raise ValueError("expected header 'x,value'")
        for row in rows:
            xs.append(float(row[0]))
            vs.append(complex(row[1].replace(" ", "")) if "j" in row[1] else float(row[1]))
    x = np.asarray(xs)
    if len(x) < 4:
        raise ValueError("need at least 4 samples")
    steps = np.diff(x)
    if np.ptp(steps) > 1e-9 * max(abs(steps[0]), 1e-300) * len(x):
        raise ValueError("x column must be uniformly spaced")
    return SampledFunction(float(x[0]), float(steps.mean()), np.asarray(vs))


def derivative_table(f: SampledFunction, alpha: float, oracle=None, header_lines=()) -> str:
    """CSV text with ``x, value, derivative[, oracle]`` rows.

    ``oracle`` is an optional callable of ``x`` giving reference values; it is
    left blank at the terminal, where the GL sum is degenerate.
    """
    deriv = gl_transform(f, alpha)
    cols = ["x", "value", "derivative"] + (["oracle"] if oracle is not None else [])
    buf = io.StringIO()
    for line in header_lines:
        buf.write(f"# {line}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(cols)
    for i, (x, v, d) in enumerate(zip(f.x, f.values, deriv)):
        row = [_fmt(x), _fmt(v), _fmt(d)]
        if oracle is not None:
            row.append(_fmt(oracle(x)) if i > 0 else "")
        writer.writerow(row)
    return buf.getvalue()


def write_derivative_csv(path, f: SampledFunction, alpha: float, oracle=None, header_lines=()):
    Path(path).write_text(derivative_table(f, alpha, oracle, header_lines), encoding="utf-8", newline="")


def _fmt(v) -> str:
    if isinstance(v, complex) or np.iscomplexobj(v):
        v = complex(v)
        return f"{v.real:.17g}{v.imag:+.17g}j"
    return f"{float(v):.17g}"

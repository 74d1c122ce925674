"""Minimal deterministic SVG line plots.

Coordinates are printed with fixed precision, so identical input yields
identical bytes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from xml.sax.saxutils import escape

import numpy as np

__all__ = ["Axes", "Curve", "emit_svg", "nice_ticks"]

_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


@dataclass(frozen=True)
class Curve:
    label: str
    x: np.ndarray
    y: np.ndarray
    step: bool = False

    def __post_init__(self):
        x = np.asarray(self.x, dtype=float)
        y = np.asarray(self.y, dtype=float)
        if x.shape != y.shape or x.ndim != 1 or len(x) == 0:
            raise ValueError("curve needs matching 1-D x and y")
        if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
            raise ValueError("curve values must be finite")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)


@dataclass(frozen=True)
class Axes:
    title: str = ""
    xlabel: str = "x"
    ylabel: str = "y"
    width: int = 640
    height: int = 400


def nice_ticks(lo: float, hi: float, target: int = 6) -> list[float]:
    """Round tick positions (1, 2 or 5 times a power of ten) covering ``[lo, hi]``."""
    if hi <= lo:
        return [lo]
    raw = (hi - lo) / max(target - 1, 1)
    mag = 10.0 ** math.floor(math.log10(raw))
    step = next(m * mag for m in (1.0, 2.0, 5.0, 10.0) if m * mag >= raw)
    start = math.ceil(lo / step - 1e-9)
    ticks = []
    k = start
    while k * step <= hi + 1e-9 * step:
        ticks.append(round(k * step, 12) + 0.0)
        k += 1
    return ticks


def _label(v: float) -> str:
    return f"{v:.6g}"


def emit_svg(curves, axes: Axes | None = None) -> str:
    """Render curves into a standalone SVG document."""
    curves = list(curves)
    if not curves:
        raise ValueError("nothing to plot")
    axes = axes or Axes()
    W, H = axes.width, axes.height
    left, right, top, bottom = 70.0, 20.0, 30.0 if axes.title else 15.0, 45.0
    xs = np.concatenate([c.x for c in curves])
    ys = np.concatenate([c.y for c in curves])
    x0, x1 = float(xs.min()), float(xs.max())
    y0, y1 = float(ys.min()), float(ys.max())
    if x1 == x0:
        x0, x1 = x0 - 0.5, x1 + 0.5
    if y1 == y0:
        y0, y1 = y0 - 0.5, y1 + 0.5
    pad = 0.05 * (y1 - y0)
    y0, y1 = y0 - pad, y1 + pad
    pw, ph = W - left - right, H - top - bottom

    def sx(v):
        return left + (v - x0) / (x1 - x0) * pw

    def sy(v):
        return top + (y1 - v) / (y1 - y0) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">',
        f'<rect x="0" y="0" width="{W}" height="{H}" fill="white"/>',
        f'<rect x="{left:.2f}" y="{top:.2f}" width="{pw:.2f}" height="{ph:.2f}" fill="none" stroke="black"/>',
    ]
    if axes.title:
        out.append(f'<text x="{W / 2:.2f}" y="18" text-anchor="middle" font-size="14">{escape(axes.title)}</text>')
    for t in nice_ticks(x0, x1):
        px = sx(t)
        out.append(f'<line x1="{px:.2f}" y1="{top + ph:.2f}" x2="{px:.2f}" y2="{top + ph + 5:.2f}" stroke="black"/>')
        out.append(f'<text x="{px:.2f}" y="{top + ph + 18:.2f}" text-anchor="middle" font-size="11">{_label(t)}</text>')
    for t in nice_ticks(y0, y1):
        py = sy(t)
        out.append(f'<line x1="{left - 5:.2f}" y1="{py:.2f}" x2="{left:.2f}" y2="{py:.2f}" stroke="black"/>')
        out.append(f'<text x="{left - 8:.2f}" y="{py + 4:.2f}" text-anchor="end" font-size="11">{_label(t)}</text>')
    out.append(f'<text x="{left + pw / 2:.2f}" y="{H - 8:.2f}" text-anchor="middle" font-size="12">{escape(axes.xlabel)}</text>')
    out.append(
        f'<text x="14" y="{top + ph / 2:.2f}" text-anchor="middle" font-size="12" '
        f'transform="rotate(-90 14 {top + ph / 2:.2f})">{escape(axes.ylabel)}</text>'
    )
    for i, c in enumerate(curves):
        color = _COLORS[i % len(_COLORS)]
        if c.step:
            px = np.repeat(c.x, 2)[1:]
            py = np.repeat(c.y, 2)[:-1]
        else:
            px, py = c.x, c.y
        pts = " ".join(f"{sx(a):.2f},{sy(b):.2f}" for a, b in zip(px, py))
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{pts}"/>')
        ly = top + 14.0 + 16.0 * i
        out.append(f'<line x1="{left + pw - 120:.2f}" y1="{ly:.2f}" x2="{left + pw - 100:.2f}" y2="{ly:.2f}" stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{left + pw - 95:.2f}" y="{ly + 4:.2f}" font-size="11">{escape(c.label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"

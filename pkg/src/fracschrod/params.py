"""Physical parameters and the scales derived from them.

Every other module takes a :class:`PhysicalParams` and, where a
dimensionless oscillator coordinate is involved, a :class:`Convention`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, fields, replace
from pathlib import Path

__all__ = [
    "Convention",
    "DerivedScales",
    "PhysicalParams",
    "Problem",
    "derive_scales",
    "parse_damping",
    "read_config_file",
    "special_damping_coefficient",
    "underdamped_condition",
]


class Convention(enum.Enum):
    """How the oscillator damping coefficient ``g`` is obtained.

    ``PAPER_OSCILLATOR`` uses ``g = (m/B) sqrt(eps_r)``, which puts the rest
    energy into the levels when ``B = m/sqrt8``.  ``EQ8_CONSISTENT`` substitutes
    ``y = b x`` directly into the damped wave equation, which gives
    ``g = 2 xi / b``: twice as large.
    """

    PAPER_OSCILLATOR = "paper"
    EQ8_CONSISTENT = "eq8"

    @classmethod
    def parse(cls, text: str | Convention) -> Convention:
        if isinstance(text, Convention):
            return text
        key = str(text).strip().lower().replace("_", "-")
        aliases = {
            "paper": cls.PAPER_OSCILLATOR,
            "paper-oscillator": cls.PAPER_OSCILLATOR,
            "paperoscillator": cls.PAPER_OSCILLATOR,
            "eq8": cls.EQ8_CONSISTENT,
            "eq8-consistent": cls.EQ8_CONSISTENT,
            "eq8consistent": cls.EQ8_CONSISTENT,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown convention {text!r}") from None


class Problem(enum.Enum):
    BOX = "box"
    OSCILLATOR = "oscillator"


@dataclass(frozen=True)
class PhysicalParams:
    """Mass ``m``, light speed ``c``, ``hbar``, damping coefficient ``B``
    (mass units), oscillator frequency ``omega`` and box length ``L``.

    ``B = inf`` is accepted and means no damping (``xi = 0``).
    """

    m: float = 1.0
    c: float = 1.0
    hbar: float = 1.0
    B: float = 1.0
    omega: float = 1.0
    L: float = 1.0

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise TypeError(f"{f.name} must be a real number, got {value!r}")
            if not value > 0 or math.isnan(value):
                raise ValueError(f"{f.name} must be strictly positive, got {value!r}")
            if math.isinf(value) and f.name != "B":
                raise ValueError(f"{f.name} must be finite")
            object.__setattr__(self, f.name, float(value))

    @classmethod
    def natural(cls, **overrides) -> PhysicalParams:
        """Natural units: ``m = c = hbar = 1``."""
        return cls(**{"m": 1.0, "c": 1.0, "hbar": 1.0, **overrides})

    def with_(self, **changes) -> PhysicalParams:
        return replace(self, **changes)

    @property
    def xi(self) -> float:
        """Inverse damping length ``m^2 c / (hbar B)``."""
        return self.m**2 * self.c / (self.hbar * self.B)

    @property
    def rest_energy(self) -> float:
        return self.m * self.c**2

    def as_dict(self) -> dict[str, float]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class DerivedScales:
    xi: float
    eps_r: float
    b: float
    g: float
    mu: float
    convention: Convention


def derive_scales(
    params: PhysicalParams, convention: Convention = Convention.PAPER_OSCILLATOR
) -> DerivedScales:
    """Compute ``xi``, ``eps_r``, ``b``, ``g`` and ``mu = g/2``.

    ``b = sqrt(m omega / hbar)`` so that ``y = b x`` is dimensionless.
    """
    if not isinstance(params, PhysicalParams):
        raise TypeError("params must be PhysicalParams")
    convention = Convention.parse(convention)
    xi = params.xi
    eps_r = params.m * params.c**2 / (params.hbar * params.omega)
    b = math.sqrt(params.m * params.omega / params.hbar)
    if convention is Convention.PAPER_OSCILLATOR:
        g = (params.m / params.B) * math.sqrt(eps_r)
    else:
        g = 2.0 * xi / b
    return DerivedScales(xi=xi, eps_r=eps_r, b=b, g=g, mu=g / 2.0, convention=convention)


def special_damping_coefficient(problem: Problem | str) -> float:
    """Multiple of ``m`` at which the zero-point energy equals ``m c^2``."""
    problem = Problem(problem) if not isinstance(problem, Problem) else problem
    if problem is Problem.BOX:
        return 1.0 / math.sqrt(2.0)
    return 1.0 / math.sqrt(8.0)


def underdamped_condition(params: PhysicalParams, E: float) -> bool:
    """True when ``xi^2 < 2 m E / hbar^2`` (negative discriminant)."""
    return params.xi**2 < 2.0 * params.m * E / params.hbar**2


def parse_damping(text: str | float, m: float) -> float:
    """Parse a damping coefficient.

    Accepts a number, ``inf``, or the rest-energy tokens ``m/sqrt2`` (box)
    and ``m/sqrt8`` (oscillator).
    """
    if isinstance(text, (int, float)):
        return float(text)
    token = text.strip().lower().replace(" ", "").replace("√", "sqrt")
    token = token.replace("sqrt(2)", "sqrt2").replace("sqrt(8)", "sqrt8")
    if token in ("m/sqrt2", "box-rest"):
        return m * special_damping_coefficient(Problem.BOX)
    if token in ("m/sqrt8", "osc-rest", "oscillator-rest"):
        return m * special_damping_coefficient(Problem.OSCILLATOR)
    return float(token)


def read_config_file(path: str | Path) -> dict[str, str]:
    """Read ``key = value`` lines; ``#`` starts a comment.

    Values are returned as stripped strings; interpretation is left to the
    caller so that command-line flags can be layered on top.
    """
    out: dict[str, str] = {}
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        if not key:
            raise ValueError(f"{path}:{lineno}: empty key")
        out[key] = value
    return out

"""The square grid filled with inscribed circles.

The carrier A sits at the origin. Vertical grid lines are x = k*d - ax and
horizontal ones y = m*d - ay; cell (k, m) is
[k*d - ax, (k+1)*d - ax] x [m*d - ay, (m+1)*d - ay] and holds a circle of
radius d/2 at its center. Increasing k moves in +x, increasing m in +y.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Mapping

from .inversive import ORIGIN, Circle, Inversion, Line, Point


class Orientation(str, enum.Enum):
    VERTICAL = "vertical"
    HORIZONTAL = "horizontal"


class SymmetryGroup(str, enum.Enum):
    D4 = "D4"
    D2 = "D2"
    D1 = "D1"
    C1 = "C1"


@dataclass(frozen=True)
class GridSpec:
    """Grid spacing `d`, carrier offset (`ax`, `ay`) and inversion radius `r`."""

    d: float = 1.0
    ax: float = 0.0
    ay: float = 0.0
    r: float = 1.0

    def __post_init__(self):
        for name in ("d", "ax", "ay", "r"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.d <= 0:
            raise ValueError(f"grid spacing d must be positive, got {self.d}")
        if self.r <= 0:
            raise ValueError(f"reference radius r must be positive, got {self.r}")
        for name in ("ax", "ay"):
            v = getattr(self, name)
            if not 0 <= v < self.d:
                raise ValueError(f"{name}={v} outside [0, d={self.d})")

    @property
    def inversion(self) -> Inversion:
        return Inversion(ORIGIN, self.r)

    @property
    def eps(self) -> float:
        """Scale-aware "passes through the carrier" cutoff."""
        return 1e-12 * self.d

    def to_config(self) -> dict[str, float]:
        return {"d": self.d, "ax": self.ax, "ay": self.ay, "r": self.r}

    @classmethod
    def from_config(cls, cfg: Mapping[str, object]) -> GridSpec:
        known = {k: float(cfg[k]) for k in ("d", "ax", "ay", "r") if k in cfg}
        return cls(**known)


def line_offset(spec: GridSpec, orientation: Orientation, index: int) -> float:
    """Signed distance of grid line `index` from the carrier."""
    a = spec.ax if Orientation(orientation) is Orientation.VERTICAL else spec.ay
    return index * spec.d - a


def grid_line(spec: GridSpec, orientation: Orientation, index: int) -> Line:
    c = line_offset(spec, orientation, index)
    if Orientation(orientation) is Orientation.VERTICAL:
        return Line.vertical(c)
    return Line.horizontal(c)


def cell_center(spec: GridSpec, k: int, m: int) -> Point:
    return Point((k + 0.5) * spec.d - spec.ax, (m + 0.5) * spec.d - spec.ay)


def cell_circle(spec: GridSpec, k: int, m: int) -> Circle:
    return Circle(cell_center(spec, k, m), spec.d / 2.0)


def _near(a: float, b: float, tol: float) -> bool:
    # distance on the unit circle R/Z
    t = abs(a - b) % 1.0
    return min(t, 1.0 - t) <= tol


def classify_offset(u: float, v: float, tol: float = 1e-9) -> SymmetryGroup:
    """Symmetry group for a carrier at fractional cell position (u, v).

    u and v are in cell units and taken modulo 1. D4 at a vertex or cell
    center, D2 at the midpoint of a side, D1 elsewhere on a side line or a
    diagonal line of the lattice, C1 otherwise.
    """
    if (_near(u, 0, tol) and _near(v, 0, tol)) or (_near(u, 0.5, tol) and _near(v, 0.5, tol)):
        return SymmetryGroup.D4
    if (_near(u, 0.5, tol) and _near(v, 0, tol)) or (_near(u, 0, tol) and _near(v, 0.5, tol)):
        return SymmetryGroup.D2
    on_side = _near(u, 0, tol) or _near(v, 0, tol)
    on_diagonal = _near(u - v, 0, tol) or _near(u + v, 0, tol)
    if on_side or on_diagonal:
        return SymmetryGroup.D1
    return SymmetryGroup.C1


def classify_symmetry(spec: GridSpec, tol: float | None = None) -> SymmetryGroup:
    """Symmetry group of the fabric built from `spec`.

    `tol` is in grid-length units and defaults to 1e-9 * d.
    """
    if tol is None:
        tol = 1e-9 * spec.d
    return classify_offset(spec.ax / spec.d, spec.ay / spec.d, tol / spec.d)

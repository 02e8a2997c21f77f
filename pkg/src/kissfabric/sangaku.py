"""Two temple-tablet chain problems, checked with the chain law.

Problem 1 (Gumma, 1814): in a chain with two congruent touching circles,
7/r4 = 2/r7 + 5/r1. Problem 2 (Menuma, 1828): bounding circles of radii 3r
and 2r, largest chain circle of radius r; then r7 = r/7.

Indices follow the tablets: the largest chain circle is number 1.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

from .fabric import Chain, FrameCircle, chain_closed_form, make_chain
from .grid import GridSpec, Orientation, cell_circle, grid_line
from .inversive import invert_gcircle

CSV_FIELDS = ["problem", "lhs", "rhs", "residual", "pass", "quantities", "diagnostic"]


@dataclass(frozen=True)
class SangakuReport:
    problem: str
    quantities: dict[str, float]
    lhs: float
    rhs: float
    residual: float = field(init=False)
    passed: bool = field(init=False)
    diagnostic: str = ""

    def __post_init__(self):
        residual = self.lhs - self.rhs
        ok = abs(residual) <= 1e-9 * max(1.0, abs(self.lhs), abs(self.rhs))
        object.__setattr__(self, "residual", residual)
        object.__setattr__(self, "passed", ok and not self.diagnostic)

    def to_text(self) -> str:
        out = [f"problem {self.problem}"]
        out += [f"  {k} = {v:.12g}" for k, v in self.quantities.items()]
        out.append(f"  lhs = {self.lhs:.12g}")
        out.append(f"  rhs = {self.rhs:.12g}")
        out.append(f"  residual = {self.residual:.3e}")
        if self.diagnostic:
            out.append(f"  note: {self.diagnostic}")
        out.append(f"  {'pass' if self.passed else 'FAIL'}")
        return "\n".join(out)

    def to_csv_row(self, header: bool = False) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if header:
            w.writerow(CSV_FIELDS)
        w.writerow([
            self.problem,
            f"{self.lhs:.12g}",
            f"{self.rhs:.12g}",
            f"{self.residual:.12g}",
            "true" if self.passed else "false",
            ";".join(f"{k}={v:.12g}" for k, v in self.quantities.items()),
            self.diagnostic,
        ])
        return buf.getvalue()


def verify_gumma(kappa0: float, delta: float, kappa1: float | None = None) -> SangakuReport:
    """Compare 7*k4 with 2*k7 + 5*k1 on the chain anchored at (kappa0, kappa1).

    The identity needs a pair of congruent neighbours (kappa1 == kappa0); any
    other anchor yields a failing report whose residual is 9*D.
    """
    if delta < 0:
        raise ValueError("delta must be non-negative")
    if kappa1 is None:
        kappa1 = kappa0
    D = kappa1 - kappa0
    k = {n: chain_closed_form(kappa0, kappa1, delta, n) for n in (1, 4, 7)}
    diagnostic = ""
    if D != 0:
        diagnostic = f"D = {D:.12g} != 0: the identity needs two congruent touching circles"
    return SangakuReport(
        problem="gumma",
        quantities={"kappa0": kappa0, "D": D, "delta": delta, "kappa1": k[1], "kappa4": k[4], "kappa7": k[7]},
        lhs=7 * k[4],
        rhs=2 * k[7] + 5 * k[1],
        diagnostic=diagnostic,
    )


def menuma_closed_form(r: float) -> dict[str, float]:
    if r <= 0:
        raise ValueError("r must be positive")
    a = 1 / (3 * r)
    b = 1 / (2 * r)
    delta = abs(b - a)
    kappa1 = 1 / r
    # congruent neighbours kappa0 == kappa2 in the Descartes sum rule
    kappa0 = -a + b + kappa1
    return {"a": a, "b": b, "delta": delta, "kappa1": kappa1, "kappa0": kappa0, "D": kappa1 - kappa0}


def verify_menuma(r: float) -> SangakuReport:
    q = menuma_closed_form(r)
    kappa7 = chain_closed_form(q["kappa0"], q["kappa1"], q["delta"], 7)
    q["kappa7"] = kappa7
    q["r7"] = 1 / kappa7
    return SangakuReport(problem="menuma", quantities=q, lhs=kappa7, rhs=7 / r)


def menuma_grid(r: float) -> GridSpec:
    """Grid whose inversion produces the Menuma configuration.

    With the inversion radius sqrt(12)*r about the touch point P = origin,
    the lines x = 2r and x = 3r map to the bounding circles of radius 3r and
    2r centred on the +x axis, and the cell circle centred at (2.5r, 0) maps
    to the largest chain circle of radius r.
    """
    return GridSpec(d=r, ax=0.0, ay=r / 2, r=math.sqrt(12) * r)


def construct_menuma_geometry(r: float, count: int = 8) -> Chain:
    """Build the actual circles of the Menuma chain.

    Members are keyed by tablet index n (largest circle n = 1) and span
    [3 - count, count - 1], symmetric about n = 1.
    """
    if r <= 0:
        raise ValueError("r must be positive")
    if count < 8:
        raise ValueError("count must be at least 8")
    spec = menuma_grid(r)
    inv, eps = spec.inversion, spec.eps
    strip = 2
    bounding = tuple(
        FrameCircle(
            Orientation.VERTICAL,
            k,
            invert_gcircle(inv, grid_line(spec, Orientation.VERTICAL, k), eps),
            2 * (k * spec.d - spec.ax) / spec.r**2,
        )
        for k in (strip, strip + 1)
    )
    members = {
        n: invert_gcircle(inv, cell_circle(spec, strip, n - 1), eps)
        for n in range(3 - count, count)
    }
    return make_chain(Orientation.VERTICAL, strip, members, bounding)

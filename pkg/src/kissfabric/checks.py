"""Invariant suite run over a materialized fabric.

Each check returns a `CheckResult` carrying the worst normalized error seen,
so a failure report says by how much, not just where.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .fabric import (
    Chain,
    Fabric,
    chain_closed_form,
    region_bends,
    shared_circle,
    tangency_circle,
    tangency_points,
)
from .grid import Orientation, cell_circle
from .inversive import (
    ORIGIN,
    Circle,
    Line,
    distance_to,
    gcircle_scale,
    invert_gcircle,
    orthogonal,
    same_gcircle,
)

QUADRATIC_TOL = 1e-6
DESCARTES_TOL = 1e-9
SHARED_TOL = 1e-10


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    worst: float = 0.0
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  {self.detail}" if self.detail else ""
        return f"{status}  {self.name:<22} worst={self.worst:.3e}{extra}"


def _chain_scale(chain: Chain, delta: float) -> float:
    return max([delta] + [abs(b) for b in chain.bends.values()])


def _result(name: str, worst: float, limit: float, where: str) -> CheckResult:
    ok = worst <= limit
    return CheckResult(name, ok, worst, "" if ok else f"at {where}")


def check_delta_constancy(fabric: Fabric, tol: float = 1e-9) -> CheckResult:
    worst, where = 0.0, ""
    for o in Orientation:
        frames = fabric.frames(o)
        for a, b in zip(frames, frames[1:]):
            err = abs((b.kappa - a.kappa) - fabric.delta) / fabric.delta
            if err > worst:
                worst, where = err, f"{o.value} {a.index}->{b.index}"
    return _result("delta_constancy", worst, tol, where)


def check_frames_through_carrier(fabric: Fabric, tol: float = 1e-9) -> CheckResult:
    worst, where = 0.0, ""
    d = fabric.spec.d
    for fc in fabric.v_frame + fabric.h_frame:
        err = distance_to(fc.shape, ORIGIN) / d
        if err > worst:
            worst, where = err, f"{fc.orientation.value} {fc.index}"
    return _result("frames_through_carrier", worst, tol, where)


def check_frame_orthogonality(fabric: Fabric, tol: float = 1e-8) -> CheckResult:
    bad = [
        (v.index, h.index)
        for v, h in itertools.product(fabric.v_frame, fabric.h_frame)
        if not orthogonal(v.shape, h.shape, tol)
    ]
    return CheckResult("frame_orthogonality", not bad, float(len(bad)), f"pairs {bad[:3]}" if bad else "")


def check_quadratic_law(fabric: Fabric, tol: float = QUADRATIC_TOL) -> CheckResult:
    """Geometric bends against the closed form anchored at members 0 and 1."""
    worst, where = 0.0, ""
    for ch in fabric.all_chains():
        if 0 not in ch.bends or 1 not in ch.bends:
            continue
        scale = _chain_scale(ch, fabric.delta)
        k0, k1 = ch.bends[0], ch.bends[1]
        for n in ch.indices:
            err = abs(ch.bends[n] - chain_closed_form(k0, k1, fabric.delta, n)) / scale
            if err > worst:
                worst, where = err, f"{ch.orientation.value} {ch.strip} n={n}"
    return _result("quadratic_law", worst, tol, where)


def check_recurrence(fabric: Fabric, tol: float = 1e-8) -> CheckResult:
    worst, where = 0.0, ""
    for ch in fabric.all_chains():
        scale = _chain_scale(ch, fabric.delta)
        b = ch.bends
        for n in ch.indices[1:-1]:
            err = abs(b[n + 1] + b[n - 1] - 2 * (b[n] + fabric.delta)) / scale
            if err > worst:
                worst, where = err, f"{ch.orientation.value} {ch.strip} n={n}"
    return _result("recurrence", worst, tol, where)


def check_anchor_independence(fabric: Fabric, tol: float = 1e-9) -> CheckResult:
    """Re-anchoring the closed form at any (m, m+1) reproduces the sequence."""
    worst, where = 0.0, ""
    for ch in fabric.all_chains():
        scale = _chain_scale(ch, fabric.delta)
        b = ch.bends
        for m in ch.indices[:-1]:
            for n in ch.indices:
                err = abs(chain_closed_form(b[m], b[m + 1], fabric.delta, n - m) - b[n]) / scale
                if err > worst:
                    worst, where = err, f"{ch.orientation.value} {ch.strip} anchor {m} n={n}"
    return _result("anchor_independence", worst, tol, where)


def check_descartes(fabric: Fabric, tol: float = DESCARTES_TOL) -> CheckResult:
    worst, where = 0.0, ""
    for ch in fabric.all_chains():
        for n in ch.indices[:-1]:
            q = region_bends(fabric, ch, n)
            err = abs(q.residual) / q.scale if q.scale else abs(q.residual)
            if err > worst:
                worst, where = err, f"{ch.orientation.value} {ch.strip} n={n} bends={q.bends}"
    return _result("descartes_residual", worst, tol, where)


def _touch_error(g1, g2, scale: float) -> float:
    """How far a pair is from tangency, relative to `scale`."""
    if isinstance(g1, Line) and isinstance(g2, Line):
        return abs(g1.unit_normal.cross(g2.unit_normal))
    if isinstance(g1, Line):
        g1, g2 = g2, g1
    if isinstance(g2, Line):
        return abs(abs(g2.signed_distance(g1.center)) - g1.radius) / scale
    dist = g1.center.dist(g2.center)
    return min(abs(dist - (g1.radius + g2.radius)), abs(dist - abs(g1.radius - g2.radius))) / scale


def check_chain_tangency(fabric: Fabric, tol: float = 1e-8) -> CheckResult:
    worst, where = 0.0, ""
    for ch in fabric.all_chains():
        for n in ch.indices:
            g = ch.members[n]
            others = [(f"bound {fc.index}", fc.shape) for fc in ch.bounding]
            if n + 1 in ch.members:
                others.append((f"member {n + 1}", ch.members[n + 1]))
            for label, h in others:
                scale = max(gcircle_scale(g), gcircle_scale(h))
                err = _touch_error(g, h, scale)
                if err > worst:
                    worst, where = err, f"{ch.orientation.value} {ch.strip} n={n} vs {label}"
    return _result("chain_tangency", worst, tol, where)


def check_chains_avoid_carrier(fabric: Fabric) -> CheckResult:
    eps = fabric.spec.eps
    bad = [
        (ch.orientation.value, ch.strip, n)
        for ch in fabric.all_chains()
        for n, g in ch.members.items()
        if isinstance(g, Circle) and distance_to(g, ORIGIN) <= eps
    ]
    return CheckResult("chains_avoid_carrier", not bad, float(len(bad)), f"{bad[:3]}" if bad else "")


def check_tangency_circles(fabric: Fabric, tol: float = 1e-8) -> CheckResult:
    """Touch points of every chain are concyclic on a circle through A."""
    worst, where = 0.0, ""
    for ch in fabric.all_chains():
        pts = [p for p in tangency_points(ch, tol).values() if p is not None]
        if len(pts) < 3:
            continue
        fit = tangency_circle(ch, tol)
        scale = max([gcircle_scale(fit)] + [max(1.0, p.norm()) for p in pts])
        for p in pts + [ORIGIN]:
            err = distance_to(fit, p) / scale
            if err > worst:
                worst, where = err, f"{ch.orientation.value} {ch.strip}"
    return _result("tangency_circle", worst, tol, where)


def check_shared_circles(fabric: Fabric, tol: float = SHARED_TOL) -> CheckResult:
    bad = []
    inv, eps = fabric.spec.inversion, fabric.spec.eps
    for v, h in itertools.product(fabric.v_chains, fabric.h_chains):
        if h.strip not in v.members or v.strip not in h.members:
            continue
        try:
            g = shared_circle(v, h, tol)
        except ValueError:
            bad.append((v.strip, h.strip))
            continue
        direct = invert_gcircle(inv, cell_circle(fabric.spec, v.strip, h.strip), eps)
        if not same_gcircle(g, direct, tol * max(gcircle_scale(g), gcircle_scale(direct))):
            bad.append((v.strip, h.strip))
    return CheckResult("shared_circles", not bad, float(len(bad)), f"cells {bad[:3]}" if bad else "")


def run_checks(fabric: Fabric, tol: float = 1e-8) -> list[CheckResult]:
    """The full suite; `tol` drives the geometric predicates."""
    return [
        check_delta_constancy(fabric),
        check_frames_through_carrier(fabric, tol),
        check_frame_orthogonality(fabric, tol),
        check_quadratic_law(fabric),
        check_recurrence(fabric, tol),
        check_anchor_independence(fabric),
        check_descartes(fabric),
        check_chain_tangency(fabric, tol),
        check_chains_avoid_carrier(fabric),
        check_tangency_circles(fabric, tol),
        check_shared_circles(fabric),
    ]

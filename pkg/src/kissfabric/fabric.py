"""Fabric construction and the curvature laws of its frames and chains.

Three curvature conventions live side by side here:

* frame circles carry a signed ``kappa`` (the sign of the source line's
  offset from the carrier, as in carrier-centered coordinates);
* chain members carry an unsigned ``kappas`` entry and a signed ``bends``
  entry, negative only for the one member that encloses the carrier (the
  image of a cell circle containing A). The quadratic chain law holds for
  the bends;
* Descartes quads get their own per-region signing from `region_bends`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .grid import GridSpec, Orientation, cell_circle, grid_line, line_offset
from .inversive import (
    AT_INFINITY,
    DEFAULT_TOL,
    ORIGIN,
    Circle,
    GeneralizedCircle,
    Line,
    Point,
    circle_through,
    curvature,
    gcircle_scale,
    invert_gcircle,
    same_gcircle,
    tangent,
)

Window = tuple[int, int]
DEFAULT_WINDOW: Window = (-6, 6)


class ComplexRootsError(ValueError):
    """Three bends that no pair of tangent generalized circles can complete."""


class WindowMissError(LookupError):
    """A requested chain member lies outside the materialized window."""


@dataclass(frozen=True)
class FrameCircle:
    orientation: Orientation
    index: int
    shape: GeneralizedCircle
    kappa: float


@dataclass(frozen=True, eq=False)
class Chain:
    """A Pappus-like chain, materialized over a finite index range.

    Member ``n`` of a vertical chain in strip ``k`` is the image of cell
    circle (k, n); for a horizontal chain in strip ``m`` it is cell (n, m).
    """

    orientation: Orientation
    strip: int
    members: dict[int, GeneralizedCircle]
    kappas: dict[int, float]
    bends: dict[int, float]
    bounding: tuple[FrameCircle, FrameCircle]

    @property
    def indices(self) -> list[int]:
        return sorted(self.members)

    def cell(self, n: int) -> tuple[int, int]:
        if self.orientation is Orientation.VERTICAL:
            return (self.strip, n)
        return (n, self.strip)


def make_chain(
    orientation: Orientation,
    strip: int,
    members: dict[int, GeneralizedCircle],
    bounding: tuple[FrameCircle, FrameCircle],
    carrier: Point = ORIGIN,
) -> Chain:
    """Wrap member shapes into a Chain, deriving curvatures and bends."""
    kappas = {n: curvature(g) for n, g in members.items()}
    bends = {}
    for n, g in members.items():
        around_carrier = isinstance(g, Circle) and g.center.dist(carrier) < g.radius
        bends[n] = -kappas[n] if around_carrier else kappas[n]
    return Chain(Orientation(orientation), strip, dict(members), kappas, bends, bounding)


@dataclass(frozen=True, eq=False)
class Fabric:
    spec: GridSpec
    window: Window
    members_window: Window
    v_frame: list[FrameCircle]
    h_frame: list[FrameCircle]
    v_chains: list[Chain]
    h_chains: list[Chain]
    delta: float

    def frames(self, orientation: Orientation) -> list[FrameCircle]:
        if Orientation(orientation) is Orientation.VERTICAL:
            return self.v_frame
        return self.h_frame

    def chains(self, orientation: Orientation) -> list[Chain]:
        if Orientation(orientation) is Orientation.VERTICAL:
            return self.v_chains
        return self.h_chains

    def chain(self, orientation: Orientation, strip: int) -> Chain:
        for c in self.chains(orientation):
            if c.strip == strip:
                return c
        raise WindowMissError(f"no {Orientation(orientation).value} chain in strip {strip}")

    def all_chains(self) -> list[Chain]:
        return self.v_chains + self.h_chains


def frame_delta(spec: GridSpec) -> float:
    return 2.0 * spec.d / spec.r**2


def frame_kappa(spec: GridSpec, orientation: Orientation, k: int) -> float:
    return 2.0 * line_offset(spec, orientation, k) / spec.r**2


def frame_circle(spec: GridSpec, orientation: Orientation, k: int) -> FrameCircle:
    shape = invert_gcircle(spec.inversion, grid_line(spec, orientation, k), spec.eps)
    kappa = 0.0 if isinstance(shape, Line) else frame_kappa(spec, orientation, k)
    return FrameCircle(Orientation(orientation), k, shape, kappa)


def _range(w: Window) -> range:
    return range(w[0], w[1] + 1)


def build_fabric(
    spec: GridSpec, window: Window = DEFAULT_WINDOW, members: Window | None = None
) -> Fabric:
    """Invert the filled grid over a finite window.

    `window` bounds the frame indices and the chain strips; `members` bounds
    the in-strip member indices and defaults to `window`. An empty window
    (lo > hi) gives a fabric with no circles.
    """
    if members is None:
        members = window
    inv, eps = spec.inversion, spec.eps
    frames = {
        o: [frame_circle(spec, o, k) for k in _range(window)] for o in Orientation
    }
    chains = {}
    for o in Orientation:
        chains[o] = []
        for s in _range(window):
            bounding = (frame_circle(spec, o, s), frame_circle(spec, o, s + 1))
            shapes = {}
            for n in _range(members):
                k, m = (s, n) if o is Orientation.VERTICAL else (n, s)
                shapes[n] = invert_gcircle(inv, cell_circle(spec, k, m), eps)
            chains[o].append(make_chain(o, s, shapes, bounding))
    return Fabric(
        spec=spec,
        window=window,
        members_window=members,
        v_frame=frames[Orientation.VERTICAL],
        h_frame=frames[Orientation.HORIZONTAL],
        v_chains=chains[Orientation.VERTICAL],
        h_chains=chains[Orientation.HORIZONTAL],
        delta=frame_delta(spec),
    )


def chain_closed_form(kappa0: float, kappa1: float, delta: float, n: int) -> float:
    """Curvature of chain member n from two consecutive anchors."""
    return kappa0 + (kappa1 - kappa0) * n + delta * n * (n - 1)


def chain_recurrence_step(kappa_prev: float, kappa_cur: float, delta: float) -> float:
    return 2.0 * (kappa_cur + delta) - kappa_prev


def descartes_residual(bends) -> float:
    return sum(bends) ** 2 - 2.0 * sum(b * b for b in bends)


@dataclass(frozen=True)
class DescartesQuad:
    bends: tuple[float, float, float, float]
    residual: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "bends", tuple(float(b) for b in self.bends))
        object.__setattr__(self, "residual", descartes_residual(self.bends))

    @property
    def scale(self) -> float:
        return sum(abs(b) for b in self.bends) ** 2


def descartes_fourth(
    k1: float, k2: float, k3: float, tol: float = DEFAULT_TOL
) -> tuple[float, float]:
    """Both bends completing three mutually tangent circles, ascending."""
    s = k1 + k2 + k3
    q = k1 * k2 + k2 * k3 + k3 * k1
    if q < -tol * max(1.0, k1 * k1 + k2 * k2 + k3 * k3):
        raise ComplexRootsError(f"k1k2+k2k3+k3k1 = {q} < 0 for ({k1}, {k2}, {k3})")
    root = 2.0 * math.sqrt(max(q, 0.0))
    return (s - root, s + root)


def encloses(outer: GeneralizedCircle, inner: GeneralizedCircle) -> bool:
    """Whether `outer` contains `inner`, for a pair already known to be tangent.

    A tangent pair sits at center distance r_o + r_i (outside) or
    |r_o - r_i| (inside), so comparing the distance to r_o separates the two
    cases without a tolerance. Lines never enclose and are never enclosed.
    """
    if isinstance(outer, Line) or isinstance(inner, Line):
        return False
    if inner.radius >= outer.radius:
        return False
    return outer.center.dist(inner.center) < outer.radius


def region_bends(fabric: Fabric | None, chain: Chain, n: int) -> DescartesQuad:
    """Descartes quad of the two bounding frame circles and members n, n+1.

    A circle enclosing any of the other three enters with a negative bend,
    lines with bend 0. `fabric` is accepted for call-site symmetry; the chain
    carries everything needed.
    """
    if n not in chain.members or n + 1 not in chain.members:
        raise WindowMissError(f"chain members {n} and {n + 1} are not both materialized")
    shapes = [chain.bounding[0].shape, chain.bounding[1].shape, chain.members[n], chain.members[n + 1]]
    bends = []
    for i, g in enumerate(shapes):
        b = curvature(g)
        if any(encloses(g, h) for j, h in enumerate(shapes) if j != i):
            b = -b
        bends.append(b)
    return DescartesQuad(tuple(bends))


def _integer_distance(x: float) -> float:
    return abs(x - round(x))


def check_integral_premise(kappas, tol: float = DEFAULT_TOL) -> bool:
    """True iff the six curvatures of s', t', gamma0, gamma1, alpha, beta are integers."""
    kappas = list(kappas)
    if len(kappas) != 6:
        raise ValueError(f"expected six curvatures, got {len(kappas)}")
    return all(_integer_distance(k) <= tol for k in kappas)


@dataclass(frozen=True)
class IntegralEntry:
    label: str
    kappa: float
    distance: float


@dataclass(frozen=True)
class IntegralReport:
    entries: list[IntegralEntry]
    tol: float

    @property
    def integral(self) -> bool:
        return all(e.distance <= self.tol for e in self.entries)

    @property
    def worst(self) -> IntegralEntry | None:
        return max(self.entries, key=lambda e: e.distance, default=None)

    def to_text(self) -> str:
        lines = [f"{e.label}\t{e.kappa:.12g}\t{e.distance:.3e}" for e in self.entries]
        w = self.worst
        lines.append(
            f"integral: {self.integral} (tol {self.tol:g}, worst "
            f"{w.distance if w else 0.0:.3e}{' at ' + w.label if w else ''})"
        )
        return "\n".join(lines)


def verify_integral(fabric: Fabric, tol: float = 1e-6) -> IntegralReport:
    entries = []
    for o in Orientation:
        for fc in fabric.frames(o):
            entries.append(IntegralEntry(f"frame {o.value} {fc.index}", fc.kappa, _integer_distance(fc.kappa)))
    for ch in fabric.all_chains():
        for n in ch.indices:
            k = ch.kappas[n]
            entries.append(
                IntegralEntry(f"chain {ch.orientation.value} {ch.strip} {n}", k, _integer_distance(k))
            )
    return IntegralReport(entries, tol)


def tangency_points(chain: Chain, tol: float = 1e-8) -> dict[int, Point | None]:
    """Touch point of members n and n+1, keyed by n.

    Two parallel line members touch at infinity and map to None.
    """
    pts = {}
    idx = chain.indices
    for n in idx[:-1]:
        g1, g2 = chain.members[n], chain.members[n + 1]
        scale = max(gcircle_scale(g1), gcircle_scale(g2))
        p = tangent(g1, g2, tol * scale)
        if p is None:
            raise ValueError(f"members {n} and {n + 1} of {chain.orientation.value} chain {chain.strip} do not touch")
        pts[n] = None if p is AT_INFINITY else p
    return pts


def tangency_circle(chain: Chain, tol: float = 1e-8) -> GeneralizedCircle:
    """Generalized circle through the chain's touch points.

    Fitted through three well-separated finite touch points (first, middle,
    last); collinear points give a Line.
    """
    finite = [p for p in tangency_points(chain, tol).values() if p is not None]
    if len(finite) < 3:
        raise ValueError("need at least three finite tangency points")
    return circle_through(finite[0], finite[len(finite) // 2], finite[-1])


def shared_circle(v_chain: Chain, h_chain: Chain, tol: float = 1e-10) -> GeneralizedCircle:
    """The member common to a vertical and a horizontal chain: cell (k, m)."""
    if v_chain.orientation is not Orientation.VERTICAL or h_chain.orientation is not Orientation.HORIZONTAL:
        raise ValueError("expected a vertical and a horizontal chain")
    k, m = v_chain.strip, h_chain.strip
    if m not in v_chain.members or k not in h_chain.members:
        raise WindowMissError(f"cell ({k}, {m}) is outside one of the chain windows")
    a, b = v_chain.members[m], h_chain.members[k]
    if not same_gcircle(a, b, tol * max(gcircle_scale(a), gcircle_scale(b))):
        raise ValueError(f"chains disagree on cell ({k}, {m}): {a} vs {b}")
    return a

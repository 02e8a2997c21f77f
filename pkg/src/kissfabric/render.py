"""SVG rendering of a fabric: black frames, purple chains, red reference circle."""

from __future__ import annotations

import math
from dataclasses import dataclass
from xml.sax.saxutils import quoteattr

from .fabric import Fabric
from .grid import Orientation
from .inversive import Circle, GeneralizedCircle, Line, Point


@dataclass(frozen=True)
class RenderStyle:
    frame_color: str = "black"
    chain_color: str = "purple"
    reference_color: str = "red"
    stroke_width: float = 1.0  # pixels
    viewport: tuple[float, float, float, float] | None = None  # x0, y0, x1, y1
    width: int = 800
    height: int = 800

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ValueError("pixel dimensions must be positive")
        if self.viewport is not None:
            x0, y0, x1, y1 = self.viewport
            if not (x1 > x0 and y1 > y0):
                raise ValueError(f"viewport {self.viewport} has no area")


def default_viewport(fabric: Fabric) -> tuple[float, float, float, float]:
    h = 2.0 * fabric.spec.r
    return (-h, -h, h, h)


def clip_line(line: Line, box: tuple[float, float, float, float]) -> tuple[Point, Point] | None:
    """Segment of an infinite line inside an axis-aligned box (Liang-Barsky)."""
    x0, y0, x1, y1 = box
    # parametrize about the foot of the box center so t stays O(box size)
    c = line.foot(Point((x0 + x1) / 2, (y0 + y1) / 2))
    d = line.direction
    lo, hi = -math.inf, math.inf
    for p, q in ((-d.x, c.x - x0), (d.x, x1 - c.x), (-d.y, c.y - y0), (d.y, y1 - c.y)):
        if p == 0:
            if q < 0:
                return None
            continue
        t = q / p
        if p < 0:
            lo = max(lo, t)
        else:
            hi = min(hi, t)
    if lo > hi:
        return None
    return c + d * lo, c + d * hi


def _bbox_hits(c: Circle, box) -> bool:
    x0, y0, x1, y1 = box
    return not (
        c.center.x + c.radius < x0
        or c.center.x - c.radius > x1
        or c.center.y + c.radius < y0
        or c.center.y - c.radius > y1
    )


def _fmt(x: float) -> str:
    return f"{x:.10g}"


def _element(g: GeneralizedCircle, box, color: str, stroke: float, cls: str) -> str | None:
    attrs = f'class="{cls}" stroke={quoteattr(color)} stroke-width="{_fmt(stroke)}" fill="none"'
    if isinstance(g, Circle):
        if not _bbox_hits(g, box):
            return None
        return f'<circle cx="{_fmt(g.center.x)}" cy="{_fmt(g.center.y)}" r="{_fmt(g.radius)}" {attrs}/>'
    seg = clip_line(g, box)
    if seg is None:
        return None
    a, b = seg
    return f'<line x1="{_fmt(a.x)}" y1="{_fmt(a.y)}" x2="{_fmt(b.x)}" y2="{_fmt(b.y)}" {attrs}/>'


def render_svg(fabric: Fabric, style: RenderStyle | None = None) -> str:
    """Deterministic SVG 1.1 document for `fabric`.

    Drawing is in plane units with y pointing up. Frames come first (vertical,
    then horizontal, by index), then chain members by orientation, strip and
    index; a cell circle shared by two chains is drawn once.
    """
    style = style or RenderStyle()
    box = style.viewport or default_viewport(fabric)
    x0, y0, x1, y1 = box
    stroke = style.stroke_width * (x1 - x0) / style.width

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{style.width}" height="{style.height}" '
        f'viewBox="{_fmt(x0)} {_fmt(-y1)} {_fmt(x1 - x0)} {_fmt(y1 - y0)}" '
        'preserveAspectRatio="none">',
        '<g transform="scale(1,-1)">',
    ]
    for o in Orientation:
        for fc in fabric.frames(o):
            el = _element(fc.shape, box, style.frame_color, stroke, f"frame {o.value}")
            if el:
                out.append(el)
    seen = set()
    for o in Orientation:
        for ch in fabric.chains(o):
            for n in ch.indices:
                cell = ch.cell(n)
                if cell in seen:
                    continue
                seen.add(cell)
                el = _element(ch.members[n], box, style.chain_color, stroke, f"chain {o.value}")
                if el:
                    out.append(el)
    out.append(
        f'<circle class="reference" cx="0" cy="0" r="{_fmt(fabric.spec.r)}" '
        f'stroke={quoteattr(style.reference_color)} stroke-width="{_fmt(stroke)}" fill="none"/>'
    )
    out.append(
        f'<circle class="carrier" cx="0" cy="0" r="{_fmt(3 * stroke)}" '
        f'fill={quoteattr(style.reference_color)} stroke="none"/>'
    )
    out += ["</g>", "</svg>"]
    return "\n".join(out) + "\n"

"""Plane inversive geometry.

Points, generalized circles (a line or a circle), inversion in a circle, and
the tangency / orthogonality predicates used to check the fabric.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

DEFAULT_TOL = 1e-9
# "passes through the center" cutoff; callers with a grid scale pass eps * d
DEGENERACY_EPS = 1e-12


class CarrierPointError(ValueError):
    """Raised when inverting the center of the inversion itself."""


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite point ({self.x}, {self.y})")

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, s: float) -> Point:
        return Point(self.x * s, self.y * s)

    __rmul__ = __mul__

    def dot(self, other: Point) -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: Point) -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def dist(self, other: Point) -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


ORIGIN = Point(0.0, 0.0)


@dataclass(frozen=True)
class Line:
    """The line {p : normal . p = offset}; `normal` is a unit vector.

    The normal orientation is not canonicalized, so `offset` is a signed
    distance from the origin along whatever normal the producer chose.
    """

    normal: tuple[float, float]
    offset: float

    def __post_init__(self):
        nx, ny = self.normal
        if abs(math.hypot(nx, ny) - 1.0) > 1e-12:
            raise ValueError(f"line normal {self.normal} is not a unit vector")
        if not math.isfinite(self.offset):
            raise ValueError("non-finite line offset")

    @classmethod
    def from_normal(cls, nx: float, ny: float, offset: float) -> Line:
        n = math.hypot(nx, ny)
        if n == 0:
            raise ValueError("zero normal")
        return cls((nx / n, ny / n), offset / n)

    @classmethod
    def vertical(cls, x: float) -> Line:
        return cls((1.0, 0.0), x)

    @classmethod
    def horizontal(cls, y: float) -> Line:
        return cls((0.0, 1.0), y)

    @property
    def unit_normal(self) -> Point:
        return Point(*self.normal)

    @property
    def direction(self) -> Point:
        return Point(-self.normal[1], self.normal[0])

    def signed_distance(self, p: Point) -> float:
        return self.normal[0] * p.x + self.normal[1] * p.y - self.offset

    def foot(self, p: Point) -> Point:
        """Orthogonal projection of `p` onto the line."""
        return p - self.unit_normal * self.signed_distance(p)

    def point_at(self, t: float) -> Point:
        return self.foot(ORIGIN) + self.direction * t


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: float

    def __post_init__(self):
        if not (self.radius > 0 and math.isfinite(self.radius)):
            raise ValueError(f"circle radius must be positive, got {self.radius}")

    def point_at(self, theta: float) -> Point:
        return Point(
            self.center.x + self.radius * math.cos(theta),
            self.center.y + self.radius * math.sin(theta),
        )


GeneralizedCircle = Union[Line, Circle]


@dataclass(frozen=True)
class Inversion:
    center: Point
    radius: float

    def __post_init__(self):
        if not (self.radius > 0 and math.isfinite(self.radius)):
            raise ValueError(f"inversion radius must be positive, got {self.radius}")


class _AtInfinity:
    """Tangency point of two distinct parallel lines."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "AT_INFINITY"


AT_INFINITY = _AtInfinity()


def curvature(g: GeneralizedCircle) -> float:
    if isinstance(g, Line):
        return 0.0
    return 1.0 / g.radius


def distance_to(g: GeneralizedCircle, p: Point) -> float:
    """Unsigned distance from `p` to the curve `g`."""
    if isinstance(g, Line):
        return abs(g.signed_distance(p))
    return abs(p.dist(g.center) - g.radius)


def invert_point(inv: Inversion, p: Point, eps: float = DEGENERACY_EPS) -> Point:
    v = p - inv.center
    d2 = v.dot(v)
    if math.sqrt(d2) <= eps:
        raise CarrierPointError(f"{p} coincides with the inversion center")
    return inv.center + v * (inv.radius**2 / d2)


def invert_gcircle(
    inv: Inversion, g: GeneralizedCircle, eps: float = DEGENERACY_EPS
) -> GeneralizedCircle:
    """Image of a line or circle under `inv`.

    Objects whose distance from the center is at most `eps` are treated as
    passing through it: lines stay lines, circles become lines.
    """
    a = inv.center
    r2 = inv.radius**2
    if isinstance(g, Line):
        c = g.signed_distance(a)
        if abs(c) <= eps:
            return g
        # circle through A, centered on the perpendicular from A
        return Circle(a - g.unit_normal * (r2 / (2.0 * c)), r2 / (2.0 * abs(c)))

    m = g.center - a
    rho = g.radius
    mlen = m.norm()
    if abs(mlen - rho) <= eps:
        n = m * (1.0 / mlen)
        return Line((n.x, n.y), n.dot(a) + r2 / (2.0 * mlen))
    s = (mlen - rho) * (mlen + rho)
    return Circle(a + m * (r2 / s), r2 * rho / abs(s))


def _scale(*values: float) -> float:
    return max(1.0, *(abs(v) for v in values))


def tangent(
    g1: GeneralizedCircle, g2: GeneralizedCircle, tol: float = DEFAULT_TOL
) -> Point | _AtInfinity | None:
    """Tangency point of `g1` and `g2`, or None if they are not tangent.

    Two distinct parallel lines touch only at infinity and yield AT_INFINITY.
    """
    if isinstance(g1, Line) and isinstance(g2, Line):
        n1, n2 = g1.unit_normal, g2.unit_normal
        if abs(n1.cross(n2)) < tol:
            return AT_INFINITY
        return None
    if isinstance(g1, Line):
        g1, g2 = g2, g1
    if isinstance(g2, Line):
        sd = g2.signed_distance(g1.center)
        if abs(abs(sd) - g1.radius) < tol:
            return g2.foot(g1.center)
        return None

    c1, c2 = g1.center, g2.center
    dist = c1.dist(c2)
    r1, r2 = g1.radius, g2.radius
    if abs(dist - (r1 + r2)) < tol:
        return c1 + (c2 - c1) * (r1 / dist)
    if dist > 0 and abs(dist - abs(r1 - r2)) < tol:
        big, small, rb = (c1, c2, r1) if r1 >= r2 else (c2, c1, r2)
        return big + (small - big) * (rb / dist)
    return None


def orthogonal(
    g1: GeneralizedCircle, g2: GeneralizedCircle, tol: float = DEFAULT_TOL
) -> bool:
    if isinstance(g1, Line) and isinstance(g2, Line):
        return abs(g1.unit_normal.dot(g2.unit_normal)) < tol
    if isinstance(g1, Line):
        g1, g2 = g2, g1
    if isinstance(g2, Line):
        return abs(g2.signed_distance(g1.center)) < tol
    d2 = (g1.center - g2.center).dot(g1.center - g2.center)
    return abs(d2 - (g1.radius**2 + g2.radius**2)) < tol * max(1.0, d2)


def circle_through(
    p1: Point, p2: Point, p3: Point, tol: float = 1e-12
) -> GeneralizedCircle:
    """Circle through three points, or the line through them if collinear."""
    u, v = p2 - p1, p3 - p1
    cross = u.cross(v)
    if abs(cross) <= tol * u.norm() * v.norm():
        far = v if v.norm() >= u.norm() else u
        line = Line.from_normal(-far.y, far.x, 0.0)
        return Line(line.normal, line.unit_normal.dot(p1))
    uu, vv = u.dot(u), v.dot(v)
    cx = (v.y * uu - u.y * vv) / (2.0 * cross)
    cy = (u.x * vv - v.x * uu) / (2.0 * cross)
    center = p1 + Point(cx, cy)
    return Circle(center, math.hypot(cx, cy))


def sample_points(g: GeneralizedCircle, count: int = 16) -> list[Point]:
    """Evenly spread points on `g`, for point-wise consistency checks."""
    if isinstance(g, Line):
        return [g.point_at(t) for t in (i - (count - 1) / 2 for i in range(count))]
    return [g.point_at(2 * math.pi * i / count) for i in range(count)]


def gcircle_scale(g: GeneralizedCircle) -> float:
    """Magnitude used to turn a relative tolerance into an absolute one."""
    if isinstance(g, Line):
        return _scale(g.offset)
    return _scale(g.radius, g.center.x, g.center.y)


def same_gcircle(g1: GeneralizedCircle, g2: GeneralizedCircle, tol: float) -> bool:
    """Set equality of two generalized circles within `tol` (absolute)."""
    if isinstance(g1, Line) != isinstance(g2, Line):
        return False
    if isinstance(g1, Line):
        n1, n2 = g1.unit_normal, g2.unit_normal
        s = 1.0 if n1.dot(n2) >= 0 else -1.0
        return (
            abs(n1.x - s * n2.x) <= tol
            and abs(n1.y - s * n2.y) <= tol
            and abs(g1.offset - s * g2.offset) <= tol
        )
    return g1.center.dist(g2.center) <= tol and abs(g1.radius - g2.radius) <= tol

"""The half-disk model of triangle shapes.

Map a triangle with sides (a, b, c) to the point (x, y) = (I/2, 2*area) of
an abstract plane, where I = a^2 + b^2 + c^2. Because

    a^2 b^2 = ((a^2 + b^2 - c^2)/2)^2 + (2*area)^2,

every triangle sits on the circle of center (a^2+b^2, 0) and radius a*b,
and, since a*b <= (a^2+b^2)/2, inside the half-disk of center (s, 0) and
radius s/2 for s = a^2 + b^2. The tangent line to that half-disk through
the origin has slope 1/sqrt(3), which is the Weitzenbock inequality: the
boundary half-circle consists of the isosceles triangles with a = b, and
the tangency point T = (3s/4, sqrt(3)s/4) is the equilateral one.

The side playing the role of c (the "base") is distinguished: the circle
and half-disk are those of the (a, b) pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, TextIO

from .weitzenboeck import Triangle, area_heron

#: Slope of the tangent line from the origin, tan(pi/6) = 1/sqrt(3).
TANGENT_SLOPE = 1.0 / math.sqrt(3.0)

#: Angle of that line above the horizontal axis.
TANGENT_ANGLE = math.pi / 6.0

#: Its sine: (s/2) / s.
TANGENT_SINE = 0.5

INTERIOR = "interior"
ISOSCELES_LIMIT = "isosceles_limit"
EQUILATERAL_TANGENT = "equilateral_tangent"


@dataclass(frozen=True)
class ShapePoint:
    """Point (I/2, 2*area) of the shape plane."""

    x: float
    y: float


@dataclass(frozen=True)
class ShapeCircle:
    """Circle (x - center_x)^2 + y^2 = radius^2 traced by fixing a^2+b^2 and a*b."""

    center_x: float
    radius: float


@dataclass(frozen=True)
class HalfDisk:
    """Half-disk of triangles with fixed s = a^2 + b^2: center (s, 0), radius s/2."""

    center_x: float
    radius: float

    def __post_init__(self):
        if not (self.center_x > 0):
            raise ValueError("half-disk needs s > 0")
        if self.radius != self.center_x / 2.0:
            raise ValueError("half-disk radius must be exactly center_x / 2")

    @property
    def s(self) -> float:
        return self.center_x


def halfdisk(s: float) -> HalfDisk:
    """Half-disk for a given s = a^2 + b^2."""
    return HalfDisk(center_x=s, radius=s / 2.0)


def shape_point(t: Triangle) -> ShapePoint:
    """Map a triangle to its shape-plane point ((a^2+b^2+c^2)/2, 2*area)."""
    return ShapePoint(
        x=(t.a * t.a + t.b * t.b + t.c * t.c) / 2.0,
        y=2.0 * area_heron(t),
    )


def circle_of(a: float, b: float) -> ShapeCircle:
    """Circle carrying every triangle with the given a, b (any valid c)."""
    if not (a > 0 and b > 0):
        raise ValueError("circle needs positive a, b")
    return ShapeCircle(center_x=a * a + b * b, radius=a * b)


def circle_residual(p: ShapePoint, c: ShapeCircle) -> float:
    """(p.x - center)^2 + p.y^2 - radius^2; zero iff p lies on the circle."""
    dx = p.x - c.center_x
    return dx * dx + p.y * p.y - c.radius * c.radius


def halfdisk_contains(p: ShapePoint, d: HalfDisk, tol: float = 1e-9) -> bool:
    """Membership in the open-quadrant half-disk, with slack tol on the radius^2.

    ``tol`` is absolute; pass a value scaled by d.radius**2 when the disks
    get large.
    """
    dx = p.x - d.center_x
    return p.x > 0.0 and p.y > 0.0 and dx * dx + p.y * p.y <= d.radius * d.radius + tol


def tangent_line_slope() -> float:
    """Slope of the tangent line from the origin to any half-disk: 1/sqrt(3)."""
    return TANGENT_SLOPE


def tangent_point(d: HalfDisk) -> ShapePoint:
    """Contact point T of the tangent line from the origin.

    |OT| = (sqrt(3)/2) s at angle pi/6 gives T = (3s/4, sqrt(3)s/4); T lies
    on both the tangent line and the boundary circle, and is the shape
    point of the equilateral triangle with a^2 + b^2 = s.
    """
    s = d.center_x
    return ShapePoint(x=0.75 * s, y=(math.sqrt(3.0) / 4.0) * s)


def classify(t: Triangle, tol: float = 1e-9) -> str:
    """Place a triangle within its half-disk.

    ``equilateral_tangent`` if the shape point is on the tangent line
    (equivalent to a = b = c), else ``isosceles_limit`` if it is on the
    boundary half-circle of the disk for s = a^2 + b^2 (equivalent to
    a = b), else ``interior``. ``tol`` is relative to the natural scale of
    each test (x for the line, (s/2)^2 for the circle).
    """
    p = shape_point(t)
    if abs(p.y - TANGENT_SLOPE * p.x) <= tol * p.x:
        return EQUILATERAL_TANGENT
    d = halfdisk(t.a * t.a + t.b * t.b)
    boundary = ShapeCircle(center_x=d.center_x, radius=d.radius)
    if abs(circle_residual(p, boundary)) <= tol * d.radius * d.radius:
        return ISOSCELES_LIMIT
    return INTERIOR


#: (a, b) ratios used for the per-pair circles of the figure.
_FIGURE_RATIOS = (1.0, 0.75, 0.5, 0.25)


def figure_dataset(s: float, samples: int) -> list[tuple[str, float, float]]:
    """Point series reproducing the half-disk figure for a given s = a^2 + b^2.

    Series emitted, in order:

    * ``boundary``      - the boundary half-circle of the half-disk;
    * ``tangent``       - the tangent line from the origin, up to x = 3s/2;
    * ``T``             - the tangency point;
    * ``omega``         - the disk center (s, 0);
    * ``circle:<a>:<b>`` - the circle of each (a, b) with a^2 + b^2 = s for
      b/a in ``_FIGURE_RATIOS``, sampled strictly inside the open upper arc
      so every emitted point is a valid triangle's shape point.

    Returns (series, x, y) rows; ``samples`` points per curve-like series.
    """
    if not (s > 0):
        raise ValueError("figure needs s > 0")
    if samples < 2:
        raise ValueError("need at least 2 samples")
    rows: list[tuple[str, float, float]] = []
    r = s / 2.0

    for k in range(samples):
        theta = math.pi * k / (samples - 1)
        rows.append(("boundary", s + r * math.cos(theta), r * math.sin(theta)))
    for k in range(samples):
        x = 1.5 * s * k / (samples - 1)
        rows.append(("tangent", x, TANGENT_SLOPE * x))

    tp = tangent_point(halfdisk(s))
    rows.append(("T", tp.x, tp.y))
    rows.append(("omega", s, 0.0))

    for ratio in _FIGURE_RATIOS:
        a = math.sqrt(s / (1.0 + ratio * ratio))
        b = ratio * a
        series = f"circle:{a!r}:{b!r}"
        rad = a * b
        for k in range(samples):
            # Open arc: endpoints are degenerate triangles (y = 0).
            theta = math.pi * (k + 1) / (samples + 1)
            rows.append((series, s + rad * math.cos(theta), rad * math.sin(theta)))
    return rows


def write_figure_csv(rows: Iterable[tuple[str, float, float]], stream: TextIO) -> None:
    """Serialize figure rows as ``series,x,y`` CSV with round-trip decimals."""
    stream.write("series,x,y\n")
    for series, x, y in rows:
        stream.write(f"{series},{x!r},{y!r}\n")

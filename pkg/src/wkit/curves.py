"""Curvature of unit-speed space curves and the defect bound on it.

For a curve r(t) in R^3 with |dr/dt| = 1 the curvature is
K = |r' x r''|, and applying the defect identity to u = r', v = -r'' gives

    2*sqrt(3)*K = 1 + |r''|^2 + |r' - r''|^2 - 2*|r' - R(r'')|^2,

where R rotates by pi/3 in the plane of r' and r'', oriented from r'' to
r'. The last term is the nonnegative defect, so 2*sqrt(3)*K never exceeds
1 + |r''|^2 + |r' - r''|^2, with equality iff |r''| = |r' - r''| = 1.

Jets (first and second derivative at a parameter) come from three sources:
closed-form circles, helices and lines (exactly unit-speed by
construction), central differences over uniformly sampled positions, or
the caller directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import TextIO

import numpy as np

from .vectors import SQRT3
from .weitzenboeck import defect_explicit

#: Default unit-speed tolerance for finite-difference jets; analytic jets
#: should be held to ~1e-12 instead.
SAMPLED_SPEED_TOL = 1e-6
ANALYTIC_SPEED_TOL = 1e-12


def _as_vec3(x, name: str) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if arr.shape != (3,):
        raise ValueError(f"{name} must be a 3-vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} has non-finite coordinates")
    return arr


@dataclass
class CurveJet:
    """First and second derivative of a curve at one parameter value.

    ``unit_speed_residual`` = | |d1| - 1 | is computed on construction and
    stored; the curvature operations check it against their tolerance, the
    constructor does not.
    """

    t: float
    d1: np.ndarray
    d2: np.ndarray
    unit_speed_residual: float = field(init=False)

    def __post_init__(self):
        self.d1 = _as_vec3(self.d1, "d1")
        self.d2 = _as_vec3(self.d2, "d2")
        self.unit_speed_residual = abs(math.sqrt(float(self.d1 @ self.d1)) - 1.0)


def _require_unit_speed(jet: CurveJet, tol: float) -> None:
    if jet.unit_speed_residual > tol:
        raise ValueError(
            f"unit-speed violated at t={jet.t!r}: "
            f"| |d1| - 1 | = {jet.unit_speed_residual!r} > {tol!r}"
        )


def curvature(jet: CurveJet, tol: float = SAMPLED_SPEED_TOL) -> float:
    """Curvature K = |d1 x d2| of a unit-speed jet.

    Valid only at unit speed (otherwise the cross product would need the
    |d1|^3 denominator); jets beyond ``tol`` are rejected.
    """
    _require_unit_speed(jet, tol)
    c = np.cross(jet.d1, jet.d2)
    return math.sqrt(float(c @ c))


@dataclass(frozen=True)
class CurvatureBoundReport:
    """Curvature bound bookkeeping at one parameter value.

    ``defect`` is the explicit rotation term 2*|d1 - R(d2)|^2 and
    ``residual`` = 2*sqrt(3)*curvature - rhs_bound + defect compares it
    against the intrinsic value rhs_bound - 2*sqrt(3)*curvature; the two
    are computed along independent paths and the residual should vanish to
    rounding.
    """

    curvature: float
    rhs_bound: float
    defect: float
    residual: float

    @property
    def defect_intrinsic(self) -> float:
        return self.rhs_bound - 2.0 * SQRT3 * self.curvature


def curvature_bound_report(jet: CurveJet, tol: float = SAMPLED_SPEED_TOL) -> CurvatureBoundReport:
    """Evaluate the curvature identity and bound for one jet.

    The rotation acts on d2 in the plane span(d1, d2) oriented from d2 to
    d1. That orientation equals the one from d1 to -d2, and R(d2) =
    -R'(-d2) for the same-angle rotation R', so the explicit term
    2*|d1 - R(d2)|^2 is exactly ``defect_explicit(d1, -d2)``.
    """
    _require_unit_speed(jet, tol)
    k = curvature(jet, tol)
    d1, d2 = jet.d1, jet.d2
    diff = d1 - d2
    rhs_bound = 1.0 + float(d2 @ d2) + float(diff @ diff)
    defect = defect_explicit(d1, -d2)
    return CurvatureBoundReport(
        curvature=k,
        rhs_bound=rhs_bound,
        defect=defect,
        residual=2.0 * SQRT3 * k - rhs_bound + defect,
    )


# ---------------------------------------------------------------------------
# Closed-form unit-speed curves.

def circle_position(radius: float, t: float) -> np.ndarray:
    """Point of the unit-speed circle (R cos(t/R), R sin(t/R), 0)."""
    if not (radius > 0):
        raise ValueError("circle needs radius > 0")
    return np.array([
        radius * math.cos(t / radius),
        radius * math.sin(t / radius),
        0.0,
    ])


def circle_jet(radius: float, t: float) -> CurveJet:
    """Exact jet of the unit-speed circle; K = 1/radius."""
    if not (radius > 0):
        raise ValueError("circle needs radius > 0")
    a = t / radius
    d1 = np.array([-math.sin(a), math.cos(a), 0.0])
    d2 = np.array([-math.cos(a) / radius, -math.sin(a) / radius, 0.0])
    return CurveJet(t=t, d1=d1, d2=d2)


def helix_position(a: float, b: float, t: float) -> np.ndarray:
    """Point of the unit-speed helix (a cos wt, a sin wt, b w t), w = 1/sqrt(a^2+b^2)."""
    w = _helix_rate(a, b)
    return np.array([a * math.cos(w * t), a * math.sin(w * t), b * w * t])


def helix_jet(a: float, b: float, t: float) -> CurveJet:
    """Exact jet of the unit-speed helix; K = a / (a^2 + b^2)."""
    w = _helix_rate(a, b)
    d1 = np.array([-a * w * math.sin(w * t), a * w * math.cos(w * t), b * w])
    d2 = np.array([-a * w * w * math.cos(w * t), -a * w * w * math.sin(w * t), 0.0])
    return CurveJet(t=t, d1=d1, d2=d2)


def _helix_rate(a: float, b: float) -> float:
    if a == 0 and b == 0:
        raise ValueError("helix needs (a, b) != (0, 0)")
    return 1.0 / math.sqrt(a * a + b * b)


def line_position(direction, t: float) -> np.ndarray:
    """Point t * direction of a unit-speed line."""
    d = _unit_direction(direction)
    return t * d


def line_jet(direction, t: float) -> CurveJet:
    """Exact jet of a unit-speed line; K = 0, second derivative zero."""
    d = _unit_direction(direction)
    return CurveJet(t=t, d1=d, d2=np.zeros(3))


def _unit_direction(direction) -> np.ndarray:
    d = _as_vec3(direction, "direction")
    if abs(math.sqrt(float(d @ d)) - 1.0) > 1e-9:
        raise ValueError(f"line direction must be a unit vector, got |d| = {math.sqrt(float(d @ d))!r}")
    return d


def parse_curve_spec(spec: str):
    """Split a builtin-curve spec into (kind, params).

    Accepted forms: ``circle:R``, ``helix:A:B``, ``line`` and
    ``line:dx,dy,dz``.
    """
    parts = spec.split(":")
    kind = parts[0]
    if kind == "circle":
        if len(parts) != 2:
            raise ValueError("circle spec is circle:RADIUS")
        return kind, (float(parts[1]),)
    if kind == "helix":
        if len(parts) != 3:
            raise ValueError("helix spec is helix:A:B")
        return kind, (float(parts[1]), float(parts[2]))
    if kind == "line":
        if len(parts) == 1:
            return kind, (np.array([1.0, 0.0, 0.0]),)
        if len(parts) == 2:
            coords = [float(x) for x in parts[1].split(",")]
            return kind, (np.asarray(coords, dtype=float),)
        raise ValueError("line spec is line or line:dx,dy,dz")
    raise ValueError(f"unknown curve kind {kind!r} (expected circle, helix, or line)")


def builtin_curve(spec: str, t: float) -> CurveJet:
    """Jet of a builtin curve at parameter t, e.g. spec ``circle:2``."""
    kind, params = parse_curve_spec(spec)
    if kind == "circle":
        return circle_jet(params[0], t)
    if kind == "helix":
        return helix_jet(params[0], params[1], t)
    return line_jet(params[0], t)


def builtin_position(spec: str, t: float) -> np.ndarray:
    """Position of a builtin curve at parameter t."""
    kind, params = parse_curve_spec(spec)
    if kind == "circle":
        return circle_position(params[0], t)
    if kind == "helix":
        return helix_position(params[0], params[1], t)
    return line_position(params[0], t)


# ---------------------------------------------------------------------------
# Finite-difference jets from sampled positions.

def jet_from_samples(ts, positions, i: int) -> CurveJet:
    """Central-difference jet at interior sample i of a uniform grid.

    d1 ~ (p[i+1] - p[i-1]) / (2h) and d2 ~ (p[i+1] - 2 p[i] + p[i-1]) / h^2,
    both O(h^2) accurate. Needs at least 3 samples, spacing uniform to
    1e-9 relative, and 1 <= i <= len - 2. The unit-speed residual is
    recorded on the jet, not enforced here.
    """
    ts = np.asarray(ts, dtype=float)
    pos = np.asarray(positions, dtype=float)
    n = ts.shape[0]
    if n < 3:
        raise ValueError("need at least 3 samples for central differences")
    if pos.shape != (n, 3):
        raise ValueError(f"positions must have shape ({n}, 3), got {pos.shape}")
    steps = np.diff(ts)
    if np.any(steps <= 0):
        raise ValueError("parameter values must be strictly increasing")
    h = float(steps[0])
    if float(np.max(np.abs(steps - h))) > 1e-9 * h:
        raise ValueError("sample spacing must be uniform to 1e-9 relative")
    if not (1 <= i <= n - 2):
        raise ValueError(f"index {i} has no two neighbours in 0..{n - 1}")
    d1 = (pos[i + 1] - pos[i - 1]) / (2.0 * h)
    d2 = (pos[i + 1] - 2.0 * pos[i] + pos[i - 1]) / (h * h)
    return CurveJet(t=float(ts[i]), d1=d1, d2=d2)


def read_curve_csv(stream: TextIO) -> tuple[np.ndarray, np.ndarray]:
    """Parse curve samples from ``t,x,y,z`` CSV with strictly increasing t."""
    header = stream.readline().strip()
    if [c.strip() for c in header.split(",")] != ["t", "x", "y", "z"]:
        raise ValueError(f"expected header 't,x,y,z', got {header!r}")
    ts: list[float] = []
    pos: list[list[float]] = []
    for row, line in enumerate(stream, start=1):
        line = line.strip()
        if not line:
            continue
        fields = line.split(",")
        if len(fields) != 4:
            raise ValueError(f"malformed CSV at row {row}: expected 4 fields, got {len(fields)}")
        try:
            values = [float(x) for x in fields]
        except ValueError as exc:
            raise ValueError(f"malformed CSV at row {row}: {exc}") from None
        if ts and values[0] <= ts[-1]:
            raise ValueError(f"parameter not strictly increasing at row {row}")
        ts.append(values[0])
        pos.append(values[1:])
    if len(ts) < 3:
        raise ValueError("need at least 3 samples")
    return np.asarray(ts), np.asarray(pos)

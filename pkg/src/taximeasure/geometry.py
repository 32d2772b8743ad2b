"""Core types and distance operations for taxicab (L1) geometry.

In the taxicab metric the unit circle is the diamond |x| + |y| = 1, whose
circumference is 8, so the circle constant is 4 rather than 3.14159...
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

# Ratio of taxicab circumference to diameter.  Exact: the taxicab circle of
# radius r is a diamond with four sides of taxicab length 2r.
PI_T: float = 4.0

_TWO_PI = 2.0 * math.pi


def _require_finite(label: str, *values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise DomainError(f"{label}: expected finite value, got {v!r}")


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        _require_finite("Point2", self.x, self.y)


@dataclass(frozen=True)
class Point3:
    x: float
    y: float
    z: float

    def __post_init__(self):
        _require_finite("Point3", self.x, self.y, self.z)


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi] with lo <= hi, both finite."""

    lo: float
    hi: float

    def __post_init__(self):
        _require_finite("Interval", self.lo, self.hi)
        if self.lo > self.hi:
            raise DomainError(f"Interval requires lo <= hi, got [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def __contains__(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def covers(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi


@dataclass(frozen=True)
class AngleRad:
    """An angle in radians, normalized into [0, 2*pi)."""

    value: float

    def __post_init__(self):
        _require_finite("AngleRad", self.value)
        v = math.fmod(self.value, _TWO_PI)
        if v < 0.0:
            v += _TWO_PI
        if v >= _TWO_PI:  # fmod can land on 2*pi after the rounding above
            v = 0.0
        object.__setattr__(self, "value", v)


def _angle_value(theta: "AngleRad | float") -> float:
    if isinstance(theta, AngleRad):
        return theta.value
    return AngleRad(float(theta)).value


def taxicab_dist_1d(a: float, b: float) -> float:
    _require_finite("taxicab_dist_1d", a, b)
    return abs(b - a)


def taxicab_dist_2d(p: Point2, q: Point2) -> float:
    return abs(q.x - p.x) + abs(q.y - p.y)


def taxicab_dist_3d(p: Point3, q: Point3) -> float:
    return abs(q.x - p.x) + abs(q.y - p.y) + abs(q.z - p.z)


def euclidean_dist_2d(p: Point2, q: Point2) -> float:
    return math.hypot(q.x - p.x, q.y - p.y)


def euclidean_dist_3d(p: Point3, q: Point3) -> float:
    return math.hypot(q.x - p.x, q.y - p.y, q.z - p.z)


def segment_angle(p: Point2, q: Point2) -> AngleRad:
    """Inclination of the segment p->q against the +x axis."""
    if p == q:
        raise DomainError("segment_angle requires two distinct points")
    return AngleRad(math.atan2(q.y - p.y, q.x - p.x))


def taxicab_length_from_angle(d_e: float, theta: "AngleRad | float") -> float:
    """Taxicab length of a straight segment of Euclidean length d_e at
    inclination theta: d_e * (|cos theta| + |sin theta|)."""
    _require_finite("taxicab_length_from_angle", d_e)
    if d_e < 0.0:
        raise DomainError(f"taxicab_length_from_angle: d_e must be >= 0, got {d_e}")
    t = _angle_value(theta)
    return d_e * (abs(math.cos(t)) + abs(math.sin(t)))

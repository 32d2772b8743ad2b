"""Taxicab measure operations built on the quadrature engine.

Arc length of a graph y = f(x) integrates 1 + |f'|; a parametric curve
integrates the sum of its component speeds |dx/dt| + |dy/dt| (+ |dz/dt|).
For monotone graphs the arc length is path-independent and collapses to the
closed form (b - a) + |f(b) - f(a)|.

Rotating a plane region out of a coordinate plane by angles (alpha, beta)
scales its taxicab area by (|cos a| + |sin a|)(|cos b| + |sin b|).

For a solid of revolution with radius profile f >= 0:

    surface = integral of 2*pi_t * f * (1 + |f'|) * sqrt(1 - f'^2 / (2(1 + f'^2)))
    volume  = integral of (pi_t / 2) * f^2
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, MonotonicityError
from .geometry import PI_T, AngleRad, Interval
from .profiles import ParametricCurve2, ParametricCurve3, ProfileFunction
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, detect_sign_changes, integrate

# Grid resolution for the sampled precondition checks (nonnegativity,
# monotonicity).  These are heuristics by design: the declared breakpoints and
# their one-sided neighborhoods are always included.
_CHECK_GRID = 1024
_SQRT_HALF = math.sqrt(0.5)


@dataclass(frozen=True)
class RotationAngles:
    """Tilt angles of a rotated plane against two coordinate axes."""

    alpha: AngleRad
    beta: AngleRad

    def __post_init__(self):
        if not isinstance(self.alpha, AngleRad):
            object.__setattr__(self, "alpha", AngleRad(float(self.alpha)))
        if not isinstance(self.beta, AngleRad):
            object.__setattr__(self, "beta", AngleRad(float(self.beta)))


def _resolve_domain(curve, domain: Interval | None) -> Interval:
    if domain is None:
        return curve.domain
    if not curve.domain.covers(domain):
        raise DomainError(
            f"requested domain [{domain.lo}, {domain.hi}] is not contained in "
            f"the curve domain [{curve.domain.lo}, {curve.domain.hi}]")
    return domain


def _interior_breakpoints(curve, domain: Interval) -> list[float]:
    return [b for b in curve.breakpoints if domain.lo < b < domain.hi]


def _check_sample_grid(domain: Interval, breakpoints: list[float]) -> np.ndarray:
    lo, hi = domain.lo, domain.hi
    xs = np.linspace(lo, hi, _CHECK_GRID)
    if breakpoints:
        h = 1e-9 * (hi - lo)
        near = np.array([v for b in breakpoints for v in (b - h, b, b + h)])
        xs = np.union1d(xs, np.clip(near, lo, hi))
    return xs


def _check_nonnegative(f: ProfileFunction, domain: Interval) -> None:
    xs = _check_sample_grid(domain, _interior_breakpoints(f, domain))
    vals = np.asarray(f.evaluate(xs), dtype=float)
    tol = -1e-12 * max(1.0, float(np.max(np.abs(vals))))
    worst = int(np.argmin(vals))
    if vals[worst] < tol:
        raise DomainError(
            f"profile must be nonnegative on the domain: f({xs[worst]!r}) = {vals[worst]!r}")


def _graph_splits(f: ProfileFunction, domain: Interval, cfg: QuadratureConfig) -> list[float]:
    splits = _interior_breakpoints(f, domain)
    splits += detect_sign_changes(f.derivative, domain, cfg.kink_scan_points)
    return splits


def arclength_functional(f: ProfileFunction, domain: Interval | None = None,
                         cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Taxicab arc length of the graph of f: integral of 1 + |f'|."""
    dom = _resolve_domain(f, domain)
    splits = _graph_splits(f, dom, cfg)

    def integrand(x: float) -> float:
        return 1.0 + abs(f.derivative(x))

    return integrate(integrand, dom, splits, cfg).value


def arclength_monotone_closed(f: ProfileFunction, domain: Interval | None = None) -> float:
    """Path-independent arc length (b - a) + |f(b) - f(a)| for monotone f.

    Monotonicity is checked by sampling f' on a uniform interior grid plus
    one-sided neighborhoods of every breakpoint; a strict sign change raises
    MonotonicityError with the witnesses.
    """
    dom = _resolve_domain(f, domain)
    lo, hi = dom.lo, dom.hi
    if hi > lo:
        inner = np.linspace(lo, hi, _CHECK_GRID + 2)[1:-1]
        bks = _interior_breakpoints(f, dom)
        if bks:
            h = 1e-9 * (hi - lo)
            near = np.array([v for b in bks for v in (b - h, b + h)])
            inner = np.union1d(inner, np.clip(near, np.nextafter(lo, hi), np.nextafter(hi, lo)))
        d = np.asarray(f.derivative(inner), dtype=float)
        pos = d > 0.0
        neg = d < 0.0
        if pos.any() and neg.any():
            xp = float(inner[pos][0])
            xn = float(inner[neg][0])
            raise MonotonicityError(
                "f is not monotone on the domain: "
                f"f'({xp:.12g}) = {d[pos][0]:.6g} but f'({xn:.12g}) = {d[neg][0]:.6g}")
    return (hi - lo) + abs(float(f.evaluate(hi)) - float(f.evaluate(lo)))


def arclength_parametric_2d(c: ParametricCurve2, domain: Interval | None = None,
                            cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Taxicab arc length of (x(t), y(t)): integral of |x'| + |y'|."""
    dom = _resolve_domain(c, domain)
    splits = _interior_breakpoints(c, dom)
    splits += detect_sign_changes(c.dx, dom, cfg.kink_scan_points)
    splits += detect_sign_changes(c.dy, dom, cfg.kink_scan_points)

    def integrand(t: float) -> float:
        return abs(c.dx(t)) + abs(c.dy(t))

    return integrate(integrand, dom, splits, cfg).value


def arclength_parametric_3d(c: ParametricCurve3, domain: Interval | None = None,
                            cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Taxicab arc length of (x(t), y(t), z(t)): integral of |x'| + |y'| + |z'|."""
    dom = _resolve_domain(c, domain)
    splits = _interior_breakpoints(c, dom)
    splits += detect_sign_changes(c.dx, dom, cfg.kink_scan_points)
    splits += detect_sign_changes(c.dy, dom, cfg.kink_scan_points)
    splits += detect_sign_changes(c.dz, dom, cfg.kink_scan_points)

    def integrand(t: float) -> float:
        return abs(c.dx(t)) + abs(c.dy(t)) + abs(c.dz(t))

    return integrate(integrand, dom, splits, cfg).value


def area_scaling_factor(angles: RotationAngles) -> float:
    """Taxicab area multiplier of a plane tilted by (alpha, beta).

    The mathematical range is [1, 2]; the product is clamped to it so the
    boundary identities survive floating-point rounding of the angles.
    """
    a = angles.alpha.value
    b = angles.beta.value
    fa = abs(math.cos(a)) + abs(math.sin(a))
    fb = abs(math.cos(b)) + abs(math.sin(b))
    # Angles that are right-angle multiples must scale by exactly 1, but
    # sin(pi) evaluates to ~1.2e-16 and rounds |cos|+|sin| up one ulp; snap
    # each factor back (near a multiple of pi/2 the factor is 1 + distance).
    if fa < 1.0 + 4e-16:
        fa = 1.0
    if fb < 1.0 + 4e-16:
        fb = 1.0
    return min(2.0, max(1.0, fa * fb))


def taxicab_area_rotated(area_e: float, angles: RotationAngles) -> float:
    """Taxicab area of a rotated plane region of ordinary area area_e."""
    if not math.isfinite(area_e) or area_e < 0.0:
        raise DomainError(f"area_e must be finite and >= 0, got {area_e!r}")
    return area_e * area_scaling_factor(angles)


def surface_of_revolution(f: ProfileFunction, domain: Interval | None = None,
                          cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Lateral taxicab surface area of the solid obtained by revolving f >= 0
    around the x axis."""
    dom = _resolve_domain(f, domain)
    _check_nonnegative(f, dom)
    splits = _graph_splits(f, dom, cfg)

    def integrand(x: float) -> float:
        d = float(f.derivative(x))
        dd = d * d
        if dd > 1e300:
            radical = _SQRT_HALF
        else:
            radical = math.sqrt(1.0 - dd / (2.0 * (1.0 + dd)))
        return 2.0 * PI_T * float(f.evaluate(x)) * (1.0 + abs(d)) * radical

    return integrate(integrand, dom, splits, cfg).value


def volume_of_revolution(f: ProfileFunction, domain: Interval | None = None,
                         cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Taxicab volume of the solid obtained by revolving f >= 0 around the
    x axis: integral of (pi_t / 2) * f^2."""
    dom = _resolve_domain(f, domain)
    _check_nonnegative(f, dom)
    splits = _interior_breakpoints(f, dom)

    def integrand(x: float) -> float:
        fx = float(f.evaluate(x))
        return 0.5 * PI_T * fx * fx

    return integrate(integrand, dom, splits, cfg).value

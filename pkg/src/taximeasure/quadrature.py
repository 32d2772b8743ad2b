"""Adaptive quadrature that tolerates |f'| kinks and endpoint singularities.

The base rule is adaptive Simpson with Richardson error correction.  The
domain is first cut at every mandatory split point (profile breakpoints plus
detected derivative sign changes), which restores smoothness inside each
piece.  The integrand is never evaluated exactly at the domain endpoints:
every cell endpoint sample is nudged one ulp into the open interval, and the
two outermost pieces are integrated by peeling geometrically shrinking cells
toward the endpoint.  Each tail finishes in one of two ways, whichever
validates first:

* a Gauss-Legendre rule on the remaining sliver, accepted when it agrees with
  its own two-halves refinement (smooth tails), or
* geometric-series extrapolation of the peeled cell sums, accepted when the
  extrapolated remainder is consistent between consecutive peels (power-law
  tails such as the inverse square root produced by Euclidean circle arcs).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import ConvergenceError, DomainError, IntegrandError
from .geometry import Interval

# 7-point Gauss-Legendre nodes/weights on [-1, 1]; exact through degree 13.
_GL7_X = (
    -0.9491079123427585, -0.7415311855993945, -0.4058451513773972, 0.0,
    0.4058451513773972, 0.7415311855993945, 0.9491079123427585,
)
_GL7_W = (
    0.1294849661688697, 0.2797053914892766, 0.3818300505051189,
    0.4179591836734694,
    0.3818300505051189, 0.2797053914892766, 0.1294849661688697,
)

# Geometric ratio estimates beyond this are treated as non-contracting.
_RHO_MAX = 0.95


@dataclass(frozen=True)
class QuadratureConfig:
    abs_tol: float = 1e-10
    rel_tol: float = 1e-9
    max_depth: int = 40
    kink_scan_points: int = 257
    max_evals: int = 500_000

    def __post_init__(self):
        if not (math.isfinite(self.abs_tol) and self.abs_tol > 0.0):
            raise DomainError(f"abs_tol must be > 0, got {self.abs_tol!r}")
        if not (math.isfinite(self.rel_tol) and self.rel_tol > 0.0):
            raise DomainError(f"rel_tol must be > 0, got {self.rel_tol!r}")
        if self.max_depth < 1:
            raise DomainError(f"max_depth must be >= 1, got {self.max_depth!r}")
        if self.kink_scan_points < 3:
            raise DomainError(f"kink_scan_points must be >= 3, got {self.kink_scan_points!r}")
        if self.max_evals < 100:
            raise DomainError(f"max_evals must be >= 100, got {self.max_evals!r}")


DEFAULT_CONFIG = QuadratureConfig()


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    subdivisions: int
    split_points: tuple[float, ...]


class _BudgetExceeded(Exception):
    pass


class _Run:
    """Per-integration state: the clamped sampler and the work counters."""

    __slots__ = ("g", "open_lo", "open_hi", "subdivisions", "evals_left")

    def __init__(self, g: Callable[[float], float], lo: float, hi: float,
                 max_evals: int):
        self.g = g
        self.open_lo = math.nextafter(lo, hi)
        self.open_hi = math.nextafter(hi, lo)
        self.subdivisions = 0
        self.evals_left = max_evals

    def sample(self, x: float) -> float:
        # Keep every abscissa strictly inside the open domain; rounding in the
        # tail arithmetic can otherwise land exactly on an endpoint.
        if x < self.open_lo:
            x = self.open_lo
        elif x > self.open_hi:
            x = self.open_hi
        self.evals_left -= 1
        if self.evals_left < 0:
            raise _BudgetExceeded
        v = float(self.g(x))
        if not math.isfinite(v):
            raise IntegrandError(x, v)
        return v


def _simpson_cell(run, lo: float, hi: float, tol: float, max_depth: int) -> tuple[float, float]:
    """Adaptive Simpson on [lo, hi] with endpoint samples nudged inward."""
    a = math.nextafter(lo, hi)
    b = math.nextafter(hi, lo)
    if not a < b:  # cell thinner than two ulps
        return (hi - lo) * run.sample(0.5 * (lo + hi)), 0.0
    m = 0.5 * (a + b)
    fa, fm, fb = run.sample(a), run.sample(m), run.sample(b)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)

    def rec(x0: float, x2: float, f0: float, f1: float, f2: float,
            est: float, tol_here: float, depth: int) -> tuple[float, float]:
        x1 = 0.5 * (x0 + x2)
        lm = 0.5 * (x0 + x1)
        rm = 0.5 * (x1 + x2)
        flm = run.sample(lm)
        frm = run.sample(rm)
        h6 = (x1 - x0) / 6.0
        left = h6 * (f0 + 4.0 * flm + f1)
        right = h6 * (f1 + 4.0 * frm + f2)
        delta = left + right - est
        if abs(delta) <= 15.0 * tol_here or depth >= max_depth:
            # Richardson: Simpson halving gains a factor 16, so delta/15
            # corrects the composite estimate to the next order.
            return left + right + delta / 15.0, abs(delta) / 15.0
        run.subdivisions += 1
        v1, e1 = rec(x0, x1, f0, flm, f1, left, 0.5 * tol_here, depth + 1)
        v2, e2 = rec(x1, x2, f1, frm, f2, right, 0.5 * tol_here, depth + 1)
        return v1 + v2, e1 + e2

    return rec(a, b, fa, fm, fb, whole, tol, 0)


def _gauss7(run, lo: float, hi: float) -> float:
    c = 0.5 * (lo + hi)
    h = 0.5 * (hi - lo)
    acc = 0.0
    for xi, wi in zip(_GL7_X, _GL7_W):
        acc += wi * run.sample(c + h * xi)
    return h * acc


class _FrameSampler:
    """Adapter exposing a tail frame s in [0, W] (suspect endpoint at s = W)
    as a run-like object for the Simpson and Gauss helpers.

    Plain frame: x = anchor + direction * s.  Substituted frame:
    x = suspect - direction * (W - s)^2 with the Jacobian 2(W - s) folded into
    the sample, which turns half-integer power singularities at the suspect
    endpoint into smooth integrands.
    """

    __slots__ = ("base", "anchor", "suspect", "direction", "W", "substituted")

    def __init__(self, base: _Run, anchor: float, suspect: float, W: float,
                 substituted: bool):
        self.base = base
        self.anchor = anchor
        self.suspect = suspect
        self.direction = 1.0 if suspect >= anchor else -1.0
        self.W = W
        self.substituted = substituted

    def sample(self, s: float) -> float:
        if self.substituted:
            t = self.W - s
            x = self.suspect - self.direction * t * t
            return 2.0 * t * self.base.sample(x)
        return self.base.sample(self.anchor + self.direction * s)

    @property
    def subdivisions(self) -> int:
        return self.base.subdivisions

    @subdivisions.setter
    def subdivisions(self, v: int) -> None:
        self.base.subdivisions = v


def _peel(frame: _FrameSampler, tol: float, max_depth: int,
          k_limit: int) -> tuple[float, float, bool]:
    """Peel geometrically shrinking cells toward the suspect frame end s = W.

    Returns (value, error, converged); on a False flag the value and error
    cover only the peeled cells, with the unresolved remainder folded into
    the error term.
    """
    W = frame.W
    total = 0.0
    err = 0.0
    cell_tol = tol / 8.0
    sums: list[float] = []
    rhat_prev: float | None = None
    s_edge = 0.0
    rem = W

    for _ in range(k_limit):
        rem *= 0.5
        s_next = W - rem
        if not s_next > s_edge:
            break  # cell width collapsed to the fp grid
        v, e = _simpson_cell(frame, s_edge, s_next, cell_tol, max_depth)
        total += v
        err += e
        sums.append(v)
        s_edge = s_next

        # Finisher 1: Gauss-Legendre on the remaining sliver, trusted when it
        # agrees with its own two-halves refinement.
        r1 = _gauss7(frame, s_edge, W)
        s_mid = W - 0.5 * rem
        r2 = _gauss7(frame, s_edge, s_mid) + _gauss7(frame, s_mid, W)
        gl_gap = abs(r1 - r2)
        if gl_gap <= 0.05 * tol:
            return total + r2, err + gl_gap, True

        # Finisher 2: geometric extrapolation of the peeled cell sums.  For a
        # pure power tail the cell sums are exactly geometric, and the drift
        # between consecutive extrapolations tracks the extrapolation bias.
        if len(sums) >= 3:
            s0, s1 = sums[-2], sums[-1]
            if abs(s0) > 1e-305:
                rho = s1 / s0
                if 0.0 < rho < _RHO_MAX:
                    rhat = s1 * rho / (1.0 - rho)
                    if rhat_prev is not None:
                        drift = abs(rhat - (rhat_prev - s1))
                        if drift <= 0.25 * tol:
                            return total + rhat, err + drift + abs(rhat) * 1e-12, True
                    rhat_prev = rhat
                else:
                    rhat_prev = None
            else:
                # Remaining mass is below representable scale; call it done.
                return total, err + abs(s1), True

    unresolved = abs(sums[-1]) if sums else abs(W)
    return total, err + unresolved, False


def _tail(run: _Run, lo: float, hi: float, tol: float, max_depth: int,
          toward_hi: bool) -> tuple[float, float]:
    """Integrate a piece whose lo (toward_hi=False) or hi (toward_hi=True)
    endpoint may be singular.

    First peels in the original coordinates, which finishes within a few cells
    for smooth or piecewise-polynomial integrands (and stays exact for them).
    If that does not validate quickly, the piece is redone under the
    substitution u = sqrt(|x - suspect endpoint|), whose Jacobian absorbs
    inverse-square-root singularities entirely.
    """
    width = hi - lo
    if width <= 0.0:
        return 0.0, 0.0
    anchor, suspect = (lo, hi) if toward_hi else (hi, lo)

    plain = _FrameSampler(run, anchor, suspect, width, substituted=False)
    value, err, ok = _peel(plain, tol, max_depth, k_limit=8)
    if ok:
        return value, err

    substituted = _FrameSampler(run, anchor, suspect, math.sqrt(width), substituted=True)
    value, err, ok = _peel(substituted, tol, max_depth, k_limit=max(80, 2 * max_depth))
    if ok:
        return value, err

    raise ConvergenceError(
        f"tail refinement toward {'hi' if toward_hi else 'lo'} did not converge",
        value=value, error_estimate=err)


def _clean_splits(lo: float, hi: float, splits: Iterable[float]) -> list[float]:
    width = hi - lo
    eps = 1e-13 * width
    cleaned: list[float] = []
    for s in sorted(float(s) for s in splits):
        if not (lo <= s <= hi):
            raise DomainError(f"split point {s} lies outside [{lo}, {hi}]")
        if s - lo <= eps or hi - s <= eps:
            continue
        if cleaned and s - cleaned[-1] <= eps:
            continue
        cleaned.append(s)
    return cleaned


def integrate(g: Callable[[float], float], domain: Interval,
              mandatory_splits: Sequence[float] = (),
              cfg: QuadratureConfig = DEFAULT_CONFIG) -> QuadratureResult:
    """Integrate g over the interval, never sampling its endpoints.

    mandatory_splits are forced cell boundaries; pass every known breakpoint
    of the integrand.  Raises IntegrandError on a non-finite sample and
    ConvergenceError when the error estimate cannot be brought below
    max(abs_tol, rel_tol * |value|).
    """
    lo, hi = domain.lo, domain.hi
    if hi == lo:
        return QuadratureResult(0.0, 0.0, 0, ())
    splits = _clean_splits(lo, hi, mandatory_splits)
    pts = [lo, *splits, hi]
    if len(pts) == 2:
        # Both endpoints are open: cut at the midpoint so each piece has one
        # closed side for the tail peeling to anchor on.
        pts = [lo, 0.5 * (lo + hi), hi]

    run = _Run(g, lo, hi, cfg.max_evals)
    n_pieces = len(pts) - 1
    piece_tol = cfg.abs_tol / (2.0 * n_pieces)

    value = 0.0
    err = 0.0
    failure = False
    for i in range(n_pieces):
        a, b = pts[i], pts[i + 1]
        try:
            if i == n_pieces - 1:
                v, e = _tail(run, a, b, piece_tol, cfg.max_depth, toward_hi=True)
            elif i == 0:
                v, e = _tail(run, a, b, piece_tol, cfg.max_depth, toward_hi=False)
            else:
                v, e = _simpson_cell(run, a, b, piece_tol, cfg.max_depth)
        except ConvergenceError as exc:
            v, e = exc.value, exc.error_estimate
            failure = True
        except _BudgetExceeded:
            raise ConvergenceError(
                f"quadrature exhausted its evaluation budget ({cfg.max_evals} samples)",
                value=value, error_estimate=math.inf) from None
        value += v
        err += e

    if failure or err > max(cfg.abs_tol, cfg.rel_tol * abs(value)):
        raise ConvergenceError("quadrature did not reach the requested tolerance",
                               value=value, error_estimate=err)
    return QuadratureResult(value, err, run.subdivisions, tuple(splits))


def detect_sign_changes(g: Callable[[float], float], domain: Interval,
                        n_scan: int = DEFAULT_CONFIG.kink_scan_points) -> list[float]:
    """Locate sign changes of g by scanning a uniform midpoint grid (which never
    touches the domain endpoints) and bisecting each bracketing pair down to
    1e-13 of the domain width.  Returns the refined abscissas, sorted.
    """
    if n_scan < 3:
        raise DomainError(f"n_scan must be >= 3, got {n_scan}")
    lo, hi = domain.lo, domain.hi
    width = hi - lo
    if width <= 0.0:
        return []
    step = width / n_scan
    xs = [lo + (i + 0.5) * step for i in range(n_scan)]

    def sign_at(x: float) -> int:
        v = float(g(x))
        if math.isnan(v):
            raise IntegrandError(x, v)
        return (v > 0.0) - (v < 0.0)

    found: list[float] = []
    target = 1e-13 * width
    prev_x = xs[0]
    prev_s = sign_at(prev_x)
    if prev_s == 0:
        found.append(prev_x)
    for x in xs[1:]:
        s = sign_at(x)
        if s == 0:
            found.append(x)
        elif prev_s != 0 and s != prev_s:
            a, b, sa = prev_x, x, prev_s
            while b - a > target:
                m = 0.5 * (a + b)
                sm = sign_at(m)
                if sm == 0:
                    a = b = m
                    break
                if sm == sa:
                    a = m
                else:
                    b = m
            found.append(0.5 * (a + b))
        if s != 0:
            prev_x, prev_s = x, s
        else:
            prev_x = x

    found.sort()
    deduped: list[float] = []
    for x in found:
        if not deduped or x - deduped[-1] > 1e-13 * width:
            deduped.append(x)
    return deduped

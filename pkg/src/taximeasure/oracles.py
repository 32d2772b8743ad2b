"""Brute-force discretization oracles, independent of the quadrature engine.

Each oracle partitions the domain uniformly, augments the partition with the
profile's declared breakpoints, and sums an elementary closed-form piece per
cell:

    polyline  dx + |df|                                  (taxicab chord length)
    frustum   4 (f0 + f1)(dx + |df|) sqrt(dx^2 + df^2/2) / sqrt(dx^2 + df^2)
    disk      2 f(mid)^2 dx

Because the pieces telescope, the polyline sum is exact on monotone spans at
any n, and the frustum sum is exact on linear spans; for smooth profiles both
converge as the partition refines.  None of this imports the quadrature
module, so the oracles stay a fully independent check on it.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np

from . import measures
from ._kernels import disk_sum, frustum_sum, polyline_sum
from .errors import DomainError
from .geometry import Interval
from .profiles import ProfileFunction
from .quadrature import DEFAULT_CONFIG, QuadratureConfig


class ConvergenceRow(NamedTuple):
    n: int
    oracle: float
    reference: float
    abs_error: float


def _resolve_domain(f: ProfileFunction, domain: Interval | None) -> Interval:
    if domain is None:
        return f.domain
    if not f.domain.covers(domain):
        raise DomainError(
            f"requested domain [{domain.lo}, {domain.hi}] is not contained in "
            f"the profile domain [{f.domain.lo}, {f.domain.hi}]")
    return domain


def _partition(f: ProfileFunction, domain: Interval, n: int) -> np.ndarray:
    if n < 1:
        raise DomainError(f"oracle needs n >= 1 cells, got {n}")
    xs = np.linspace(domain.lo, domain.hi, n + 1)
    inner = [b for b in f.breakpoints if domain.lo < b < domain.hi]
    if inner:
        xs = np.union1d(xs, np.asarray(inner, dtype=float))
    return xs


def _check_nonnegative(label: str, xs: np.ndarray, fx: np.ndarray) -> None:
    tol = -1e-12 * max(1.0, float(np.max(np.abs(fx))))
    worst = int(np.argmin(fx))
    if fx[worst] < tol:
        raise DomainError(
            f"{label} needs a nonnegative profile: f({xs[worst]!r}) = {fx[worst]!r}")


def polyline_arclength_oracle(f: ProfileFunction, domain: Interval | None = None,
                              n: int = 1000) -> float:
    """Sum of taxicab chord lengths over the breakpoint-augmented partition."""
    dom = _resolve_domain(f, domain)
    xs = _partition(f, dom, n)
    fx = np.ascontiguousarray(f.evaluate(xs), dtype=float)
    return float(polyline_sum(xs, fx))


def frustum_surface_oracle(f: ProfileFunction, domain: Interval | None = None,
                           n: int = 1000) -> float:
    """Sum of taxicab frustum lateral surfaces over the augmented partition."""
    dom = _resolve_domain(f, domain)
    xs = _partition(f, dom, n)
    fx = np.ascontiguousarray(f.evaluate(xs), dtype=float)
    _check_nonnegative("frustum_surface_oracle", xs, fx)
    return float(frustum_sum(xs, fx))


def disk_volume_oracle(f: ProfileFunction, domain: Interval | None = None,
                       n: int = 1000) -> float:
    """Midpoint-rule sum of taxicab disk volumes over the augmented partition."""
    dom = _resolve_domain(f, domain)
    xs = _partition(f, dom, n)
    mids = 0.5 * (xs[:-1] + xs[1:])
    fm = np.ascontiguousarray(f.evaluate(mids), dtype=float)
    _check_nonnegative("disk_volume_oracle", mids, fm)
    return float(disk_sum(xs, fm))


_ORACLES = {
    "arclength": polyline_arclength_oracle,
    "surface": frustum_surface_oracle,
    "volume": disk_volume_oracle,
}


def convergence_table(kind: str, f: ProfileFunction, domain: Interval | None = None,
                      ns: Sequence[int] = (), cfg: QuadratureConfig = DEFAULT_CONFIG,
                      ) -> list[ConvergenceRow]:
    """Oracle values against the quadrature reference for each n in ns.

    The reference is computed once; ns must be non-empty and strictly
    increasing.
    """
    if kind not in _ORACLES:
        raise DomainError(f"kind must be one of {sorted(_ORACLES)}, got {kind!r}")
    ns = [int(n) for n in ns]
    if not ns:
        raise DomainError("ns must not be empty")
    if any(n2 <= n1 for n1, n2 in zip(ns, ns[1:])):
        raise DomainError(f"ns must be strictly increasing, got {ns}")
    if ns[0] < 1:
        raise DomainError(f"oracle needs n >= 1 cells, got {ns[0]}")

    reference_fn = {
        "arclength": measures.arclength_functional,
        "surface": measures.surface_of_revolution,
        "volume": measures.volume_of_revolution,
    }[kind]
    reference = reference_fn(f, domain, cfg)
    oracle_fn = _ORACLES[kind]
    rows = []
    for n in ns:
        val = oracle_fn(f, domain, n)
        rows.append(ConvergenceRow(n, val, reference, abs(val - reference)))
    return rows

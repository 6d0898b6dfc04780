"""Foundation numerics: adaptive complex-valued quadrature, Fresnel
integrals, and Richardson-extrapolated numerical differentiation.

The quadrature is an adaptive Gauss-Kronrod 7-15 scheme with interval
bisection driven by a worst-interval-first heap.  The Kronrod nodes are
strictly interior, so integrable endpoint singularities are never
sampled exactly; bisection refines geometrically toward them.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Tuple

import numpy as np
from scipy import special

from .errors import NonFiniteIntegrand, ToleranceNotReached, UnstableEstimate

__all__ = [
    "QuadratureConfig",
    "QuadratureResult",
    "DEFAULT_QUADRATURE",
    "integrate_planar",
    "fresnel",
    "derivative",
    "derivative_with_error",
]

# Gauss 7 / Kronrod 15 abscissae and weights (positive half, QUADPACK).
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

# full 15-point node vector on [-1, 1]
_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
_WK_FULL = np.concatenate([_WGK[:-1], _WGK[::-1]])
# Gauss nodes sit at every odd Kronrod index.
_WG_FULL = np.zeros(15)
_WG_FULL[1:14:2] = np.concatenate([_WG[:-1], _WG[::-1]])


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances and subdivision budget of the adaptive scheme."""

    abs_tol: float = 1e-12
    rel_tol: float = 1e-12
    max_subdivisions: int = 2000

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise ValueError("tolerances must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")


DEFAULT_QUADRATURE = QuadratureConfig()


@dataclass(frozen=True)
class QuadratureResult:
    """Integral value with an error bound estimate."""

    value: complex
    error_estimate: float
    subdivisions_used: int


def _as_complex(v) -> complex:
    if isinstance(v, complex):
        return v
    if isinstance(v, (int, float, np.floating)):
        return complex(v)
    # (x, y) pair, e.g. a PlanePoint
    x, y = v
    return complex(x, y)


def _gk15(f: Callable[[float], complex], a: float, b: float):
    """One Gauss-Kronrod 7-15 panel.  Returns (integral, error)."""
    h = 0.5 * (b - a)
    c = 0.5 * (a + b)
    fv = np.array([_as_complex(f(c + h * x)) for x in _NODES])
    if not np.all(np.isfinite(fv)):
        raise NonFiniteIntegrand(
            f"integrand returned a non-finite value inside [{a}, {b}]")
    resk = h * np.sum(_WK_FULL * fv)
    resg = h * np.sum(_WG_FULL * fv)
    resabs = abs(h) * np.sum(_WK_FULL * np.abs(fv))
    mean = resk / (b - a)
    resasc = abs(h) * np.sum(_WK_FULL * np.abs(fv - mean))
    err = abs(resk - resg)
    if resasc != 0.0 and err != 0.0:
        err = resasc * min(1.0, (200.0 * err / resasc) ** 1.5)
    # round-off floor
    err = max(err, 50.0 * np.finfo(float).eps * resabs)
    return complex(resk), float(err), float(resabs)


def integrate_planar(f: Callable[[float], complex], a: float, b: float,
                     cfg: QuadratureConfig = DEFAULT_QUADRATURE) -> QuadratureResult:
    """Integrate a complex-valued (planar) function over [a, b].

    ``f`` may return a complex number or an (x, y) pair.  Raises
    ToleranceNotReached when the subdivision budget is exhausted and
    NonFiniteIntegrand when f evaluates to NaN/inf at an interior node.
    """
    if a > b:
        raise ValueError("integrate_planar requires a <= b")
    if a == b:
        return QuadratureResult(0j, 0.0, 0)

    val, err, resabs = _gk15(f, a, b)
    heap = [(-err, a, b, val, err, resabs)]
    total_val, total_err, total_abs = val, err, resabs
    used = 1

    def target():
        # do not demand accuracy below the round-off level of the sum
        floor = 100.0 * np.finfo(float).eps * total_abs
        return max(cfg.abs_tol, cfg.rel_tol * abs(total_val), floor)

    while total_err > target():
        if used >= cfg.max_subdivisions:
            raise ToleranceNotReached(
                f"error estimate {total_err:.3e} after {used} subdivisions "
                f"(target {target():.3e})")
        _, lo, hi, v_old, e_old, a_old = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            # interval no longer splittable at double precision
            heapq.heappush(heap, (0.0, lo, hi, v_old, e_old, a_old))
            break
        v1, e1, a1 = _gk15(f, lo, mid)
        v2, e2, a2 = _gk15(f, mid, hi)
        total_val += v1 + v2 - v_old
        total_err += e1 + e2 - e_old
        total_abs += a1 + a2 - a_old
        heapq.heappush(heap, (-e1, lo, mid, v1, e1, a1))
        heapq.heappush(heap, (-e2, mid, hi, v2, e2, a2))
        used += 1
    # recompute the totals from the heap to shed cancellation drift
    total_val = sum(item[3] for item in heap)
    total_err = sum(item[4] for item in heap)
    return QuadratureResult(total_val, total_err, used)


def fresnel(x: float) -> Tuple[float, float]:
    """Fresnel integrals (C(x), S(x)) in the pi/2 convention:
    C(x) = int_0^x cos(pi u^2 / 2) du,  S(x) = int_0^x sin(pi u^2 / 2) du.
    """
    s, c = special.fresnel(x)
    return float(c), float(s)


_CENTRAL = {
    # order: (offsets, coefficients, power of h in the denominator)
    1: ((-1, 1), (-0.5, 0.5), 1),
    2: ((-1, 0, 1), (1.0, -2.0, 1.0), 2),
    3: ((-2, -1, 1, 2), (-0.5, 1.0, -1.0, 0.5), 3),
}


def derivative_with_error(f: Callable[[float], float], t: float, order: int = 1,
                          h0: float = 0.1) -> Tuple[float, float]:
    """Central-difference derivative of the given order (1..3) with
    Richardson extrapolation over halved steps.  Returns (value, error
    estimate).  Raises UnstableEstimate when the tableau never settles.
    """
    if order not in _CENTRAL:
        raise ValueError("order must be 1, 2 or 3")
    if not h0 > 0:
        raise ValueError("h0 must be positive")
    offsets, coeffs, hpow = _CENTRAL[order]

    def stencil(h):
        return sum(c * f(t + k * h) for k, c in zip(offsets, coeffs)) / h ** hpow

    max_rows = 12
    tableau = []
    best, best_err = None, math.inf
    h = h0
    for i in range(max_rows):
        row = [stencil(h)]
        for j in range(1, i + 1):
            fac = 4.0 ** j
            row.append((fac * row[j - 1] - tableau[i - 1][j - 1]) / (fac - 1.0))
        if i > 0:
            err = abs(row[-1] - tableau[i - 1][-1]) + abs(row[-1] - row[-2])
            if math.isfinite(row[-1]) and err < best_err:
                best, best_err = row[-1], err
            elif best is not None and err > 64.0 * best_err:
                # round-off has taken over; the best entry is final
                break
        tableau.append(row)
        h *= 0.5
    if best is None or not math.isfinite(best):
        raise UnstableEstimate("extrapolated derivative did not converge")
    return best, best_err


def derivative(f: Callable[[float], float], t: float, order: int = 1,
               h0: float = 0.1) -> float:
    """Richardson-extrapolated central-difference derivative (order 1..3)."""
    return derivative_with_error(f, t, order, h0)[0]

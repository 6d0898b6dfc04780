"""The log-aesthetic curve model.

A curve is determined by a shape parameter ``alpha`` (finite, or +-inf
for the circle limit) and a scale ``lam`` >= 0 (``lam`` = 0 also gives
the circle of unit radius).  The natural parameter is the tangential
angle ``theta``; curve points are definite integrals of
``rho(psi) * exp(i psi)`` starting from the origin, where the radius of
curvature ``rho`` is an exponential (``alpha`` = 1) or power function of
``theta``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import OutOfDomain
from .export import Polyline
from .numerics import (DEFAULT_QUADRATURE, QuadratureConfig, fresnel,
                       integrate_planar)

__all__ = [
    "PlanePoint", "CurveParams", "ThetaDomain", "ArcDomain",
    "theta_bounds", "arc_bounds", "rho_of_theta", "rho_of_s",
    "rho_derivatives", "theta_of_s", "s_of_theta", "integrand",
    "point_of_theta", "point_of_s", "point_derivative",
    "closed_form_point", "evolute_point", "evolute_derivative",
    "sample_curve", "LogAestheticCurve",
]

# exclusive-bound guard: reject evaluation this close to a domain edge
_EDGE_GUARD = 1e-9


class PlanePoint(NamedTuple):
    """A point (or vector) of the Euclidean plane."""

    x: float
    y: float

    @staticmethod
    def from_complex(z: complex) -> "PlanePoint":
        return PlanePoint(z.real, z.imag)

    def to_complex(self) -> complex:
        return complex(self.x, self.y)


@dataclass(frozen=True)
class CurveParams:
    """Shape parameter alpha and scale lam of one log-aesthetic curve.

    ``alpha = +-inf`` or ``lam = 0`` select the unit-circle limit
    (constant radius of curvature 1).
    """

    alpha: float
    lam: float = 1.0

    def __post_init__(self):
        if math.isnan(self.alpha) or math.isnan(self.lam):
            raise ValueError("parameters must not be NaN")
        if self.lam < 0:
            raise ValueError("lam must be >= 0")
        if math.isinf(self.lam):
            raise ValueError("lam must be finite")

    @property
    def is_circle(self) -> bool:
        return self.lam == 0.0 or math.isinf(self.alpha)


@dataclass(frozen=True)
class ThetaDomain:
    """Open tangential-angle interval; missing bound means unbounded."""

    lower: Optional[float] = None
    upper: Optional[float] = None

    def __post_init__(self):
        if self.lower is not None and self.upper is not None \
                and not self.lower < self.upper:
            raise ValueError("lower must be < upper")

    def _guard(self, bound: float) -> float:
        return _EDGE_GUARD * max(1.0, abs(bound))

    def contains(self, theta: float) -> bool:
        """True when theta is strictly interior, away from the edges."""
        if not math.isfinite(theta):
            return False
        if self.lower is not None and theta < self.lower + self._guard(self.lower):
            return False
        if self.upper is not None and theta > self.upper - self._guard(self.upper):
            return False
        return True

    def require(self, theta: float, what: str = "theta") -> None:
        if not self.contains(theta):
            raise OutOfDomain(f"{what}={theta} outside open domain "
                              f"({self.lower}, {self.upper})")

    def clip(self, lo: float, hi: float):
        """Intersect [lo, hi] with the guarded open interval."""
        if self.lower is not None:
            lo = max(lo, self.lower + self._guard(self.lower))
        if self.upper is not None:
            hi = min(hi, self.upper - self._guard(self.upper))
        return lo, hi


class ArcDomain(ThetaDomain):
    """Open arc-length interval; same semantics as ThetaDomain."""


def theta_bounds(params: CurveParams) -> ThetaDomain:
    """Admissible open interval of the tangential angle."""
    if params.is_circle or params.alpha == 1.0:
        return ThetaDomain()
    bound = 1.0 / (params.lam * (1.0 - params.alpha))
    if params.alpha < 1.0:
        return ThetaDomain(upper=bound)
    return ThetaDomain(lower=bound)


def arc_bounds(params: CurveParams) -> ArcDomain:
    """Admissible open interval of the arc length."""
    if params.is_circle or params.alpha == 0.0:
        return ArcDomain()
    bound = -1.0 / (params.lam * params.alpha)
    if params.alpha < 0.0:
        return ArcDomain(upper=bound)
    return ArcDomain(lower=bound)


def _rho_unchecked(params: CurveParams, theta: float) -> float:
    if params.is_circle:
        return 1.0
    a, lam = params.alpha, params.lam
    if a == 1.0:
        return math.exp(lam * theta)
    return ((a - 1.0) * lam * theta + 1.0) ** (1.0 / (a - 1.0))


def rho_of_theta(params: CurveParams, theta: float) -> float:
    """Radius of curvature as a function of the tangential angle."""
    theta_bounds(params).require(theta)
    return _rho_unchecked(params, theta)


def rho_derivatives(params: CurveParams, theta: float):
    """(rho, rho', rho'', rho''') at theta, all closed-form.

    Uses rho' = lam * rho**(2 - alpha) and its chain-rule consequences.
    """
    theta_bounds(params).require(theta)
    if params.is_circle:
        return 1.0, 0.0, 0.0, 0.0
    a, lam = params.alpha, params.lam
    rho = _rho_unchecked(params, theta)
    d1 = lam * rho ** (2.0 - a)
    d2 = lam * lam * (2.0 - a) * rho ** (3.0 - 2.0 * a)
    d3 = lam ** 3 * (2.0 - a) * (3.0 - 2.0 * a) * rho ** (4.0 - 3.0 * a)
    return rho, d1, d2, d3


def rho_of_s(params: CurveParams, s: float) -> float:
    """Radius of curvature as a function of arc length."""
    arc_bounds(params).require(s, "s")
    if params.is_circle:
        return 1.0
    a, lam = params.alpha, params.lam
    if a == 0.0:
        return math.exp(lam * s)
    return (lam * a * s + 1.0) ** (1.0 / a)


def theta_of_s(params: CurveParams, s: float) -> float:
    """Tangential angle at arc length s."""
    arc_bounds(params).require(s, "s")
    if params.is_circle:
        return s
    a, lam = params.alpha, params.lam
    if a == 0.0:
        return (1.0 - math.exp(-lam * s)) / lam
    if a == 1.0:
        return math.log(lam * s + 1.0) / lam
    return ((lam * a * s + 1.0) ** (1.0 - 1.0 / a) - 1.0) / (lam * (a - 1.0))


def s_of_theta(params: CurveParams, theta: float) -> float:
    """Arc length at tangential angle theta (branch-wise exact inverse)."""
    theta_bounds(params).require(theta)
    if params.is_circle:
        return theta
    a, lam = params.alpha, params.lam
    if a == 0.0:
        return -math.log(1.0 - lam * theta) / lam
    if a == 1.0:
        return math.expm1(lam * theta) / lam
    return ((lam * (a - 1.0) * theta + 1.0) ** (a / (a - 1.0)) - 1.0) / (lam * a)


def _integrand_unchecked(params: CurveParams, psi: float) -> complex:
    return _rho_unchecked(params, psi) * cmath.exp(1j * psi)


def integrand(params: CurveParams, psi: float) -> PlanePoint:
    """The vector under the curve integral: rho(psi) * (cos psi, sin psi)."""
    theta_bounds(params).require(psi, "psi")
    return PlanePoint.from_complex(_integrand_unchecked(params, psi))


def _point_c(params: CurveParams, theta: float,
             cfg: QuadratureConfig) -> complex:
    dom = theta_bounds(params)
    dom.require(0.0, "theta=0 (integration origin)")
    dom.require(theta)
    if theta == 0.0:
        return 0j
    lo, hi = (0.0, theta) if theta > 0 else (theta, 0.0)
    res = integrate_planar(lambda p: _integrand_unchecked(params, p),
                           lo, hi, cfg)
    return res.value if theta > 0 else -res.value


def point_of_theta(params: CurveParams, theta: float,
                   cfg: QuadratureConfig = DEFAULT_QUADRATURE) -> PlanePoint:
    """Curve point at tangential angle theta (adaptive quadrature)."""
    return PlanePoint.from_complex(_point_c(params, theta, cfg))


def point_of_s(params: CurveParams, s: float,
               cfg: QuadratureConfig = DEFAULT_QUADRATURE) -> PlanePoint:
    """Curve point at arc length s, integrating the unit tangent
    exp(i * theta(u)) directly in the arc-length parametrization."""
    arc_bounds(params).require(s, "s")
    if s == 0.0:
        return PlanePoint(0.0, 0.0)

    def tangent(u: float) -> complex:
        return cmath.exp(1j * theta_of_s(params, u))

    lo, hi = (0.0, s) if s > 0 else (s, 0.0)
    res = integrate_planar(tangent, lo, hi, cfg)
    z = res.value if s > 0 else -res.value
    return PlanePoint.from_complex(z)


def _derivative_c(params: CurveParams, theta: float, order: int) -> complex:
    rho, d1, d2, _ = rho_derivatives(params, theta)
    e = cmath.exp(1j * theta)
    if order == 1:
        return rho * e
    if order == 2:
        return (d1 + 1j * rho) * e
    if order == 3:
        return (d2 + 2j * d1 - rho) * e
    raise ValueError("order must be 1, 2 or 3")


def point_derivative(params: CurveParams, theta: float,
                     order: int = 1) -> PlanePoint:
    """Closed-form derivative of the curve point with respect to theta
    (order 1..3); no quadrature involved."""
    return PlanePoint.from_complex(_derivative_c(params, theta, order))


def _closed_form_c(params: CurveParams, theta: float) -> Optional[complex]:
    if params.is_circle:
        # unit circle about (0, 1)
        return -1j * (cmath.exp(1j * theta) - 1.0)
    a, lam = params.alpha, params.lam
    if a == 1.0:
        # integrand e^{lam psi} e^{i psi} = e^{(lam + i) psi}
        k = complex(lam, 1.0)
        return (cmath.exp(k * theta) - 1.0) / k
    if a == 2.0:
        # integration by parts of (lam*psi + 1) e^{i psi}
        def anti(psi):
            return cmath.exp(1j * psi) * (-1j * (lam * psi + 1.0) + lam)
        return anti(theta) - anti(0.0)
    if a == -1.0:
        # rho = (1 - 2 lam psi)^(-1/2); substitute 1 - 2 lam psi = u^2 and
        # rescale to the pi/2 Fresnel convention
        scale = math.sqrt(math.pi * lam)

        def anti(u):
            c, s = fresnel(u / scale)
            return scale * complex(c, -s)
        u_theta = math.sqrt(1.0 - 2.0 * lam * theta)
        pref = cmath.exp(0.5j / lam) / lam
        return pref * (anti(1.0) - anti(u_theta))
    return None


def closed_form_point(params: CurveParams,
                      theta: float) -> Optional[PlanePoint]:
    """Quadrature-free curve point for the special shapes
    alpha in {1, 2, -1, +-inf}; None for other parameters."""
    theta_bounds(params).require(theta)
    z = _closed_form_c(params, theta)
    return None if z is None else PlanePoint.from_complex(z)


def evolute_point(params: CurveParams, theta: float,
                  cfg: QuadratureConfig = DEFAULT_QUADRATURE) -> PlanePoint:
    """Center of curvature P(theta) + rho(theta) * n(theta)."""
    rho = rho_of_theta(params, theta)
    z = _point_c(params, theta, cfg) + 1j * rho * cmath.exp(1j * theta)
    return PlanePoint.from_complex(z)


def evolute_derivative(params: CurveParams, theta: float,
                       order: int = 1) -> PlanePoint:
    """Closed-form derivative of the evolute (order 1..3)."""
    _, d1, d2, d3 = rho_derivatives(params, theta)
    e = cmath.exp(1j * theta)
    if order == 1:
        z = 1j * d1 * e
    elif order == 2:
        z = 1j * (d2 + 1j * d1) * e
    elif order == 3:
        z = 1j * (d3 + 2j * d2 - d1) * e
    else:
        raise ValueError("order must be 1, 2 or 3")
    return PlanePoint.from_complex(z)


def sample_curve(params: CurveParams, theta_from: float, theta_to: float,
                 n: int, cfg: QuadratureConfig = DEFAULT_QUADRATURE,
                 label: str = "") -> Polyline:
    """n curve points at uniform theta spacing, computed incrementally
    (one short quadrature per consecutive segment)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    dom = theta_bounds(params)
    dom.require(theta_from, "theta_from")
    dom.require(theta_to, "theta_to")
    thetas = [theta_from + (theta_to - theta_from) * k / (n - 1)
              for k in range(n)]
    z = _point_c(params, theta_from, cfg)
    pts = [PlanePoint.from_complex(z)]
    f = lambda p: _integrand_unchecked(params, p)
    for a, b in zip(thetas, thetas[1:]):
        if a == b:
            pts.append(pts[-1])
            continue
        lo, hi = (a, b) if b > a else (b, a)
        seg = integrate_planar(f, lo, hi, cfg).value
        z += seg if b > a else -seg
        pts.append(PlanePoint.from_complex(z))
    return Polyline(tuple(thetas), tuple(pts), label)


class LogAestheticCurve:
    """Tangential-angle-parametrized view of one log-aesthetic curve.

    Implements the generic curve capability the isoptic machinery
    consumes: point, integrand (first derivative), domain, and
    closed-form derivatives up to order 3.  Immutable after creation.
    """

    def __init__(self, params: CurveParams,
                 cfg: QuadratureConfig = DEFAULT_QUADRATURE):
        self.params = params
        self.cfg = cfg
        self._domain = theta_bounds(params)

    def theta_domain(self) -> ThetaDomain:
        return self._domain

    def point(self, theta: float) -> PlanePoint:
        return point_of_theta(self.params, theta, self.cfg)

    def integrand(self, theta: float) -> PlanePoint:
        return integrand(self.params, theta)

    def derivative(self, theta: float, order: int = 1) -> PlanePoint:
        return point_derivative(self.params, theta, order)

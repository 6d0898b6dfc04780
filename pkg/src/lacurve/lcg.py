"""Logarithmic curvature graphs (LCG) and slope analysis.

An LCG point of a curve is (log rho, log(rho * ds/drho)); for a
log-aesthetic curve the graph is a straight line whose slope is the
shape parameter alpha.  The same graph computed for the curve's isoptic
or evolute decides the autoisoptic / autoevolute questions: secant
slopes of the isoptic LCG drift away from alpha except in the
logarithmic-spiral (alpha = 1) and circle cases, while the evolute LCG
slope is the constant -1/(alpha - 2).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, List, NamedTuple, Sequence, Tuple

from .errors import (DegenerateSecant, NoLcg, OutOfDomain, SingularTarget,
                     StationaryCurvature, ZeroSpeed)
from .isoptic import _chord_c, _isoptic_jet, isoptic_domain
from .lac import (CurveParams, LogAestheticCurve, evolute_derivative,
                  theta_bounds)
from .numerics import DEFAULT_QUADRATURE, QuadratureConfig

__all__ = [
    "LcgPoint", "SlopeEstimate", "AutoisopticReport",
    "lcg_point_lac", "lcg_point_parametric", "lcg_isoptic_alpha1_closed",
    "isoptic_lcg_point", "slope_estimate", "alpha_hat_isoptic",
    "autoisoptic_report", "autoevolute_check", "chord_angle_diagnostic",
    "branch_for",
]

FORWARD = "forward"
BACKWARD = "backward"

AUTOISOPTIC = "autoisoptic"
NOT_AUTOISOPTIC = "not_autoisoptic"
INCONCLUSIVE = "inconclusive"

# offset used when a published theta sits exactly on a domain bound
_BOUND_OFFSET = 1e-7


class LcgPoint(NamedTuple):
    """One LCG point: x = log rho, y = log(rho * ds/drho)."""

    x: float
    y: float


@dataclass(frozen=True)
class SlopeEstimate:
    """Finite-secant LCG slope estimate at theta with step phi."""

    theta: float
    phi: float
    value: float
    branch: str


@dataclass(frozen=True)
class AutoisopticReport:
    """Slope samples of an isoptic LCG and the resulting verdict."""

    params: CurveParams
    delta: float
    samples: Tuple[SlopeEstimate, ...]
    limit_estimate: float
    verdict: str


def branch_for(alpha: float) -> str:
    """Domain-respecting secant direction: backward below alpha = 1."""
    return BACKWARD if alpha < 1.0 else FORWARD


def lcg_point_lac(params: CurveParams, theta: float) -> LcgPoint:
    """Closed-form LCG point of the base log-aesthetic curve."""
    if params.is_circle:
        raise NoLcg("constant radius of curvature: the LCG is undefined")
    theta_bounds(params).require(theta)
    a, lam = params.alpha, params.lam
    if a == 1.0:
        x = lam * theta
        return LcgPoint(x, x - math.log(lam))
    x = math.log((a - 1.0) * lam * theta + 1.0) / (a - 1.0)
    return LcgPoint(x, a * x - math.log(lam))


def lcg_point_parametric(curve_derivatives: Callable[[float], Sequence],
                         theta: float) -> LcgPoint:
    """LCG point of an arbitrary plane curve from its derivatives.

    ``curve_derivatives(theta)`` must return the first three derivative
    vectors (PlanePoints or complex numbers).  rho is |r'|^3 / (r' x r''),
    the arc-length rate is |r'|, and d rho / d theta comes from the
    quotient rule on those ingredients.
    """
    d1, d2, d3 = (_to_c(v) for v in curve_derivatives(theta))
    speed = abs(d1)
    if speed < 1e-300:
        raise ZeroSpeed(f"|r'({theta})| = 0")
    cross12 = (d1.conjugate() * d2).imag
    if cross12 == 0.0:
        raise StationaryCurvature(f"r' x r'' = 0 at theta={theta}")
    rho = speed ** 3 / cross12
    speed_dot = (d1.conjugate() * d2).real / speed
    cross12_dot = (d1.conjugate() * d3).imag
    rho_dot = (3.0 * speed ** 2 * speed_dot * cross12
               - speed ** 3 * cross12_dot) / cross12 ** 2
    if rho_dot == 0.0 or not math.isfinite(rho_dot):
        raise StationaryCurvature(f"d rho/d theta = {rho_dot} at theta={theta}")
    return LcgPoint(math.log(abs(rho)),
                    math.log(abs(rho) * speed / abs(rho_dot)))


def _to_c(v) -> complex:
    if isinstance(v, complex):
        return v
    return complex(v[0], v[1])


def lcg_isoptic_alpha1_closed(lam: float, delta: float,
                              theta: float) -> LcgPoint:
    """Exact LCG of the isoptic of the logarithmic spiral (alpha = 1)."""
    if not lam > 0:
        raise ValueError("lam must be positive")
    q = (math.exp(2.0 * delta * lam) - 2.0 * math.exp(delta * lam)
         * math.cos(delta) + 1.0) / (lam * lam + 1.0)
    csc = 1.0 / math.sin(delta)
    x = 0.5 * math.log(q) + math.log(csc) + theta * lam
    y = math.log(csc * math.sqrt(q) / lam) + theta * lam
    return LcgPoint(x, y)


def isoptic_lcg_point(params: CurveParams, delta: float, theta: float,
                      cfg: QuadratureConfig = DEFAULT_QUADRATURE) -> LcgPoint:
    """LCG point of the isoptic of a log-aesthetic curve, computed through
    the parametric pipeline (analytic isoptic derivatives)."""
    curve = LogAestheticCurve(params, cfg)
    isoptic_domain(curve, delta).require(theta)

    def derivs(th: float):
        jet = _isoptic_jet(curve, th, delta, cfg, with_point=False)
        return jet[1], jet[2], jet[3]

    return lcg_point_parametric(derivs, theta)


def slope_estimate(lcg: Callable[[float], LcgPoint], theta: float, phi: float,
                   branch: str) -> SlopeEstimate:
    """Secant slope of an LCG between theta and theta +- phi."""
    if phi == 0.0:
        raise ValueError("phi must be nonzero")
    if branch not in (FORWARD, BACKWARD):
        raise ValueError(f"unknown branch {branch!r}")
    other = theta + phi if branch == FORWARD else theta - phi
    p0 = lcg(theta)
    p1 = lcg(other)
    dx = p1.x - p0.x
    if abs(dx) < 1e-14:
        raise DegenerateSecant(f"LCG abscissae at {theta} and {other} coincide")
    return SlopeEstimate(theta, phi, (p1.y - p0.y) / dx, branch)


def alpha_hat_isoptic(params: CurveParams, delta: float, theta: float,
                      phi: float,
                      cfg: QuadratureConfig = DEFAULT_QUADRATURE) -> SlopeEstimate:
    """Secant slope of the isoptic LCG at theta with step phi.

    When theta sits on (or within the edge guard of) an isoptic domain
    bound, the slope is evaluated at one-sided interior offsets and
    extrapolated toward the bound.
    """
    if params.is_circle:
        raise NoLcg("circle-case isoptic has constant radius of curvature")
    curve = LogAestheticCurve(params, cfg)
    dom = isoptic_domain(curve, delta)
    branch = branch_for(params.alpha)
    lcg = lambda th: isoptic_lcg_point(params, delta, th, cfg)

    if dom.contains(theta):
        return slope_estimate(lcg, theta, phi, branch)

    # At a bound the interior limit of the slope may not exist: for
    # alpha < 1 the tangency angle theta + delta hits the curve bound
    # where rho diverges, and the isoptic LCG is singular there.  The
    # slope is therefore evaluated on a geometric grid of inward offsets
    # and read off where it is least sensitive to the offset (plateau /
    # minimal-sensitivity rule).  At a regular bound the plateau sits at
    # the smallest offsets and this reduces to the one-sided limit.
    if dom.lower is not None and abs(theta - dom.lower) <= 1e-6 * max(1.0, abs(dom.lower)):
        sgn = 1.0
    elif dom.upper is not None and abs(theta - dom.upper) <= 1e-6 * max(1.0, abs(dom.upper)):
        sgn = -1.0
    else:
        raise OutOfDomain(f"theta={theta} outside isoptic domain "
                          f"({dom.lower}, {dom.upper})")
    values = []
    eps = 0.4
    while eps > _BOUND_OFFSET:
        try:
            values.append(slope_estimate(lcg, theta + sgn * eps, phi,
                                         branch).value)
        except (StationaryCurvature, ZeroSpeed, DegenerateSecant):
            values.append(math.nan)
        eps *= 0.9
    best_val, best_diff = math.nan, math.inf
    for f1, f2 in zip(values, values[1:]):
        d = abs(f2 - f1)
        if math.isfinite(d) and d < best_diff:
            best_val, best_diff = f2, d
    if not math.isfinite(best_val):
        raise StationaryCurvature(
            f"isoptic LCG slope undefined near bound theta={theta}")
    return SlopeEstimate(theta, phi, best_val, branch)


def autoisoptic_report(params: CurveParams, delta: float,
                       thetas: Sequence[float], phi: float,
                       tol: float = 1e-4,
                       cfg: QuadratureConfig = DEFAULT_QUADRATURE
                       ) -> AutoisopticReport:
    """Estimate the isoptic LCG slope at each theta and judge whether the
    curve coincides with its isoptic (all slopes equal to alpha)."""
    samples = tuple(alpha_hat_isoptic(params, delta, th, phi, cfg)
                    for th in thetas)
    if not samples:
        return AutoisopticReport(params, delta, samples, math.nan, INCONCLUSIVE)
    ordered = sorted(samples, key=lambda s: abs(s.theta))
    last = ordered[-1]
    if len(ordered) >= 2 and ordered[-2].theta != 0.0 and last.theta != 0.0:
        # one Richardson step assuming alpha_hat ~ limit + c / theta
        prev = ordered[-2]
        limit = ((last.theta * last.value - prev.theta * prev.value)
                 / (last.theta - prev.theta))
    else:
        limit = last.value
    ok = all(abs(s.value - params.alpha) <= tol for s in samples)
    verdict = AUTOISOPTIC if ok else NOT_AUTOISOPTIC
    return AutoisopticReport(params, delta, samples, limit, verdict)


def autoevolute_check(params: CurveParams, thetas: Sequence[float],
                      phi: float) -> List[SlopeEstimate]:
    """LCG slope of the evolute at each theta.

    For a log-aesthetic curve with finite alpha != 2 this is the constant
    -1/(alpha - 2); alpha = 2 makes the evolute's target slope singular.
    """
    if params.is_circle:
        raise NoLcg("the evolute of the circle is a point")
    if params.alpha == 2.0:
        raise SingularTarget("evolute slope -1/(alpha-2) is singular at alpha=2")

    def derivs(th: float):
        return tuple(evolute_derivative(params, th, k) for k in (1, 2, 3))

    lcg = lambda th: lcg_point_parametric(derivs, th)
    branch = branch_for(params.alpha)
    return [slope_estimate(lcg, th, phi, branch) for th in thetas]


def chord_angle_diagnostic(params: CurveParams, delta: float,
                           thetas: Sequence[float],
                           cfg: QuadratureConfig = DEFAULT_QUADRATURE
                           ) -> List[Tuple[float, float, float]]:
    """(theta, atan2(Vy, Vx), (theta - atan2) mod 2 pi) per sample.

    The offset is constant over theta exactly when the curve is similar
    to its isoptic (alpha = 1 and the circle case); elsewhere it drifts.
    """
    curve = LogAestheticCurve(params, cfg)
    dom = isoptic_domain(curve, delta)
    out = []
    for th in thetas:
        dom.require(th)
        v = _chord_c(curve, th, delta, cfg)
        ang = math.atan2(v.imag, v.real)
        out.append((th, ang, (th - ang) % (2.0 * math.pi)))
    return out

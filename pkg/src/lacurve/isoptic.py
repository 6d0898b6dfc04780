"""Isoptic curves of tangential-angle-parametrized plane curves.

Given a curve P(theta) whose unit tangent at theta is
(cos theta, sin theta), the isoptic point for offset angle delta is the
intersection of the tangent lines at theta and theta + delta:

    I(theta) = P(theta) + t(theta) * (cos theta, sin theta),
    t(theta) = csc(delta) * (Vx sin(theta+delta) - Vy cos(theta+delta)),

where V = P(theta+delta) - P(theta) is the chord vector.  The viewing
angle of the isoptic is gamma = pi - delta.  An independent verifier
checks every constructed point against the locus definition.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Protocol

from .errors import DegenerateAngle, EmptyDomain, ZeroChord
from .export import Polyline
from .lac import PlanePoint, ThetaDomain
from .numerics import DEFAULT_QUADRATURE, QuadratureConfig, integrate_planar

__all__ = [
    "TangentialCurve", "IsopticConfig", "ChordVector", "VerificationReport",
    "chord_vector", "t_theta", "t_theta_harmonic", "isoptic_point",
    "isoptic_domain", "isoptic_derivative", "verify_isoptic_point",
    "sample_isoptic",
]

_SIN_GUARD = 1e-9


class TangentialCurve(Protocol):
    """A plane curve parametrized by its tangential angle."""

    def point(self, theta: float) -> PlanePoint: ...

    def integrand(self, theta: float) -> PlanePoint: ...

    def theta_domain(self) -> ThetaDomain: ...

    def derivative(self, theta: float, order: int = 1) -> PlanePoint: ...


@dataclass(frozen=True)
class IsopticConfig:
    """Offset angle delta between the two tangency points."""

    delta: float

    def __post_init__(self):
        _check_delta(self.delta)

    @property
    def gamma(self) -> float:
        """The viewing angle pi - delta."""
        return math.pi - self.delta


class ChordVector(PlanePoint):
    """Vector from P(theta) to P(theta + delta); same layout as PlanePoint."""

    @property
    def vx(self) -> float:
        return self.x

    @property
    def vy(self) -> float:
        return self.y


@dataclass(frozen=True)
class VerificationReport:
    """Residuals of a candidate isoptic point against the definition."""

    dist1: float
    dist2: float
    angle_error: float


def _check_delta(delta: float) -> None:
    if not (0.0 < delta < math.pi):
        raise DegenerateAngle(f"delta={delta} not in (0, pi)")
    if abs(math.sin(delta)) <= _SIN_GUARD:
        raise DegenerateAngle(f"sin(delta)={math.sin(delta)} too close to 0")


def _cx(p) -> complex:
    if isinstance(p, complex):
        return p
    return complex(p[0], p[1])


def _chord_c(curve: TangentialCurve, theta: float, delta: float,
             cfg: QuadratureConfig) -> complex:
    dom = curve.theta_domain()
    dom.require(theta)
    dom.require(theta + delta, "theta+delta")
    res = integrate_planar(lambda p: _cx(curve.integrand(p)),
                           theta, theta + delta, cfg)
    return res.value


def chord_vector(curve: TangentialCurve, theta: float, delta: float,
                 cfg: QuadratureConfig = DEFAULT_QUADRATURE) -> ChordVector:
    """V(theta) = integral of the curve derivative over [theta, theta+delta]."""
    _check_delta(delta)
    z = _chord_c(curve, theta, delta, cfg)
    return ChordVector(z.real, z.imag)


def _t_from_chord(v: complex, theta: float, delta: float) -> float:
    e = cmath.exp(1j * (theta + delta))
    return (v.conjugate() * e).imag / math.sin(delta)


def t_theta(curve: TangentialCurve, theta: float, delta: float,
            cfg: QuadratureConfig = DEFAULT_QUADRATURE) -> float:
    """Signed distance along the tangent at theta to the intersection
    with the tangent at theta + delta."""
    _check_delta(delta)
    v = _chord_c(curve, theta, delta, cfg)
    return _t_from_chord(v, theta, delta)


def t_theta_harmonic(curve: TangentialCurve, theta: float, delta: float,
                     cfg: QuadratureConfig = DEFAULT_QUADRATURE) -> float:
    """Harmonic-addition form: csc(delta) * |V| * sin(theta + delta -
    atan2(Vy, Vx)).  Must agree with t_theta."""
    _check_delta(delta)
    v = _chord_c(curve, theta, delta, cfg)
    norm = abs(v)
    if norm == 0.0:
        raise ZeroChord("chord vector has zero length")
    phase = math.atan2(v.imag, v.real)
    return norm * math.sin(theta + delta - phase) / math.sin(delta)


def isoptic_point(curve: TangentialCurve, theta: float, delta: float,
                  cfg: QuadratureConfig = DEFAULT_QUADRATURE) -> PlanePoint:
    """One point of the isoptic curve for offset angle delta."""
    _check_delta(delta)
    v = _chord_c(curve, theta, delta, cfg)
    t = _t_from_chord(v, theta, delta)
    z = _cx(curve.point(theta)) + t * cmath.exp(1j * theta)
    return PlanePoint.from_complex(z)


def isoptic_domain(curve: TangentialCurve, delta: float) -> ThetaDomain:
    """{theta : theta and theta + delta inside the curve domain}."""
    _check_delta(delta)
    dom = curve.theta_domain()
    upper = None if dom.upper is None else dom.upper - delta
    lower = dom.lower
    if lower is not None and upper is not None and not lower < upper:
        raise EmptyDomain(
            f"curve domain shorter than delta={delta}: ({lower}, {upper})")
    return ThetaDomain(lower=lower, upper=upper)


def _isoptic_jet(curve: TangentialCurve, theta: float, delta: float,
                 cfg: QuadratureConfig, with_point: bool = True):
    """Isoptic point and its first three theta-derivatives.

    Only the chord V requires quadrature; V', V'', V''' come from the
    curve's closed-form derivatives at the two tangency angles
    (differentiation under the integral sign), and the rest is
    product/chain-rule bookkeeping on t(theta) = csc(delta) *
    Im(conj(V) e^{i(theta+delta)}).
    """
    v0 = _chord_c(curve, theta, delta, cfg)
    g = lambda th, k: _cx(curve.derivative(th, k))
    v1 = g(theta + delta, 1) - g(theta, 1)
    v2 = g(theta + delta, 2) - g(theta, 2)
    v3 = g(theta + delta, 3) - g(theta, 3)

    e_shift = cmath.exp(1j * (theta + delta))
    csc = 1.0 / math.sin(delta)
    # Leibniz derivatives of conj(V) * e^{i(theta+delta)}
    t0 = csc * (v0.conjugate() * e_shift).imag
    t1 = csc * ((v1.conjugate() + 1j * v0.conjugate()) * e_shift).imag
    t2 = csc * ((v2.conjugate() + 2j * v1.conjugate()
                 - v0.conjugate()) * e_shift).imag
    t3 = csc * ((v3.conjugate() + 3j * v2.conjugate()
                 - 3.0 * v1.conjugate() - 1j * v0.conjugate()) * e_shift).imag

    e = cmath.exp(1j * theta)
    p1 = g(theta, 1)
    p2 = g(theta, 2)
    p3 = g(theta, 3)
    i0 = (_cx(curve.point(theta)) + t0 * e) if with_point else None
    i1 = p1 + (t1 + 1j * t0) * e
    i2 = p2 + (t2 + 2j * t1 - t0) * e
    i3 = p3 + (t3 + 3j * t2 - 3.0 * t1 - 1j * t0) * e
    return i0, i1, i2, i3


def isoptic_derivative(curve: TangentialCurve, theta: float, delta: float,
                       order: int = 1,
                       cfg: QuadratureConfig = DEFAULT_QUADRATURE) -> PlanePoint:
    """Analytic derivative of the isoptic point (order 1..3)."""
    if order not in (1, 2, 3):
        raise ValueError("order must be 1, 2 or 3")
    _check_delta(delta)
    isoptic_domain(curve, delta).require(theta)
    jet = _isoptic_jet(curve, theta, delta, cfg)
    return PlanePoint.from_complex(jet[order])


def isoptic_jet(curve: TangentialCurve, theta: float, delta: float,
                cfg: QuadratureConfig = DEFAULT_QUADRATURE):
    """(I, I', I'', I''') as PlanePoints, sharing one chord quadrature."""
    _check_delta(delta)
    isoptic_domain(curve, delta).require(theta)
    return tuple(PlanePoint.from_complex(z)
                 for z in _isoptic_jet(curve, theta, delta, cfg))


def verify_isoptic_point(curve: TangentialCurve, theta: float, delta: float,
                         candidate,
                         cfg: QuadratureConfig = DEFAULT_QUADRATURE
                         ) -> VerificationReport:
    """Check a candidate point against the locus definition.

    dist1 / dist2 are the perpendicular distances of the candidate to
    the tangent lines at theta and theta + delta.  angle_error compares
    the angle between those lines (reduced modulo pi, lines rather than
    rays) with the viewing angle gamma = pi - delta.
    """
    _check_delta(delta)
    dom = curve.theta_domain()
    dom.require(theta)
    dom.require(theta + delta, "theta+delta")
    c = _cx(candidate)
    p1 = _cx(curve.point(theta))
    p2 = p1 + _chord_c(curve, theta, delta, cfg)
    d1 = cmath.exp(1j * theta)
    d2 = cmath.exp(1j * (theta + delta))
    # |cross(candidate - p, d)| = distance to the tangent line
    dist1 = abs(((c - p1) * d1.conjugate()).imag)
    dist2 = abs(((c - p2) * d2.conjugate()).imag)
    gamma = math.pi - delta
    # unsigned angle between the two tangent directions
    ang = abs(math.atan2((d1.conjugate() * d2).imag, (d1.conjugate() * d2).real))
    # lines (not rays): either representative modulo pi may match gamma
    angle_error = min(abs(ang - gamma), abs(math.pi - ang - gamma))
    return VerificationReport(dist1, dist2, angle_error)


def sample_isoptic(curve: TangentialCurve, theta_from: float, theta_to: float,
                   n: int, delta: float,
                   cfg: QuadratureConfig = DEFAULT_QUADRATURE,
                   label: str = "") -> Polyline:
    """n isoptic points at uniform theta spacing; the curve point and the
    chord are both advanced incrementally (O(n) short quadratures)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    _check_delta(delta)
    dom = isoptic_domain(curve, delta)
    dom.require(theta_from, "theta_from")
    dom.require(theta_to, "theta_to")
    thetas = [theta_from + (theta_to - theta_from) * k / (n - 1)
              for k in range(n)]
    f = lambda p: _cx(curve.integrand(p))

    def seg(a: float, b: float) -> complex:
        if a == b:
            return 0j
        lo, hi = (a, b) if b > a else (b, a)
        val = integrate_planar(f, lo, hi, cfg).value
        return val if b > a else -val

    p = _cx(curve.point(theta_from))
    v = _chord_c(curve, theta_from, delta, cfg)
    pts = []
    prev = thetas[0]
    for th in thetas:
        if th != prev:
            dp = seg(prev, th)
            p += dp
            v += seg(prev + delta, th + delta) - dp
            prev = th
        t = _t_from_chord(v, th, delta)
        pts.append(PlanePoint.from_complex(p + t * cmath.exp(1j * th)))
    return Polyline(tuple(thetas), tuple(pts), label)

"""Exception hierarchy shared by all lacurve modules."""


class LacurveError(Exception):
    """Base class for all errors raised by this package."""


class OutOfDomain(LacurveError):
    """Parameter value lies outside (or too close to the edge of) the
    admissible tangential-angle / arc-length interval."""


class ToleranceNotReached(LacurveError):
    """Adaptive quadrature ran out of subdivisions before meeting the
    requested tolerance."""


class NonFiniteIntegrand(LacurveError):
    """The integrand returned NaN or infinity at an interior node."""


class UnstableEstimate(LacurveError):
    """Richardson extrapolation of a finite-difference derivative failed
    to converge."""


class DegenerateAngle(LacurveError):
    """Isoptic offset angle outside (0, pi), or sin(delta) numerically zero."""


class ZeroChord(LacurveError):
    """Chord vector has zero length; its direction is undefined."""


class EmptyDomain(LacurveError):
    """The requested domain intersection is empty."""


class NoLcg(LacurveError):
    """The curve has constant radius of curvature, so its logarithmic
    curvature graph is undefined."""


class ZeroSpeed(LacurveError):
    """First derivative vanished; the curve point is singular."""


class StationaryCurvature(LacurveError):
    """The radius of curvature is stationary; the LCG point is undefined."""


class DegenerateSecant(LacurveError):
    """The two LCG sample points have (numerically) equal abscissae."""


class SingularTarget(LacurveError):
    """The requested derived curve degenerates for these parameters
    (e.g. the evolute slope formula at alpha = 2)."""

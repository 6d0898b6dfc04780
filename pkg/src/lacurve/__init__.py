"""Log-aesthetic curves, their isoptics, and logarithmic curvature
graph analysis."""

from .errors import (DegenerateAngle, DegenerateSecant, EmptyDomain,
                     LacurveError, NoLcg, NonFiniteIntegrand, OutOfDomain,
                     SingularTarget, StationaryCurvature, ToleranceNotReached,
                     UnstableEstimate, ZeroChord, ZeroSpeed)
from .export import PlotSpec, Polyline, read_csv, write_csv, write_report, write_svg
from .isoptic import (ChordVector, IsopticConfig, TangentialCurve,
                      VerificationReport, chord_vector, isoptic_derivative,
                      isoptic_domain, isoptic_jet, isoptic_point,
                      sample_isoptic, t_theta, t_theta_harmonic,
                      verify_isoptic_point)
from .lac import (ArcDomain, CurveParams, LogAestheticCurve, PlanePoint,
                  ThetaDomain, arc_bounds, closed_form_point, evolute_derivative,
                  evolute_point, integrand, point_derivative, point_of_s,
                  point_of_theta, rho_derivatives, rho_of_s, rho_of_theta,
                  s_of_theta, sample_curve, theta_bounds, theta_of_s)
from .lcg import (AutoisopticReport, LcgPoint, SlopeEstimate,
                  alpha_hat_isoptic, autoevolute_check, autoisoptic_report,
                  branch_for, chord_angle_diagnostic, isoptic_lcg_point,
                  lcg_isoptic_alpha1_closed, lcg_point_lac,
                  lcg_point_parametric, slope_estimate)
from .numerics import (DEFAULT_QUADRATURE, QuadratureConfig, QuadratureResult,
                       derivative, derivative_with_error, fresnel,
                       integrate_planar)

__version__ = "0.1.0"

import cmath
import math

import numpy as np
import pytest

from lacurve.errors import DegenerateAngle, EmptyDomain, OutOfDomain
from lacurve.isoptic import (IsopticConfig, chord_vector, isoptic_derivative,
                             isoptic_domain, isoptic_jet, isoptic_point,
                             sample_isoptic, t_theta, t_theta_harmonic,
                             verify_isoptic_point)
from lacurve.lac import CurveParams, LogAestheticCurve
from lacurve.numerics import derivative

DELTA = 2.0 * math.pi / 3.0

CIRCLE = LogAestheticCurve(CurveParams(math.inf))
SPIRAL = LogAestheticCurve(CurveParams(1.0))
INVOLUTE = LogAestheticCurve(CurveParams(2.0))
CLOTHOID = LogAestheticCurve(CurveParams(-1.0))


def tangent_line_intersection(curve, theta, delta):
    """Independent oracle: solve the 2x2 linear system for the meeting
    point of the tangent lines at theta and theta + delta."""
    p1 = np.array(curve.point(theta))
    p2 = p1 + np.array(chord_vector(curve, theta, delta))
    d1 = np.array([math.cos(theta), math.sin(theta)])
    d2 = np.array([math.cos(theta + delta), math.sin(theta + delta)])
    ts = np.linalg.solve(np.column_stack([d1, -d2]), p2 - p1)
    return p1 + ts[0] * d1


class TestConfigAndDomain:
    def test_gamma(self):
        assert IsopticConfig(DELTA).gamma == pytest.approx(math.pi / 3)

    @pytest.mark.parametrize("delta", [0.0, -0.5, math.pi, 3.2, 1e-12])
    def test_bad_delta(self, delta):
        with pytest.raises(DegenerateAngle):
            IsopticConfig(delta)
        with pytest.raises(DegenerateAngle):
            isoptic_point(CIRCLE, 0.0, delta)

    def test_domain_shrinks_at_upper_bound(self):
        dom = isoptic_domain(CLOTHOID, DELTA)
        assert dom.lower is None
        assert dom.upper == pytest.approx(0.5 - DELTA)

    def test_domain_unchanged_at_lower_bound(self):
        dom = isoptic_domain(INVOLUTE, DELTA)
        assert dom.lower == -1.0 and dom.upper is None

    def test_empty_domain(self):
        class Short:
            def theta_domain(self):
                from lacurve.lac import ThetaDomain
                return ThetaDomain(0.0, 0.5)

        with pytest.raises(EmptyDomain):
            isoptic_domain(Short(), 2.0)


class TestChordAndT:
    def test_circle_chord(self):
        v = chord_vector(CIRCLE, 0.0, math.pi / 2)
        assert v.vx == pytest.approx(1.0, abs=1e-12)
        assert v.vy == pytest.approx(1.0, abs=1e-12)

    def test_chord_requires_both_angles_in_domain(self):
        with pytest.raises(OutOfDomain):
            chord_vector(CLOTHOID, 0.4 - DELTA + 0.3, DELTA)

    def test_circle_t(self):
        # tangent lines of the unit circle meet at distance tan(delta/2)
        for delta in (0.5, 1.0, DELTA):
            t = t_theta(CIRCLE, 0.3, delta)
            assert t == pytest.approx(math.tan(delta / 2), abs=1e-12)

    def test_spiral_t_scales_with_rho(self):
        # alpha = 1: t / rho is independent of theta
        vals = [t_theta(SPIRAL, th, DELTA) / math.exp(th)
                for th in (-1.0, 0.0, 0.7, 2.0)]
        assert max(vals) - min(vals) < 1e-10

    def test_harmonic_form_agrees(self):
        rng = np.random.default_rng(21)
        for curve in (CIRCLE, SPIRAL, INVOLUTE, CLOTHOID):
            dom = isoptic_domain(curve, DELTA)
            for _ in range(10):
                if dom.upper is not None:
                    th = rng.uniform(dom.upper - 2.0, dom.upper - 0.05)
                elif dom.lower is not None:
                    th = rng.uniform(dom.lower + 0.05, dom.lower + 2.0)
                else:
                    th = rng.uniform(-2.0, 2.0)
                a = t_theta(curve, th, DELTA)
                b = t_theta_harmonic(curve, th, DELTA)
                assert a == pytest.approx(b, abs=1e-10)


class TestIsopticPoint:
    def test_circle_isoptic_is_concentric_circle(self):
        # radius sec(delta/2) about the center (0, 1)
        for delta in (0.5, DELTA, 2.5):
            r = 1.0 / math.cos(delta / 2)
            for th in np.linspace(-3.0, 3.0, 11):
                z = complex(*isoptic_point(CIRCLE, th, delta))
                assert abs(abs(z - 1j) - r) < 1e-12

    def test_matches_linear_solve_oracle(self):
        rng = np.random.default_rng(22)
        for curve in (CIRCLE, SPIRAL, INVOLUTE, CLOTHOID):
            dom = isoptic_domain(curve, DELTA)
            for _ in range(10):
                if dom.upper is not None:
                    th = rng.uniform(dom.upper - 2.0, dom.upper - 0.05)
                elif dom.lower is not None:
                    th = rng.uniform(dom.lower + 0.05, dom.lower + 2.0)
                else:
                    th = rng.uniform(-2.0, 2.0)
                ours = np.array(isoptic_point(curve, th, DELTA))
                oracle = tangent_line_intersection(curve, th, DELTA)
                assert np.allclose(ours, oracle, atol=1e-9)

    def test_symmetry_under_role_swap(self):
        # the same meeting point seen from the second tangency angle
        th = 0.4
        i1 = complex(*isoptic_point(INVOLUTE, th, DELTA))
        p2 = complex(*INVOLUTE.point(th + DELTA))
        d2 = cmath.exp(1j * (th + DELTA))
        s = ((i1 - p2) / d2).real
        assert abs(p2 + s * d2 - i1) < 1e-10

    def test_verifier_accepts_true_point(self):
        for curve in (SPIRAL, INVOLUTE):
            pt = isoptic_point(curve, 0.25, DELTA)
            rep = verify_isoptic_point(curve, 0.25, DELTA, pt)
            assert rep.dist1 < 1e-12 and rep.dist2 < 1e-12
            assert rep.angle_error < 1e-12

    def test_verifier_rejects_perturbed_point(self):
        pt = isoptic_point(SPIRAL, 0.25, DELTA)
        bad = (pt.x + 1e-3, pt.y)
        rep = verify_isoptic_point(SPIRAL, 0.25, DELTA, bad)
        assert max(rep.dist1, rep.dist2) > 1e-5


class TestIsopticDerivative:
    def test_circle_speed_is_constant(self):
        vals = [abs(complex(*isoptic_derivative(CIRCLE, th, DELTA)))
                for th in (-1.0, 0.0, 1.3)]
        assert max(vals) - min(vals) < 1e-12

    @pytest.mark.parametrize("curve", [SPIRAL, INVOLUTE, CLOTHOID])
    def test_matches_finite_differences(self, curve):
        dom = isoptic_domain(curve, DELTA)
        th = dom.upper - 0.6 if dom.upper is not None else 0.4
        for order, tol in ((1, 1e-7), (2, 1e-6), (3, 1e-4)):
            exact = complex(*isoptic_derivative(curve, th, DELTA, order))
            fx = derivative(lambda t: isoptic_point(curve, t, DELTA).x,
                            th, order, h0=0.02)
            fy = derivative(lambda t: isoptic_point(curve, t, DELTA).y,
                            th, order, h0=0.02)
            assert abs(exact - complex(fx, fy)) < tol * max(1.0, abs(exact))

    def test_jet_consistent_with_parts(self):
        jet = isoptic_jet(INVOLUTE, 0.4, DELTA)
        assert jet[0] == isoptic_point(INVOLUTE, 0.4, DELTA)
        for k in (1, 2, 3):
            assert jet[k] == isoptic_derivative(INVOLUTE, 0.4, DELTA, k)

    def test_order_validation(self):
        with pytest.raises(ValueError):
            isoptic_derivative(SPIRAL, 0.0, DELTA, 4)


class TestSampling:
    def test_matches_pointwise(self):
        poly = sample_isoptic(SPIRAL, -1.0, 1.5, 9, DELTA)
        assert len(poly.params) == 9
        for th, pt in zip(poly.params, poly.points):
            direct = isoptic_point(SPIRAL, th, DELTA)
            assert abs(complex(*pt) - direct.to_complex()) < 1e-9

    def test_bounded_curve(self):
        poly = sample_isoptic(CLOTHOID, -3.0, -1.8, 6, DELTA)
        for th, pt in zip(poly.params, poly.points):
            direct = isoptic_point(CLOTHOID, th, DELTA)
            assert abs(complex(*pt) - direct.to_complex()) < 1e-9

    def test_rejects_out_of_domain_range(self):
        with pytest.raises(OutOfDomain):
            sample_isoptic(CLOTHOID, -1.0, 0.4, 5, DELTA)

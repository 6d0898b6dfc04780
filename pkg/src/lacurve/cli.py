"""Command-line interface.

Subcommands: sample (curve polylines), isoptic (base curve + isoptic),
lcg (logarithmic curvature graph traces), check (autoisoptic /
autoevolute verdicts).  Exit codes: 0 ok, 2 validation failure,
3 numeric failure, 4 verification failure, 5 expectation mismatch.
All diagnostics go to stderr; data goes to the output file or stdout.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import errors
from .export import PlotSpec, Polyline, write_csv, write_report, write_svg
from .isoptic import (isoptic_domain, sample_isoptic, verify_isoptic_point)
from .lac import (CurveParams, LogAestheticCurve, sample_curve, theta_bounds)
from .lcg import (autoevolute_check, autoisoptic_report, isoptic_lcg_point,
                  lcg_point_lac, lcg_point_parametric)
from .lac import evolute_derivative
from .numerics import QuadratureConfig

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_NUMERIC = 3
EXIT_VERIFICATION = 4
EXIT_EXPECTATION = 5


class _CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _parse_alpha(text: str) -> float:
    t = text.strip().lower()
    if t in ("inf", "+inf", "infinity"):
        return math.inf
    if t == "-inf":
        return -math.inf
    try:
        return float(t)
    except ValueError:
        raise _CliError(f"invalid alpha {text!r}", EXIT_VALIDATION)


def _angle(value: float, degrees: bool) -> float:
    return math.radians(value) if degrees else value


def _params(ns) -> CurveParams:
    try:
        return CurveParams(_parse_alpha(ns.alpha), ns.lam)
    except ValueError as exc:
        raise _CliError(str(exc), EXIT_VALIDATION)


def _output(ns):
    return ns.output if ns.output else sys.stdout


def _emit(ns, polylines, markers=()):
    if ns.format == "svg":
        write_svg(PlotSpec(tuple(polylines), tuple(markers)), _output(ns))
    else:
        if len(polylines) != 1 and not ns.output:
            raise _CliError(
                "csv with multiple polylines needs --output (one file, "
                "suffixed per polyline)", EXIT_VALIDATION)
        if len(polylines) == 1:
            write_csv(polylines[0], _output(ns))
        else:
            for poly in polylines:
                write_csv(poly, f"{ns.output}.{poly.label or 'polyline'}.csv")


def _clip_range(dom, lo, hi, warn_label):
    clo, chi = dom.clip(lo, hi)
    if not clo < chi:
        raise _CliError(
            f"theta range [{lo}, {hi}] lies outside the domain "
            f"({dom.lower}, {dom.upper})", EXIT_VALIDATION)
    if clo != lo or chi != hi:
        print(f"warning: {warn_label} range clipped to [{clo}, {chi}]",
              file=sys.stderr)
    return clo, chi


def _bound_markers(dom, lo, hi, curve_point):
    markers = []
    for bound, name in ((dom.lower, "lower bound"), (dom.upper, "upper bound")):
        if bound is None or not lo <= bound <= hi:
            continue
        inward = 1e-6 * max(1.0, abs(bound))
        probe = bound + inward if bound == dom.lower else bound - inward
        try:
            markers.append((curve_point(probe), name))
        except errors.LacurveError:
            pass
    return markers


def cmd_sample(ns) -> int:
    params = _params(ns)
    cfg = QuadratureConfig()
    dom = theta_bounds(params)
    lo, hi = _clip_range(dom, ns.theta_from, ns.theta_to, "theta")
    poly = sample_curve(params, lo, hi, ns.n, cfg, label="curve")
    curve = LogAestheticCurve(params, cfg)
    markers = _bound_markers(dom, ns.theta_from, ns.theta_to, curve.point)
    _emit(ns, [poly], markers)
    return EXIT_OK


def cmd_isoptic(ns) -> int:
    params = _params(ns)
    cfg = QuadratureConfig()
    delta = _angle(ns.delta, ns.degrees)
    try:
        curve = LogAestheticCurve(params, cfg)
        idom = isoptic_domain(curve, delta)
    except (errors.DegenerateAngle, errors.EmptyDomain) as exc:
        raise _CliError(str(exc), EXIT_VALIDATION)
    # the isoptic range is not silently clipped: a sample point needs the
    # tangency at theta + delta too, so an out-of-range request is an error
    if not (idom.contains(ns.theta_from) and idom.contains(ns.theta_to)):
        raise _CliError(
            f"theta range [{ns.theta_from}, {ns.theta_to}] exceeds the "
            f"isoptic domain ({idom.lower}, {idom.upper})", EXIT_VALIDATION)
    lo, hi = ns.theta_from, ns.theta_to
    iso = sample_isoptic(curve, lo, hi, ns.n, delta, cfg, label="isoptic")
    base = sample_curve(params, lo, hi, ns.n, cfg, label="curve")
    if ns.verify:
        worst = 0.0
        for th, pt in zip(iso.params, iso.points):
            rep = verify_isoptic_point(curve, th, delta, pt, cfg)
            scale = 1.0 + math.hypot(*pt)
            worst = max(worst, rep.dist1 / scale, rep.dist2 / scale,
                        rep.angle_error)
            if rep.dist1 > 1e-9 * scale or rep.dist2 > 1e-9 * scale \
                    or rep.angle_error > 1e-12:
                raise _CliError(
                    f"isoptic verification failed at theta={th}: {rep}",
                    EXIT_VERIFICATION)
        print(f"verified {len(iso.points)} isoptic points, "
              f"worst residual {worst:.3e}", file=sys.stderr)
    markers = _bound_markers(idom, ns.theta_from, ns.theta_to,
                             lambda th: iso.points[0])
    _emit(ns, [base, iso], markers)
    return EXIT_OK


def cmd_lcg(ns) -> int:
    params = _params(ns)
    cfg = QuadratureConfig()
    dom = theta_bounds(params)
    if ns.target == "isoptic":
        delta = _angle(ns.delta, ns.degrees)
        curve = LogAestheticCurve(params, cfg)
        dom = isoptic_domain(curve, delta)
    lo, hi = _clip_range(dom, ns.theta_from, ns.theta_to, "theta")
    thetas = [lo + (hi - lo) * k / (ns.n - 1) for k in range(ns.n)]
    pts = []
    if ns.target == "base":
        for th in thetas:
            pts.append(lcg_point_lac(params, th))
    elif ns.target == "isoptic":
        for th in thetas:
            pts.append(isoptic_lcg_point(params, delta, th, cfg))
    else:  # evolute
        derivs = lambda th: tuple(
            evolute_derivative(params, th, k) for k in (1, 2, 3))
        for th in thetas:
            pts.append(lcg_point_parametric(derivs, th))
    poly = Polyline(tuple(thetas), tuple(pts), label=f"lcg-{ns.target}")
    _emit(ns, [poly])
    return EXIT_OK


def cmd_check(ns) -> int:
    params = _params(ns)
    cfg = QuadratureConfig()
    phi = ns.phi
    if ns.mode == "autoisoptic":
        delta = _angle(ns.delta, ns.degrees)
        curve = LogAestheticCurve(params, cfg)
        idom = isoptic_domain(curve, delta)
        thetas = _default_thetas(idom, ns, phi, params.alpha)
        report = autoisoptic_report(params, delta, thetas, phi, ns.tol, cfg)
        write_report(report, _output(ns))
        if ns.expect and report.verdict != ns.expect:
            raise _CliError(
                f"expected verdict {ns.expect}, got {report.verdict}",
                EXIT_EXPECTATION)
        return EXIT_OK
    # autoevolute
    dom = theta_bounds(params)
    thetas = _default_thetas(dom, ns, phi, params.alpha)
    slopes = autoevolute_check(params, thetas, phi)
    out = _output(ns)

    def emit(fh):
        target = -1.0 / (params.alpha - 2.0)
        fh.write(f"target_slope {target!r}\n")
        fh.write("theta slope\n")
        for s in slopes:
            fh.write(f"{s.theta!r} {s.value!r}\n")

    if hasattr(out, "write"):
        emit(out)
    else:
        with open(out, "w") as fh:
            emit(fh)
    return EXIT_OK


def _default_thetas(dom, ns, phi, alpha):
    if ns.thetas:
        return [float(t) for t in ns.thetas.split(",")]
    lo = dom.lower if dom.lower is not None else None
    hi = dom.upper if dom.upper is not None else None
    # keep theta and theta +- phi comfortably inside the domain
    if alpha < 1:
        anchor = (hi - 0.5) if hi is not None else 0.0
        return [anchor, anchor - 2.0, anchor - 5.0]
    anchor = (lo + 0.5) if lo is not None else 0.0
    return [anchor, anchor + 2.0, anchor + 5.0]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="lacurve",
        description="Log-aesthetic curves, isoptics, and LCG analysis")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, delta=False):
        p.add_argument("--alpha", required=True,
                       help="shape parameter (number, inf or -inf)")
        p.add_argument("--lambda", dest="lam", type=float, default=1.0,
                       help="scale parameter (>= 0)")
        p.add_argument("--degrees", action="store_true",
                       help="interpret angle options in degrees")
        p.add_argument("--output", default=None, help="output file (default stdout)")
        if delta:
            p.add_argument("--delta", type=float, required=True,
                           help="isoptic offset angle, 0 < delta < pi")

    ps = sub.add_parser("sample", help="sample the curve")
    common(ps)
    ps.add_argument("--theta-from", type=float, default=-3.0)
    ps.add_argument("--theta-to", type=float, default=3.0)
    ps.add_argument("--n", type=int, default=200)
    ps.add_argument("--format", choices=("csv", "svg"), default="csv")
    ps.set_defaults(func=cmd_sample)

    pi = sub.add_parser("isoptic", help="sample the curve and its isoptic")
    common(pi, delta=True)
    pi.add_argument("--theta-from", type=float, default=-3.0)
    pi.add_argument("--theta-to", type=float, default=3.0)
    pi.add_argument("--n", type=int, default=200)
    pi.add_argument("--format", choices=("csv", "svg"), default="csv")
    pi.add_argument("--verify", action="store_true",
                    help="check every sample against the isoptic definition")
    pi.set_defaults(func=cmd_isoptic)

    pl = sub.add_parser("lcg", help="logarithmic curvature graph trace")
    common(pl)
    pl.add_argument("--target", choices=("base", "isoptic", "evolute"),
                    default="base")
    pl.add_argument("--delta", type=float, default=math.pi / 3)
    pl.add_argument("--theta-from", type=float, default=-2.0)
    pl.add_argument("--theta-to", type=float, default=2.0)
    pl.add_argument("--n", type=int, default=100)
    pl.add_argument("--format", choices=("csv", "svg"), default="csv")
    pl.set_defaults(func=cmd_lcg)

    pc = sub.add_parser("check", help="autoisoptic / autoevolute verdict")
    pc.add_argument("mode", choices=("autoisoptic", "autoevolute"))
    common(pc)
    pc.add_argument("--delta", type=float, default=2 * math.pi / 3)
    pc.add_argument("--phi", type=float, default=math.pi)
    pc.add_argument("--tol", type=float, default=1e-4)
    pc.add_argument("--thetas", default=None,
                    help="comma-separated theta samples")
    pc.add_argument("--expect", choices=("autoisoptic", "not_autoisoptic"),
                    default=None)
    pc.set_defaults(func=cmd_check)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        ns = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse uses exit code 2 for usage errors already
        return int(exc.code or 0)
    try:
        return ns.func(ns)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (errors.OutOfDomain, errors.DegenerateAngle, errors.EmptyDomain,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except errors.LacurveError as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())

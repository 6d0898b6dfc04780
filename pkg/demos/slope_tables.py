"""Which log-aesthetic curves are similar to their own isoptic?

The logarithmic curvature graph (LCG) of a log-aesthetic curve is a
straight line of slope alpha.  Running the same slope analysis on the
curve's isoptic answers the autoisoptic question: for the logarithmic
spiral (alpha = 1) the slope stays exactly 1, while for the circle
involute (alpha = 2) and the clothoid (alpha = -1) it merely drifts
toward alpha far from the domain boundary, so those curves are not
autoisoptic.  The evolute, by contrast, is always another log-aesthetic
curve, with shape parameter -1/(alpha - 2).
"""

import math

from lacurve import (CurveParams, alpha_hat_isoptic, autoevolute_check,
                     autoisoptic_report)

DELTA = 2.0 * math.pi / 3.0
PHI = math.pi


def table(alpha, thetas, title):
    params = CurveParams(alpha)
    print(f"\n{title} (alpha={alpha}, delta=2pi/3, phi=pi)")
    print(f"{'theta':>12}  {'alpha_hat':>12}")
    for th in thetas:
        est = alpha_hat_isoptic(params, DELTA, th, PHI)
        print(f"{th:>12.5f}  {est.value:>12.6f}")


def main():
    table(2.0, [-1.0, 0.0, math.pi, 3 * math.pi, 10 * math.pi, 100 * math.pi],
          "circle involute isoptic LCG slope")
    table(-1.0, [0.5 - DELTA, -math.pi, -2 * math.pi, -5 * math.pi,
                 -10 * math.pi, -100 * math.pi],
          "clothoid isoptic LCG slope")

    print("\nautoisoptic verdicts")
    for alpha, thetas in ((1.0, (-2.0, 0.0, 2.0)),
                          (2.0, (0.0, math.pi, 3 * math.pi))):
        rep = autoisoptic_report(CurveParams(alpha), DELTA, thetas, PHI)
        print(f"alpha={alpha}: {rep.verdict} "
              f"(limit estimate {rep.limit_estimate:.6f})")

    print("\nevolute LCG slopes (target -1/(alpha-2))")
    for alpha in (0.0, 1.0, 3.0):
        thetas = (-0.5, -0.2) if alpha < 1 else (0.2, 1.0)
        ests = autoevolute_check(CurveParams(alpha), thetas, 0.3)
        vals = ", ".join(f"{e.value:.10f}" for e in ests)
        print(f"alpha={alpha}: target {-1.0 / (alpha - 2.0):+.4f}, "
              f"measured {vals}")


if __name__ == "__main__":
    main()

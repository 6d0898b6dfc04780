"""Gallery of log-aesthetic curves across the shape parameter.

Samples one curve per landmark alpha (clothoid, Nielsen's spiral,
logarithmic spiral, circle involute, circle) and renders them into a
single SVG for visual comparison.  The curves all start at the origin
with a horizontal tangent; the shape parameter controls how quickly the
radius of curvature grows along the curve.
"""

import math
import os

from lacurve import CurveParams, PlotSpec, sample_curve, theta_bounds, write_svg

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, "output")

LANDMARKS = [
    (-1.0, "clothoid"),
    (0.0, "nielsen"),
    (1.0, "log-spiral"),
    (2.0, "involute"),
    (math.inf, "circle"),
]


def main():
    os.makedirs(OUT, exist_ok=True)
    polylines = []
    for alpha, name in LANDMARKS:
        params = CurveParams(alpha)
        # stay inside the admissible tangential-angle interval
        lo, hi = theta_bounds(params).clip(-2.0, 4.0)
        poly = sample_curve(params, lo + 0.05, hi - 0.05, 400, label=name)
        polylines.append(poly)
        print(f"alpha={alpha:>5}: {name:<11} sampled on "
              f"[{poly.params[0]:.3f}, {poly.params[-1]:.3f}]")
    path = os.path.join(OUT, "gallery.svg")
    write_svg(PlotSpec(tuple(polylines)), path)
    print(f"wrote {path}")


if __name__ == "__main__":
    main()

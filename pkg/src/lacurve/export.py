"""Serialization of sampled curves and analysis reports.

CSV is the machine interchange format (17 significant digits, lossless
for doubles); SVG is a write-only human-inspection artifact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple, TextIO, Union

__all__ = ["Polyline", "PlotSpec", "write_csv", "read_csv", "write_svg",
           "write_report"]

Destination = Union[str, TextIO]


def _fmt(v: float) -> str:
    return format(float(v), ".17g")


def _open(destination: Destination, write_fn) -> None:
    if hasattr(destination, "write"):
        write_fn(destination)
    else:
        with open(destination, "w", newline="") as fh:
            write_fn(fh)


@dataclass(frozen=True)
class Polyline:
    """Sampled point sequence with its (strictly monotone) parameter values."""

    params: Tuple[float, ...]
    points: Tuple[Tuple[float, float], ...]
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(float(p) for p in self.params))
        object.__setattr__(
            self, "points",
            tuple((float(x), float(y)) for x, y in self.points))
        if len(self.params) != len(self.points):
            raise ValueError("params and points must have equal length")
        if not self.params:
            raise ValueError("empty polyline")
        diffs = [b - a for a, b in zip(self.params, self.params[1:])]
        # all-equal is tolerated for degenerate (zero-width) sample ranges
        if diffs and not (all(d > 0 for d in diffs)
                          or all(d < 0 for d in diffs)
                          or all(d == 0 for d in diffs)):
            raise ValueError("params must be strictly monotone")
        for t, (x, y) in zip(self.params, self.points):
            if not (math.isfinite(t) and math.isfinite(x) and math.isfinite(y)):
                raise ValueError("non-finite polyline entry")


@dataclass(frozen=True)
class PlotSpec:
    """Everything write_svg needs for one figure."""

    polylines: Tuple[Polyline, ...]
    markers: Tuple[Tuple[Tuple[float, float], str], ...] = ()
    width: int = 800
    height: int = 800
    margin: float = 0.05

    def __post_init__(self):
        object.__setattr__(self, "polylines", tuple(self.polylines))
        object.__setattr__(self, "markers", tuple(
            ((float(p[0]), float(p[1])), str(lbl)) for p, lbl in self.markers))
        if not self.polylines:
            raise ValueError("PlotSpec needs at least one polyline")
        if self.width <= 0 or self.height <= 0:
            raise ValueError("width and height must be positive")
        if not (0 <= self.margin < 0.5):
            raise ValueError("margin fraction must be in [0, 0.5)")


def write_csv(p: Polyline, destination: Destination) -> None:
    """Write `param,x,y` rows with 17 significant digits."""

    def emit(fh):
        fh.write("param,x,y\n")
        for t, (x, y) in zip(p.params, p.points):
            fh.write(f"{_fmt(t)},{_fmt(x)},{_fmt(y)}\n")

    _open(destination, emit)


def read_csv(source: Destination, label: str = "") -> Polyline:
    """Parse a polyline written by write_csv (used for round-trip checks)."""
    if hasattr(source, "read"):
        lines = source.read().splitlines()
    else:
        with open(source) as fh:
            lines = fh.read().splitlines()
    if not lines or lines[0] != "param,x,y":
        raise ValueError("missing polyline CSV header")
    params, points = [], []
    for line in lines[1:]:
        if not line:
            continue
        t, x, y = line.split(",")
        params.append(float(t))
        points.append((float(x), float(y)))
    return Polyline(tuple(params), tuple(points), label)


def _bounding_box(spec: PlotSpec):
    xs = [x for p in spec.polylines for x, _ in p.points]
    ys = [y for p in spec.polylines for _, y in p.points]
    xs += [m[0][0] for m in spec.markers]
    ys += [m[0][1] for m in spec.markers]
    return min(xs), min(ys), max(xs), max(ys)


_SVG_COLORS = ("#1f77b4", "#2ca02c", "#d62728", "#ff7f0e", "#9467bd",
               "#8c564b", "#e377c2", "#7f7f7f")


def write_svg(spec: PlotSpec, destination: Destination) -> None:
    """Render the polylines and markers into a single SVG document.

    The viewBox is the points' bounding box expanded by the margin
    fraction; the y axis is flipped so plane "up" renders up.
    """
    x0, y0, x1, y1 = _bounding_box(spec)
    w = max(x1 - x0, 1e-30)
    h = max(y1 - y0, 1e-30)
    pad_x, pad_y = spec.margin * w, spec.margin * h
    vx, vy = x0 - pad_x, y0 - pad_y
    vw, vh = w + 2 * pad_x, h + 2 * pad_y
    stroke = 0.002 * max(vw, vh)

    def flip(y: float) -> float:
        # mirror about the viewBox mid-height
        return 2 * vy + vh - y

    def emit(fh):
        fh.write('<?xml version="1.0" encoding="UTF-8"?>\n')
        fh.write(
            f'<svg xmlns="http://www.w3.org/2000/svg" '
            f'width="{spec.width}" height="{spec.height}" '
            f'viewBox="{_fmt(vx)} {_fmt(vy)} {_fmt(vw)} {_fmt(vh)}">\n')
        for i, poly in enumerate(spec.polylines):
            color = _SVG_COLORS[i % len(_SVG_COLORS)]
            coords = " ".join(
                f"{'M' if k == 0 else 'L'} {_fmt(x)} {_fmt(flip(y))}"
                for k, (x, y) in enumerate(poly.points))
            fh.write(f'<path d="{coords}" fill="none" stroke="{color}" '
                     f'stroke-width="{_fmt(stroke)}"/>\n')
        for (mx, my), label in spec.markers:
            fh.write(f'<circle cx="{_fmt(mx)}" cy="{_fmt(flip(my))}" '
                     f'r="{_fmt(3 * stroke)}" fill="#d62728"/>\n')
            if label:
                fh.write(f'<text x="{_fmt(mx + 4 * stroke)}" '
                         f'y="{_fmt(flip(my))}" '
                         f'font-size="{_fmt(10 * stroke)}">{label}</text>\n')
        fh.write("</svg>\n")

    _open(destination, emit)


def write_report(report, destination: Destination) -> None:
    """Serialize an AutoisopticReport as deterministic key/value text
    followed by a theta / alpha_hat table."""

    def emit(fh):
        alpha = report.params.alpha
        fh.write(f"alpha {_fmt(alpha) if math.isfinite(alpha) else alpha}\n")
        fh.write(f"lambda {_fmt(report.params.lam)}\n")
        fh.write(f"delta {_fmt(report.delta)}\n")
        fh.write(f"verdict {report.verdict}\n")
        fh.write(f"limit_estimate {_fmt(report.limit_estimate)}\n")
        fh.write("theta alpha_hat\n")
        for s in report.samples:
            fh.write(f"{_fmt(s.theta)} {_fmt(s.value)}\n")

    _open(destination, emit)

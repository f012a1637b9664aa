"""SVG drawings of a curve with its pedal, evolute and parallel curves."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidArgumentError
from .functionals import length
from .geometry import boundary_points, evolute_support, parallel_support, pedal_points
from .series import TWO_PI, FourierSupport

LAYERS = ("boundary", "pedal", "evolute", "parallel")
DEFAULT_STYLES = {
    "boundary": {"stroke": "#1f3b73", "dash": None},
    "pedal": {"stroke": "#2e7d32", "dash": "4 3"},
    "evolute": {"stroke": "#b71c1c", "dash": None},
    "parallel": {"stroke": "#6a1b9a", "dash": "6 3"},
}


@dataclass(frozen=True)
class RenderSpec:
    layers: tuple[str, ...] = ("boundary", "parallel", "evolute")
    parallel_distance: float | str = "L/2pi"
    samples_per_curve: int = 1024
    styles: dict = field(default_factory=lambda: dict(DEFAULT_STYLES))

    def __post_init__(self):
        if not self.layers:
            raise InvalidArgumentError("at least one layer is required")
        unknown = [layer for layer in self.layers if layer not in LAYERS]
        if unknown:
            raise InvalidArgumentError(f"unknown layers {unknown}; choose from {LAYERS}")
        if self.samples_per_curve < 16:
            raise InvalidArgumentError("samples_per_curve must be >= 16")
        if isinstance(self.parallel_distance, str) and self.parallel_distance != "L/2pi":
            raise InvalidArgumentError("parallel_distance must be a number or 'L/2pi'")


def resolve_parallel_distance(p: FourierSupport, distance) -> float:
    if distance == "L/2pi":
        return length(p) / TWO_PI
    return float(distance)


def layer_points(p: FourierSupport, layer: str, spec: RenderSpec) -> np.ndarray:
    phis = TWO_PI * np.arange(spec.samples_per_curve) / spec.samples_per_curve
    if layer == "boundary":
        return boundary_points(p, phis)
    if layer == "pedal":
        return pedal_points(p, phis)
    if layer == "evolute":
        return boundary_points(evolute_support(p), phis)
    if layer == "parallel":
        return boundary_points(parallel_support(p, resolve_parallel_distance(p, spec.parallel_distance)), phis)
    raise InvalidArgumentError(f"unknown layer {layer!r}")


def _fmt(v: float) -> str:
    text = f"{v:.6f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def render_svg(p: FourierSupport, spec: RenderSpec | None = None) -> str:
    """One closed polygon per layer (a dot for point-like layers); y points up as in a math figure."""
    spec = spec or RenderSpec()
    curves = {layer: layer_points(p, layer, spec) * np.array([1.0, -1.0]) for layer in spec.layers}
    stacked = np.concatenate(list(curves.values()))
    lo, hi = stacked.min(axis=0), stacked.max(axis=0)
    extent = float(max(hi[0] - lo[0], hi[1] - lo[1]))
    if extent == 0.0:
        extent = 1.0
    pad = 0.05 * extent
    lo, hi = lo - pad, hi + pad
    size = hi - lo
    size = np.where(size > 0, size, 2 * pad)
    stroke_width = 0.004 * extent
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(lo[0])} {_fmt(lo[1])} {_fmt(size[0])} {_fmt(size[1])}" '
        f'width="{_fmt(600 * size[0] / max(size))}" height="{_fmt(600 * size[1] / max(size))}">',
    ]
    for layer, pts in curves.items():
        style = spec.styles.get(layer, DEFAULT_STYLES[layer])
        stroke = style["stroke"]
        out.append(f'  <g id="layer-{layer}" class="layer">')
        spread = float(np.max(np.hypot(*(pts - pts[0]).T)))
        if spread <= 1e-12 * (1.0 + extent):
            out.append(f'    <circle cx="{_fmt(pts[0][0])}" cy="{_fmt(pts[0][1])}" '
                       f'r="{_fmt(0.01 * extent)}" fill="{stroke}"/>')
        else:
            coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
            dash = ""
            if style.get("dash"):
                # dash lengths are given in stroke widths
                dash = " ".join(_fmt(float(d) * stroke_width) for d in style["dash"].split())
                dash = f' stroke-dasharray="{dash}"'
            out.append(f'    <polygon points="{coords}" fill="none" stroke="{stroke}" '
                       f'stroke-width="{_fmt(stroke_width)}"{dash}/>')
        out.append("  </g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


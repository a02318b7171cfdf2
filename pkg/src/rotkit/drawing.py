"""Euler-free projection of pose axes to 2D drawing segments, plus SVG.

The head rotation is conjugated into image coordinates (y pointing down)
by T = diag(1, -1, 1) and its columns are orthographically projected onto
the image plane: the x/y/z axis directions become the red/green/blue
lines.  `reference_draw_axis` re-implements the endpoint arithmetic of
HopeNet's widely copied draw_axis() (which negates yaw before projecting);
the two routes agree and serve as mutual cross-checks.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence, Tuple
from xml.sax.saxutils import escape

import numpy as np

from .core import require_rotation

_T_W = np.diag([1.0, -1.0, 1.0])

AXIS_COLORS = ("#FF0000", "#00FF00", "#0000FF")

Segment = Tuple[Tuple[float, float], Tuple[float, float]]


class AxisProjection(NamedTuple):
    """Projected x/y/z axis directions, each a 2-vector with norm <= 1."""

    x_axis: np.ndarray
    y_axis: np.ndarray
    z_axis: np.ndarray


@dataclass(frozen=True)
class DrawSpec:
    """Where and how large to draw: segment endpoints are center + size * axis."""

    center: Tuple[float, float]
    size: float

    def __post_init__(self):
        cx, cy = self.center
        if not (math.isfinite(cx) and math.isfinite(cy)):
            raise ValueError("center must be finite")
        if not (math.isfinite(self.size) and self.size > 0):
            raise ValueError("size must be positive")


def project_axes(r) -> AxisProjection:
    """Project the axes of a rotation onto the image plane.

    No Euler angles are involved, so rotations with ambiguous Euler
    representations still draw identically.
    """
    a = require_rotation(r)
    d = _T_W @ a @ _T_W  # T is its own inverse
    return AxisProjection(d[:2, 0].copy(), d[:2, 1].copy(), d[:2, 2].copy())


def reference_draw_axis(e) -> AxisProjection:
    """Axis endpoints computed the way HopeNet's draw_axis() does.

    Takes a pitch-yaw-roll triple, negates the yaw, and evaluates the
    projected components directly from sines and cosines.
    """
    p, y, r = (float(v) for v in e)
    for v in (p, y, r):
        if not math.isfinite(v):
            raise ValueError("angles must be finite")
    yt = -y
    x1 = math.cos(yt) * math.cos(r)
    y1 = math.cos(p) * math.sin(r) + math.sin(p) * math.sin(yt) * math.cos(r)
    x2 = -math.cos(yt) * math.sin(r)
    y2 = math.cos(p) * math.cos(r) - math.sin(p) * math.sin(yt) * math.sin(r)
    x3 = math.sin(yt)
    y3 = -math.sin(p) * math.cos(yt)
    return AxisProjection(
        np.array([x1, y1]), np.array([x2, y2]), np.array([x3, y3])
    )


def segments(proj: AxisProjection, spec: DrawSpec) -> list[Segment]:
    """Line segments for the x (red), y (green), z (blue) axes.

    A frontal pose projects z to length zero; the blue segment is kept as
    a zero-length line so the element count stays stable.
    """
    cx, cy = float(spec.center[0]), float(spec.center[1])
    out = []
    for axis in (proj.x_axis, proj.y_axis, proj.z_axis):
        out.append(
            ((cx, cy), (cx + spec.size * float(axis[0]), cy + spec.size * float(axis[1])))
        )
    return out


def _num(v: float) -> str:
    return repr(float(v))


def render_svg(
    segs: Sequence[Segment],
    width: float,
    height: float,
    background_href: Optional[str] = None,
) -> str:
    """Deterministic SVG 1.1 document with one stroked line per segment.

    The optional background image is referenced by path only, never
    decoded.  Identical inputs produce byte-identical output.
    """
    if width <= 0 or height <= 0:
        raise ValueError("width and height must be positive")
    w, h = _num(width), _num(height)
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{w}" height="{h}" viewBox="0 0 {w} {h}">'
    ]
    if background_href is not None:
        href = escape(background_href, {'"': "&quot;"})
        parts.append(
            f'  <image href="{href}" x="0" y="0" width="{w}" height="{h}"/>'
        )
    for (a, b), color in zip(segs, AXIS_COLORS):
        parts.append(
            f'  <line x1="{_num(a[0])}" y1="{_num(a[1])}" '
            f'x2="{_num(b[0])}" y2="{_num(b[1])}" '
            f'stroke="{color}" stroke-width="2"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"

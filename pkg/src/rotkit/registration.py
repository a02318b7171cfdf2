"""Closed-form rigid registration and Panoptic camera composition.

Horn's absolute-orientation method recovers the least-squares rotation
between two corresponded point sets from the maximal eigenvector of a 4x4
symmetric quaternion matrix.  The Panoptic composition chains a fixed
reference rotation with a camera extrinsic and a Horn-recovered rotation
to express head pose in image space.
"""

import math
from dataclasses import dataclass

import numpy as np

from .core import ORTHO_TOL, _quat_to_matrix, require_rotation
from .eigen import jacobi_eigh

E_REF = np.diag([1.0, -1.0, -1.0])

# Relative eigenvalue cutoff for "the source points span a plane".
_RANK_RTOL = 1e-12


class DegenerateGeometryError(ValueError):
    """Source geometry does not pin down a unique rotation."""


def _as_points(obj, what: str) -> np.ndarray:
    pts = getattr(obj, "points", obj)
    a = np.asarray(pts, dtype=float)
    if a.ndim != 2 or a.shape[1] != 3:
        raise ValueError(f"{what} must be an (n, 3) point array")
    if a.shape[0] < 3:
        raise ValueError(f"{what} needs at least 3 points")
    if not np.isfinite(a).all():
        raise ValueError(f"{what} must be finite")
    return a


@dataclass(frozen=True)
class LandmarkSet:
    """A corresponded 3D point set (n >= 3, not all collinear)."""

    points: np.ndarray

    def __post_init__(self):
        a = _as_points(self.points, "points")
        object.__setattr__(self, "points", a)
        if not _spans_plane(a - a.mean(axis=0)):
            raise DegenerateGeometryError("points are collinear")


@dataclass(frozen=True)
class CameraExtrinsic:
    """The 3x3 rotation block of a camera extrinsic matrix."""

    rotation_part: np.ndarray

    def __post_init__(self):
        a = require_rotation(self.rotation_part, tol=1e-6, what="rotation_part")
        object.__setattr__(self, "rotation_part", a)


def _spans_plane(centered: np.ndarray) -> bool:
    scatter = centered.T @ centered
    scale = float(np.abs(scatter).max())
    if scale == 0.0:
        return False
    values, _ = jacobi_eigh(scatter / scale)
    return values[1] > _RANK_RTOL


def horn_rotation(src, dst) -> np.ndarray:
    """Least-squares rotation R minimizing sum ||dst_i - R src_i||^2.

    Centroids are removed from both sets first, so translation is ignored;
    only the rotation is recovered (no scale).
    """
    s = _as_points(src, "src")
    d = _as_points(dst, "dst")
    if s.shape != d.shape:
        raise ValueError("src and dst must have the same number of points")
    sc = s - s.mean(axis=0)
    dc = d - d.mean(axis=0)
    if not _spans_plane(sc):
        raise DegenerateGeometryError(
            "source points are collinear; rotation is not unique"
        )

    m = sc.T @ dc  # cross-covariance, m[a, b] = sum_i sc[i, a] dc[i, b]
    n4 = np.array(
        [
            [m[0, 0] + m[1, 1] + m[2, 2], m[1, 2] - m[2, 1], m[2, 0] - m[0, 2], m[0, 1] - m[1, 0]],
            [m[1, 2] - m[2, 1], m[0, 0] - m[1, 1] - m[2, 2], m[0, 1] + m[1, 0], m[0, 2] + m[2, 0]],
            [m[2, 0] - m[0, 2], m[0, 1] + m[1, 0], m[1, 1] - m[0, 0] - m[2, 2], m[1, 2] + m[2, 1]],
            [m[0, 1] - m[1, 0], m[0, 2] + m[2, 0], m[1, 2] + m[2, 1], m[2, 2] - m[0, 0] - m[1, 1]],
        ]
    )
    # Normalize so the absolute Jacobi tolerance is scale-independent.
    scale = float(np.abs(n4).max())
    if scale == 0.0:
        raise DegenerateGeometryError("cross-covariance is zero")
    _, vectors = jacobi_eigh(n4 / scale)
    w, x, y, z = (float(v) for v in vectors[:, 0])
    n = math.sqrt(w * w + x * x + y * y + z * z)
    return _quat_to_matrix(w / n, x / n, y / n, z / n)


def panoptic_rotation(extrinsic, r_horn) -> np.ndarray:
    """Head rotation in image space: E_ref @ C_extr @ R_Horn."""
    if isinstance(extrinsic, CameraExtrinsic):
        c = extrinsic.rotation_part
    else:
        c = require_rotation(extrinsic, tol=1e-6, what="extrinsic")
    h = require_rotation(r_horn, tol=ORTHO_TOL, what="r_horn")
    return E_REF @ c @ h

"""Independent oracles shared by the test modules.

Everything here is computed from scratch (scalar trig, hand-rolled loops,
or numpy.linalg) so the library paths under test are never used to
produce their own expected values.
"""

import math

import numpy as np


def naive_matmul(a, b):
    """3x3 matrix product by explicit loops."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    out = np.zeros((3, 3))
    for i in range(3):
        for j in range(3):
            acc = 0.0
            for k in range(3):
                acc += a[i, k] * b[k, j]
            out[i, j] = acc
    return out


def pyr_closed_form(p, y, r):
    """Expanded matrix of the intrinsic XYZ (pitch-yaw-roll) composition."""
    cp, sp = math.cos(p), math.sin(p)
    cy, sy = math.cos(y), math.sin(y)
    cr, sr = math.cos(r), math.sin(r)
    return np.array(
        [
            [cy * cr, cy * sr, -sy],
            [-cp * sr + sp * sy * cr, cp * cr + sp * sy * sr, sp * cy],
            [sp * sr + cp * sy * cr, -sp * cr + cp * sy * sr, cp * cy],
        ]
    )


def rpy_closed_form(r, p, y):
    """Expanded matrix of the intrinsic ZXY (roll-pitch-yaw) composition."""
    cp, sp = math.cos(p), math.sin(p)
    cy, sy = math.cos(y), math.sin(y)
    cr, sr = math.cos(r), math.sin(r)
    return np.array(
        [
            [sp * sr * sy + cr * cy, sr * cp, sp * sr * cy - sy * cr],
            [sp * sy * cr - sr * cy, cp * cr, sp * cr * cy + sr * sy],
            [sy * cp, -sp, cp * cy],
        ]
    )


def axis_projection_closed_form(p, y, r):
    """Projected x/y/z axis 2-vectors of a pitch-yaw-roll pose."""
    cp, sp = math.cos(p), math.sin(p)
    cy, sy = math.cos(y), math.sin(y)
    cr, sr = math.cos(r), math.sin(r)
    x = np.array([cy * cr, cp * sr - sp * sy * cr])
    yv = np.array([-cy * sr, cp * cr + sp * sy * sr])
    z = np.array([-sy, -sp * cy])
    return x, yv, z


def rotation_angle(a, b):
    """Angle separating two rotations, accurate down to machine precision.

    Uses atan2 of the skew-part norm (|sin|) against the trace-based
    cosine, so tiny angles are not lost to arccos round-off.
    """
    m = np.asarray(a, dtype=float) @ np.asarray(b, dtype=float).T
    s = 0.5 * math.sqrt(
        (m[2, 1] - m[1, 2]) ** 2 + (m[0, 2] - m[2, 0]) ** 2 + (m[1, 0] - m[0, 1]) ** 2
    )
    c = 0.5 * (float(m[0, 0] + m[1, 1] + m[2, 2]) - 1.0)
    return math.atan2(s, c)


def angle_diff(a, b):
    """Signed difference between two angles, wrapped to (-pi, pi]."""
    d = (a - b + math.pi) % (2.0 * math.pi) - math.pi
    return d + 2.0 * math.pi if d <= -math.pi else d


def random_euler_pyr(rng, yaw_margin=0.0):
    """Uniform pitch/roll in (-pi, pi] and yaw in the open primary range."""
    p = rng.uniform(-math.pi, math.pi)
    r = rng.uniform(-math.pi, math.pi)
    half = math.pi / 2 - yaw_margin
    y = rng.uniform(-half, half)
    return p, y, r

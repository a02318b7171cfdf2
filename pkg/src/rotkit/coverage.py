"""Dataset-coverage machinery: spiral pose generation, roll densification,
uniform random rotations, PCA of flattened matrices, and Euler-range stats.

A spiral sweep gives dense pitch-yaw coverage with exactly zero roll;
random rotate/flip augmentation then fills in the missing roll range.
PCA of the row-major flattened 3x3 matrices is the standard way to look
at how much of SO(3) a pose set actually covers.
"""

import math
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from .augment import pose_stream, random_augment
from .core import EulerPYR, _quat_to_matrix, compose_pyr, wrap_angle
from .eigen import jacobi_eigh
from .euler import canonical_pyr

_HALF_PI = math.pi / 2
# Keep spiral yaws clear of the Gimbal band so canonical rolls are exactly 0.
_YAW_CAP = _HALF_PI - 1e-3


@dataclass(frozen=True)
class SpiralSpec:
    """Spiral sweep parameters: pitch climbs linearly over `count` poses
    while yaw oscillates through `turns` full revolutions."""

    count: int = 1440
    turns: float = 8.0
    pitch_min: float = math.radians(-75.0)
    pitch_max: float = math.radians(75.0)

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("count must be >= 1")
        if not (math.isfinite(self.turns) and self.turns > 0):
            raise ValueError("turns must be positive")
        if not -_HALF_PI < self.pitch_min <= self.pitch_max < _HALF_PI:
            raise ValueError("pitch range must satisfy -pi/2 < min <= max < pi/2")


def _triangle_yaw(azimuth: float) -> float:
    """Fold an azimuth into a triangle wave over [-pi/2, pi/2]."""
    w = wrap_angle(azimuth)
    if w > _HALF_PI:
        w = math.pi - w
    elif w < -_HALF_PI:
        w = -math.pi - w
    return max(-_YAW_CAP, min(_YAW_CAP, w))


def spiral_rotations(spec: SpiralSpec) -> List[np.ndarray]:
    """Zero-roll rotations along a pitch-yaw spiral.

    Every output composes (pitch, yaw, 0), so canonical extraction
    returns a roll of exactly zero.
    """
    out = []
    for i in range(spec.count):
        t = i / (spec.count - 1) if spec.count > 1 else 0.0
        pitch = spec.pitch_min + t * (spec.pitch_max - spec.pitch_min)
        yaw = _triangle_yaw(t * spec.turns * 2.0 * math.pi)
        out.append(compose_pyr(EulerPYR(pitch, yaw, 0.0)))
    return out


def densify_rolls(
    poses: Sequence, budget: float, seed: int, multiplier: int = 2
) -> List[np.ndarray]:
    """Expand a pose list with random rotate/flip augmentations.

    Each input pose yields `multiplier` augmented copies, grouped in input
    order.  Draws come from per-index counter-based streams, so the output
    is independent of processing order and reproducible from the seed.
    """
    if multiplier < 1:
        raise ValueError("multiplier must be >= 1")
    out = []
    for i, r in enumerate(poses):
        rng = pose_stream(seed, i)
        for _ in range(multiplier):
            m, _ = random_augment(r, budget, rng)
            out.append(m)
    return out


def random_rotation(rng: np.random.Generator) -> np.ndarray:
    """Uniform (Haar) random rotation via a normalized Gaussian quaternion."""
    while True:
        q = rng.normal(size=4)
        n = math.sqrt(float(q @ q))
        if n > 1e-12:
            break
    w, x, y, z = (float(v) / n for v in q)
    return _quat_to_matrix(w, x, y, z)


def flatten9(r) -> np.ndarray:
    """Row-major flattening of a 3x3 matrix to a 9-vector."""
    a = np.asarray(r, dtype=float)
    if a.shape != (3, 3):
        raise ValueError("expected a 3x3 matrix")
    return a.reshape(9).copy()


@dataclass(frozen=True)
class PcaResult:
    """Top-k principal components of a vector set.

    components rows are orthonormal; explained_variance is descending.
    eigenvalues holds the full spectrum (descending) so the total variance
    can be checked against the covariance trace.  Each component's
    largest-magnitude entry is made positive so outputs are stable.
    """

    components: np.ndarray
    explained_variance: np.ndarray
    projected: np.ndarray
    mean: np.ndarray
    eigenvalues: np.ndarray

    def transform(self, vectors) -> np.ndarray:
        v = np.atleast_2d(np.asarray(vectors, dtype=float))
        return (v - self.mean) @ self.components.T


def pca_project(vectors: Iterable, k: int = 3) -> PcaResult:
    """PCA of a list of equal-length vectors via the Jacobi eigensolver.

    Mean-centers, forms the sample covariance (ddof=1), eigendecomposes
    it, and projects onto the top-k components.
    """
    x = np.asarray(vectors, dtype=float)
    if x.ndim != 2:
        raise ValueError("vectors must form a 2D array")
    n, d = x.shape
    if n < 2:
        raise ValueError("need at least 2 vectors")
    if not 1 <= k <= d:
        raise ValueError(f"k must be in [1, {d}]")
    mean = x.mean(axis=0)
    centered = x - mean
    cov = centered.T @ centered / (n - 1)
    values, vecs = jacobi_eigh(cov)
    values = np.maximum(values, 0.0)
    comps = np.empty((k, d))
    for j in range(k):
        v = vecs[:, j]
        if v[int(np.argmax(np.abs(v)))] < 0:
            v = -v
        comps[j] = v
    projected = centered @ comps.T
    return PcaResult(comps, values[:k].copy(), projected, mean, values)


@dataclass(frozen=True)
class EulerRangeStats:
    """Min/max of canonically extracted Euler angles, in degrees."""

    count: int
    pitch_deg: Tuple[float, float]
    yaw_deg: Tuple[float, float]
    roll_deg: Tuple[float, float]


def euler_range_stats(poses: Sequence) -> EulerRangeStats:
    """Per-angle min/max over a pose list via canonical extraction."""
    if len(poses) == 0:
        raise ValueError("pose list is empty")
    pitches, yaws, rolls = [], [], []
    for r in poses:
        e = canonical_pyr(r)
        pitches.append(math.degrees(e.pitch))
        yaws.append(math.degrees(e.yaw))
        rolls.append(math.degrees(e.roll))
    return EulerRangeStats(
        count=len(poses),
        pitch_deg=(min(pitches), max(pitches)),
        yaw_deg=(min(yaws), max(yaws)),
        roll_deg=(min(rolls), max(rolls)),
    )

"""JSON Lines pose label files.

One record per line:

    {"id": str, "image_path"?: str, "rotation": [9 floats, row-major],
     "euler_pyr_deg"?: [pitch, yaw, roll], "euler_rpy_deg"?: [roll, pitch, yaw],
     "gimbal"?: bool, "provenance"?: [op descriptors]}

The matrix is the source of truth; Euler fields are advisory views in
degrees, checked against the matrix on read.  Floats are serialized with
shortest round-trip decimals, so write-then-read reproduces rotations
bit-exactly.
"""

import json
import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from .core import compose_pyr, compose_rpy, geodesic_distance, is_rotation
from .euler import GIMBAL_EPS

# File-level SO(3) and Euler-consistency tolerance.  Looser than the
# in-memory default: labels may have been produced by other tooling.
FILE_ORTHO_TOL = 1e-6
EULER_CONSISTENCY_TOL = 1e-6
# Gimbal-flagged records store the canonical representative, whose yaw is
# snapped to +/-90 deg; allow the snap distance.
GIMBAL_CONSISTENCY_TOL = 2.0 * GIMBAL_EPS


class ValidationError(ValueError):
    """A record violates the label-file contract."""


class ParseError(ValidationError):
    """A line is not valid JSON or lacks required fields."""


@dataclass
class PoseRecord:
    """One labeled sample: id, rotation, optional views and provenance."""

    id: str
    rotation: np.ndarray
    image_path: Optional[str] = None
    euler_pyr_deg: Optional[Tuple[float, float, float]] = None
    euler_rpy_deg: Optional[Tuple[float, float, float]] = None
    gimbal: bool = False
    provenance: list = field(default_factory=list)


def _as_triple(value, what: str, rec_id: str) -> Tuple[float, float, float]:
    try:
        t = tuple(float(v) for v in value)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"record {rec_id!r}: bad {what}: {exc}") from None
    if len(t) != 3 or not all(math.isfinite(v) for v in t):
        raise ValidationError(f"record {rec_id!r}: {what} must be 3 finite numbers")
    return t


def _check_euler_view(rec_id: str, rotation, matrix, tol: float, what: str) -> None:
    dist = geodesic_distance(matrix, rotation, tol=FILE_ORTHO_TOL)
    if dist > tol:
        raise ValidationError(
            f"record {rec_id!r}: {what} disagrees with rotation "
            f"(geodesic {dist:.3e} rad > {tol:g})"
        )


def record_from_dict(obj: dict, where: str = "record") -> PoseRecord:
    """Validate one decoded JSON object into a PoseRecord."""
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected a JSON object")
    if "id" not in obj or "rotation" not in obj:
        raise ParseError(f"{where}: 'id' and 'rotation' are required")
    rec_id = str(obj["id"])

    raw = obj["rotation"]
    try:
        flat = [float(v) for v in raw]
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"record {rec_id!r}: bad rotation: {exc}") from None
    if len(flat) != 9 or not all(math.isfinite(v) for v in flat):
        raise ValidationError(f"record {rec_id!r}: rotation must be 9 finite numbers")
    rotation = np.array(flat).reshape(3, 3)
    if not is_rotation(rotation, FILE_ORTHO_TOL):
        raise ValidationError(
            f"record {rec_id!r}: rotation fails the SO(3) check at {FILE_ORTHO_TOL:g}"
        )

    gimbal = bool(obj.get("gimbal", False))
    tol = GIMBAL_CONSISTENCY_TOL if gimbal else EULER_CONSISTENCY_TOL

    euler_pyr_deg = None
    if obj.get("euler_pyr_deg") is not None:
        euler_pyr_deg = _as_triple(obj["euler_pyr_deg"], "euler_pyr_deg", rec_id)
        composed = compose_pyr([math.radians(v) for v in euler_pyr_deg])
        _check_euler_view(rec_id, rotation, composed, tol, "euler_pyr_deg")

    euler_rpy_deg = None
    if obj.get("euler_rpy_deg") is not None:
        euler_rpy_deg = _as_triple(obj["euler_rpy_deg"], "euler_rpy_deg", rec_id)
        composed = compose_rpy([math.radians(v) for v in euler_rpy_deg])
        _check_euler_view(rec_id, rotation, composed, tol, "euler_rpy_deg")

    provenance = obj.get("provenance") or []
    if not isinstance(provenance, list):
        raise ValidationError(f"record {rec_id!r}: provenance must be a list")

    image_path = obj.get("image_path")
    return PoseRecord(
        id=rec_id,
        rotation=rotation,
        image_path=None if image_path is None else str(image_path),
        euler_pyr_deg=euler_pyr_deg,
        euler_rpy_deg=euler_rpy_deg,
        gimbal=gimbal,
        provenance=provenance,
    )


def record_to_dict(rec: PoseRecord) -> dict:
    obj = {"id": rec.id}
    if rec.image_path is not None:
        obj["image_path"] = rec.image_path
    obj["rotation"] = [float(v) for v in np.asarray(rec.rotation).reshape(9)]
    if rec.euler_pyr_deg is not None:
        obj["euler_pyr_deg"] = [float(v) for v in rec.euler_pyr_deg]
    if rec.euler_rpy_deg is not None:
        obj["euler_rpy_deg"] = [float(v) for v in rec.euler_rpy_deg]
    if rec.gimbal:
        obj["gimbal"] = True
    if rec.provenance:
        obj["provenance"] = rec.provenance
    return obj


def read_labels(path) -> List[PoseRecord]:
    """Read a JSON Lines label file; blank lines are ignored.

    Raises ParseError with the line number for malformed lines and
    ValidationError naming the record id for contract violations.
    """
    records = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"{path}:{lineno}: invalid JSON: {exc.msg}") from None
            records.append(record_from_dict(obj, where=f"{path}:{lineno}"))
    return records


def write_labels(records, path) -> None:
    """Write records as JSON Lines (UTF-8, LF), deterministically."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for rec in records:
            fh.write(json.dumps(record_to_dict(rec), ensure_ascii=False))
            fh.write("\n")

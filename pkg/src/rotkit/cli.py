"""rotkit command line.

Subcommands operate on JSON Lines label files and emit labels, CSV, or
SVG.  Every command is a pure function of its inputs, flags and seed:
identical invocations produce byte-identical output files.  Exit codes:
0 success, 1 validation error, 2 I/O error.
"""

import argparse
import math
import os
import re
import sys
from dataclasses import replace

from .augment import AugmentOp, apply_augment, pose_stream, random_augment
from .coverage import SpiralSpec, euler_range_stats, flatten9, pca_project, spiral_rotations
from .drawing import DrawSpec, project_axes, render_svg, segments
from .euler import extract_pyr, extract_rpy
from .evaluate import mean_geodesic_error
from .labels import PoseRecord, ValidationError, read_labels, write_labels

_ID_SAFE = re.compile(r"[^A-Za-z0-9._-]")


def _resolve_seed(args) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get("ROTKIT_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValidationError(f"ROTKIT_SEED must be an integer, got {env!r}") from None
    return 0


def _fmt(v: float) -> str:
    return repr(float(v))


def cmd_augment(args) -> int:
    records = read_labels(args.input)
    seed = _resolve_seed(args)
    budget = math.radians(args.budget_deg)
    out, n_rotate, n_flip = [], 0, 0

    if args.mode in ("rotate", "flip"):
        if args.angle_deg is None:
            raise ValidationError(f"--angle-deg is required for mode {args.mode}")
        fixed_op = AugmentOp(args.mode, math.radians(args.angle_deg))
    else:
        fixed_op = None

    for index, rec in enumerate(records):
        rng = pose_stream(seed, index)
        for j in range(args.multiplier):
            if fixed_op is not None:
                rotation, op = apply_augment(rec.rotation, fixed_op), fixed_op
            else:
                rotation, op = random_augment(rec.rotation, budget, rng)
            if op.kind == "rotate":
                n_rotate += 1
            else:
                n_flip += 1
            new_id = rec.id if args.multiplier == 1 else f"{rec.id}#a{j}"
            out.append(
                PoseRecord(
                    id=new_id,
                    rotation=rotation,
                    image_path=rec.image_path,
                    provenance=rec.provenance + [op.as_dict()],
                )
            )
    write_labels(out, args.output)
    print(
        f"augment: {len(records)} records -> {len(out)} "
        f"({n_rotate} rotate, {n_flip} flip)"
    )
    return 0


def cmd_convert(args) -> int:
    records = read_labels(args.input)
    out, n_gimbal = [], 0
    for rec in records:
        if args.target == "matrix":
            new = replace(rec, euler_pyr_deg=None, euler_rpy_deg=None, gimbal=False)
        elif args.target == "euler_pyr":
            sol = extract_pyr(rec.rotation)
            gimbal = sol.kind != "regular"
            new = replace(
                rec,
                euler_pyr_deg=tuple(math.degrees(v) for v in sol.primary),
                gimbal=gimbal or rec.gimbal,
            )
        else:  # euler_rpy
            sol = extract_rpy(rec.rotation)
            gimbal = sol.kind != "regular"
            new = replace(
                rec,
                euler_rpy_deg=tuple(math.degrees(v) for v in sol.value),
                gimbal=gimbal or rec.gimbal,
            )
        n_gimbal += int(new.gimbal)
        out.append(new)
    write_labels(out, args.output)
    print(f"convert: {len(out)} records to {args.target} ({n_gimbal} gimbal)")
    return 0


def cmd_eval(args) -> int:
    pred_path, truth_path = args.input
    report = mean_geodesic_error(read_labels(pred_path), read_labels(truth_path))
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("id,geodesic_rad\n")
            for rec_id, dist in report.per_record:
                fh.write(f"{rec_id},{_fmt(dist)}\n")
    print(
        f"eval: n={len(report.per_record)} mean={report.mean:.12g} "
        f"median={report.median:.12g} max={report.max:.12g} (radians)"
    )
    return 0


def cmd_spiral(args) -> int:
    pitch_min, pitch_max = (math.radians(v) for v in args.pitch_range)
    spec = SpiralSpec(
        count=args.count, turns=args.turns, pitch_min=pitch_min, pitch_max=pitch_max
    )
    meta = {
        "kind": "spiral",
        "count": spec.count,
        "turns": spec.turns,
        "pitch_min_deg": args.pitch_range[0],
        "pitch_max_deg": args.pitch_range[1],
    }
    records = [
        PoseRecord(id=f"spiral_{i:06d}", rotation=r, provenance=[dict(meta, index=i)])
        for i, r in enumerate(spiral_rotations(spec))
    ]
    write_labels(records, args.output)
    print(f"spiral: wrote {len(records)} zero-roll poses")
    return 0


def cmd_pca(args) -> int:
    records = read_labels(args.input)
    if len(records) < 2:
        raise ValidationError("pca needs at least 2 records")
    vectors = [flatten9(rec.rotation) for rec in records]
    result = pca_project(vectors, k=3)
    with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("id,pc1,pc2,pc3\n")
        for rec, row in zip(records, result.projected):
            fh.write(f"{rec.id},{_fmt(row[0])},{_fmt(row[1])},{_fmt(row[2])}\n")
    ev = result.explained_variance
    print(
        f"pca: {len(records)} records, explained variance "
        f"{ev[0]:.6g} {ev[1]:.6g} {ev[2]:.6g}"
    )
    return 0


def cmd_stats(args) -> int:
    records = read_labels(args.input)
    stats = euler_range_stats([rec.rotation for rec in records])
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("angle,min_deg,max_deg\n")
            for name, (lo, hi) in (
                ("pitch", stats.pitch_deg),
                ("yaw", stats.yaw_deg),
                ("roll", stats.roll_deg),
            ):
                fh.write(f"{name},{_fmt(lo)},{_fmt(hi)}\n")
    print(
        f"stats: n={stats.count} "
        f"pitch [{stats.pitch_deg[0]:.6g}, {stats.pitch_deg[1]:.6g}] "
        f"yaw [{stats.yaw_deg[0]:.6g}, {stats.yaw_deg[1]:.6g}] "
        f"roll [{stats.roll_deg[0]:.6g}, {stats.roll_deg[1]:.6g}] deg"
    )
    return 0


def cmd_draw(args) -> int:
    records = read_labels(args.input)
    center = tuple(args.center) if args.center else (args.width / 2.0, args.height / 2.0)
    spec = DrawSpec(center=center, size=args.size)
    os.makedirs(args.output, exist_ok=True)
    for rec in records:
        segs = segments(project_axes(rec.rotation), spec)
        svg = render_svg(segs, args.width, args.height, background_href=rec.image_path)
        name = _ID_SAFE.sub("_", rec.id) + ".svg"
        with open(os.path.join(args.output, name), "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
    print(f"draw: wrote {len(records)} SVG files to {args.output}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rotkit", description="Head-pose rotation toolkit"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("augment", help="apply 2D rotate/flip augmentations to labels")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--mode", choices=("random", "rotate", "flip"), default="random")
    p.add_argument("--budget-deg", type=float, default=20.0,
                   help="random mode: rotation within +/-budget, flip line within [90-budget, 90]")
    p.add_argument("--angle-deg", type=float, default=None,
                   help="fixed angle for rotate/flip modes, degrees")
    p.add_argument("--multiplier", type=int, default=1,
                   help="augmented outputs per input record")
    p.add_argument("--seed", type=int, default=None,
                   help="random seed (falls back to ROTKIT_SEED, then 0)")
    p.set_defaults(func=cmd_augment)

    p = sub.add_parser("convert", help="populate a pose representation")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--target", choices=("matrix", "euler_pyr", "euler_rpy"), required=True)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("eval", help="mean geodesic error between two label files")
    p.add_argument("--input", nargs=2, metavar=("PREDICTIONS", "GROUND_TRUTH"), required=True)
    p.add_argument("--output", default=None, help="per-record CSV report")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("spiral", help="generate a zero-roll pitch-yaw spiral")
    p.add_argument("--output", required=True)
    p.add_argument("--count", type=int, default=1440)
    p.add_argument("--turns", type=float, default=8.0)
    p.add_argument("--pitch-range", type=float, nargs=2, metavar=("MIN_DEG", "MAX_DEG"),
                   default=(-75.0, 75.0))
    p.set_defaults(func=cmd_spiral)

    p = sub.add_parser("pca", help="project flattened rotations to 3D by PCA")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True, help="projection CSV")
    p.set_defaults(func=cmd_pca)

    p = sub.add_parser("stats", help="Euler range statistics of a label file")
    p.add_argument("--input", required=True)
    p.add_argument("--output", default=None, help="range CSV")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("draw", help="render axis overlays as SVG")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True, help="output directory")
    p.add_argument("--size", type=float, default=100.0)
    p.add_argument("--center", type=float, nargs=2, metavar=("X", "Y"), default=None)
    p.add_argument("--width", type=float, default=450.0)
    p.add_argument("--height", type=float, default=450.0)
    p.set_defaults(func=cmd_draw)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"rotkit: i/o error: {exc}", file=sys.stderr)
        return 2
    except (ValidationError, ValueError) as exc:
        print(f"rotkit: error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

"""Command-line interface.

Exit codes: 0 success, 2 usage error, 3 data error, 4 numeric failure.
Errors print one line on stderr as ``error: <category>: <message>``.
Every command is deterministic given its flags and seed.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import analysis, clustering, curvedepth, distance, registration
from .generators import SCHEMES, SchemeSpec, generate
from .io import RunConfig, read_curves, read_points, write_curves, write_table
from .pointdepth import point_depth, point_depth_random
from .sampling import ROLE_DIRS, build_reference, occurrence_indices, substream

__all__ = ["main"]


class NumericFailure(RuntimeError):
    pass


def _method_pair(text: str) -> tuple[str, int]:
    if text == "exact":
        return "exact", 100
    if text.startswith("random:"):
        k = int(text.split(":", 1)[1])
        if k < 1:
            raise ValueError("random:K needs K >= 1")
        return "random", k
    if text == "random":
        return "random", 100
    raise ValueError(f"invalid method {text!r}; use exact or random:K")


def _add_depth_options(p: argparse.ArgumentParser, default_m: int = 500) -> None:
    p.add_argument("--m", type=int, default=default_m,
                   help="Monte Carlo points per curve (default %(default)s)")
    p.add_argument("--seed", type=int, default=0, help="master seed")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--delta", type=float, default=None,
                   help="fixed halfspace-mass threshold in (0, 1/2)")
    g.add_argument("--delta-alpha", type=float, default=None,
                   help="exponent a of the schedule 1/(10 m^a) (default 1/8)")
    p.add_argument("--method", default="exact",
                   help="exact or random:K (default exact)")


def _run_config(args, m=None) -> RunConfig:
    method, k = _method_pair(args.method)
    return RunConfig(
        seed=args.seed,
        m=m if m is not None else args.m,
        delta=args.delta,
        delta_alpha=args.delta_alpha,
        method=method,
        n_directions=k,
    )


def _emit_table(path, header, rows) -> None:
    if path is None:
        write_table("/dev/stdout", header, rows)
    else:
        write_table(path, header, rows)


def _emit_json(path, obj) -> None:
    text = json.dumps(obj, indent=2) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _check_finite(values, what: str) -> None:
    if not np.all(np.isfinite(values)):
        raise NumericFailure(f"non-finite {what}; lower delta or raise m/K")


def _cmd_simulate(args) -> None:
    params = {}
    if args.with_mean:
        params["with_mean"] = True
    if args.vertices is not None:
        params["vertices"] = args.vertices
    spec = SchemeSpec(args.scheme, args.n, seed=args.seed, params=params)
    write_curves(generate(spec), args.out)


def _cmd_depth(args) -> None:
    rc = _run_config(args)
    cfg = rc.depth_config()
    sample = read_curves(args.curves)
    if args.query is not None:
        queries = read_curves(args.query)
        ref = build_reference(sample, rc.m, rc.seed)
        reports = [
            curvedepth.curve_depth_against(c, ref, rc.m, cfg, rc.seed, occ=occ)
            for c, occ in zip(queries, occurrence_indices(queries))
        ]
    else:
        reports = curvedepth.depth_all(sample, rc.m, cfg, rc.seed,
                                       leave_one_out=args.leave_one_out)
    _check_finite([r.depth for r in reports], "depth values")
    _emit_table(args.out, ["curve_id", "depth"],
                [[r.curve_id, r.depth] for r in reports])


def _cmd_pointdepth(args) -> None:
    mu = read_points(args.mu)
    q = read_points(args.q)
    x = np.array([float(v) for v in args.x.split(",")])
    cfg = _run_config(args, m=mu.shape[0]).depth_config()
    if cfg.method == "random":
        rng = substream(args.seed, ROLE_DIRS, "pointdepth")
        val = point_depth_random(x, mu, q, cfg, rng)
    else:
        val = point_depth(x, mu, q, cfg)
    sys.stdout.write(repr(float(val)) + "\n")


def _cmd_distance(args) -> None:
    a = read_curves(args.a)
    b = read_curves(args.b)
    if len(a) != 1 or len(b) != 1:
        raise ValueError("distance expects exactly one curve per file")
    d = distance.curve_distance(a[0], b[0], resample=args.resample,
                                orientation_free=args.orientation_free)
    sys.stdout.write(repr(float(d)) + "\n")


def _cmd_distmatrix(args) -> None:
    curves = read_curves(args.curves)
    mat = distance.curve_distance_matrix(curves, resample=args.resample,
                                         orientation_free=args.orientation_free)
    ids = [c.id for c in curves]
    rows = [[ids[i]] + [float(v) for v in mat[i]] for i in range(len(ids))]
    _emit_table(args.out, ["curve_id"] + ids, rows)


def _cmd_register(args) -> None:
    moving = read_curves(args.moving)
    target = read_curves(args.target)
    if len(moving) != 1 or len(target) != 1:
        raise ValueError("register expects exactly one curve per file")
    before = distance.curve_distance(moving[0], target[0], resample=100)
    transform, after = registration.register(
        moving[0], target[0], restarts=args.restarts, seed=args.seed)
    _check_finite([after], "registration distance")
    _emit_json(args.out, {
        "rotation": transform.rotation.tolist(),
        "translation": transform.translation.tolist(),
        "center": transform.center.tolist(),
        "distance_before": before,
        "distance_after": after,
    })


def _cmd_cluster(args) -> None:
    rc = _run_config(args, m=args.m)
    curves = read_curves(args.curves)
    part = clustering.ddclust(
        curves, args.k, lam=args.lam, t=args.t, seed=rc.seed, m=rc.m,
        cfg=rc.depth_config(), max_iter=args.max_iter,
    )
    _emit_table(args.out, ["curve_id", "cluster"],
                [[c.id, int(part.assignment[i])] for i, c in enumerate(curves)])
    if args.report is not None:
        _emit_json(args.report, {
            "total_cost": part.total_cost,
            "iterations": part.iterations,
            "observations": [
                {
                    "curve_id": c.id,
                    "cluster": int(part.assignment[i]),
                    "red": float(part.red[i]),
                    "sil": float(part.sil[i]),
                    "cost": float(part.cost[i]),
                }
                for i, c in enumerate(curves)
            ],
        })
    if args.plot is not None:
        from .plots import plot_clusters

        plot_clusters(curves, part.assignment, args.plot)


def _cmd_ddplot(args) -> None:
    rc = _run_config(args)
    s0 = read_curves(args.s0)
    s1 = read_curves(args.s1)
    points = analysis.dd_plot(s0, s1, rc.m, rc.depth_config(), rc.seed)
    _check_finite([p.d0 for p in points] + [p.d1 for p in points], "DD coordinates")
    _emit_table(args.out, ["curve_id", "label", "d0", "d1"],
                [[p.curve_id, p.label, p.d0, p.d1] for p in points])
    if args.plot is not None:
        from .plots import plot_dd

        rule = analysis.dd_linear_classifier(points) if args.rule else None
        plot_dd(points, args.plot, rule=rule)


def _cmd_wilcoxon(args) -> None:
    rc = _run_config(args)
    ref = read_curves(args.ref)
    s0 = read_curves(args.s0)
    s1 = read_curves(args.s1)
    res = analysis.wilcoxon_depth_test(ref, s0, s1, rc.m, rc.depth_config(), rc.seed)
    _check_finite([res.w, res.z, res.p_value], "test statistics")
    _emit_json(args.out, {"W": res.w, "z": res.z, "p": res.p_value})


def _cmd_outliers(args) -> None:
    rc = _run_config(args)
    curves = read_curves(args.curves)
    reports = curvedepth.depth_all(curves, rc.m, rc.depth_config(), rc.seed)
    _check_finite([r.depth for r in reports], "depth values")
    sizes = None
    if args.sizes is not None:
        sizes = tuple(int(s) for s in args.sizes.split(","))
    part = analysis.outlier_partition(reports, sizes=sizes, threshold=args.threshold)
    names = analysis.GROUP_NAMES
    _emit_table(args.out, ["curve_id", "group", "depth"],
                [[c.id, names[part.groups[i]], float(part.depths[i])]
                 for i, c in enumerate(curves)])
    if args.plot is not None:
        from .plots import plot_depth_curves

        plot_depth_curves(curves, part.depths, args.plot, groups=part.groups)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trajdepth",
        description="Data depth for unparameterized curves: depth, distance, "
                    "registration, clustering, and depth-based analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="generate a seeded curve sample")
    p.add_argument("--scheme", required=True, choices=sorted(SCHEMES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="curve file (.jsonl or .csv)")
    p.add_argument("--with-mean", action="store_true",
                   help="append the process mean curve (claeskens, cuevas)")
    p.add_argument("--vertices", type=int, default=None,
                   help="override circle discretization")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("depth", help="Monte Carlo curve depth")
    p.add_argument("--curves", required=True, help="sample curve file")
    p.add_argument("--query", default=None,
                   help="optional query curve file (default: score the sample)")
    p.add_argument("--leave-one-out", action="store_true")
    _add_depth_options(p)
    p.add_argument("--out", default=None, help="output CSV (default stdout)")
    p.set_defaults(func=_cmd_depth)

    p = sub.add_parser("pointdepth", help="depth of a single point")
    p.add_argument("--x", required=True, help="comma-separated coordinates")
    p.add_argument("--mu", required=True, help="CSV of mu points")
    p.add_argument("--q", required=True, help="CSV of reference points")
    _add_depth_options(p)
    p.set_defaults(func=_cmd_pointdepth)

    p = sub.add_parser("distance", help="distance between two curves")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--resample", type=int, default=None)
    p.add_argument("--orientation-free", action="store_true")
    p.set_defaults(func=_cmd_distance)

    p = sub.add_parser("distmatrix", help="pairwise distance matrix")
    p.add_argument("--curves", required=True)
    p.add_argument("--resample", type=int, default=None)
    p.add_argument("--orientation-free", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_distmatrix)

    p = sub.add_parser("register", help="rigid registration of one curve onto another")
    p.add_argument("--moving", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--restarts", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="output JSON (default stdout)")
    p.set_defaults(func=_cmd_register)

    p = sub.add_parser("cluster", help="depth/distance clustering")
    p.add_argument("--curves", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=float, default=0.5)
    p.add_argument("--t", type=float, default=0.0)
    p.add_argument("--max-iter", type=int, default=100)
    _add_depth_options(p, default_m=50)
    p.add_argument("--out", default=None, help="assignments CSV (default stdout)")
    p.add_argument("--report", default=None, help="cost report JSON path")
    p.add_argument("--plot", default=None, help="cluster figure path")
    p.set_defaults(func=_cmd_cluster)

    p = sub.add_parser("ddplot", help="depth-vs-depth plot of two samples")
    p.add_argument("--s0", required=True)
    p.add_argument("--s1", required=True)
    _add_depth_options(p)
    p.add_argument("--out", default=None)
    p.add_argument("--plot", default=None, help="scatter figure path")
    p.add_argument("--rule", action="store_true",
                   help="draw the best linear rule on the figure")
    p.set_defaults(func=_cmd_ddplot)

    p = sub.add_parser("wilcoxon", help="depth-based rank-sum two-sample test")
    p.add_argument("--ref", required=True)
    p.add_argument("--s0", required=True)
    p.add_argument("--s1", required=True)
    _add_depth_options(p)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_wilcoxon)

    p = sub.add_parser("outliers", help="depth-ranked outlier partition")
    p.add_argument("--curves", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--sizes", default=None,
                   help="four group sizes, e.g. 15,35,49,1")
    g.add_argument("--threshold", type=float, default=None,
                   help="depth below which a curve is an outlier")
    _add_depth_options(p)
    p.add_argument("--out", default=None)
    p.add_argument("--plot", default=None, help="depth-colored curves figure path")
    p.set_defaults(func=_cmd_outliers)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except NumericFailure as e:
        print(f"error: numeric: {e}", file=sys.stderr)
        return 4
    except (ValueError, KeyError) as e:
        print(f"error: data: {e}", file=sys.stderr)
        return 3
    except OSError as e:
        print(f"error: data: {e}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())

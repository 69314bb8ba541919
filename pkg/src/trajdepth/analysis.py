"""DD-plots, a linear DD-space classifier, the depth-based Wilcoxon test,
and depth-ranked outlier partitioning."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .curves import Curve
from .curvedepth import DepthReport, curve_depth_against
from .pointdepth import DepthConfig
from .sampling import build_reference, occurrence_indices

__all__ = [
    "DDPoint",
    "LinearRule",
    "OutlierPartition",
    "WilcoxonResult",
    "dd_linear_classifier",
    "dd_plot",
    "outlier_partition",
    "wilcoxon_depth_test",
]

GROUP_NAMES = ("outlier", "outer", "central", "deepest")


@dataclass(frozen=True)
class DDPoint:
    """One curve's pair of depths with respect to two samples."""

    curve_id: str
    label: int  # 0 or 1: which sample the curve came from
    d0: float
    d1: float


def dd_plot(sample0, sample1, m: int, cfg: DepthConfig, seed: int) -> list[DDPoint]:
    """Score every curve of both samples against both empirical laws.

    Each curve keeps one pair of query samples regardless of which
    reference it is scored against, so swapping the sample roles swaps the
    (d0, d1) coordinates exactly.
    """
    sample0, sample1 = list(sample0), list(sample1)
    if not sample0 or not sample1:
        raise ValueError("both samples must be nonempty")
    ref0 = build_reference(sample0, m, seed)
    ref1 = build_reference(sample1, m, seed)
    out = []
    for label, sample in ((0, sample0), (1, sample1)):
        occ = occurrence_indices(sample)
        for c, o in zip(sample, occ):
            r0 = curve_depth_against(c, ref0, m, cfg, seed, occ=o)
            r1 = curve_depth_against(c, ref1, m, cfg, seed, occ=o)
            out.append(DDPoint(c.id, label, r0.depth, r1.depth))
    return out


@dataclass(frozen=True)
class LinearRule:
    """Halfplane rule in DD space: predict 1 on w . (d0, d1) >= c.

    A zero normal encodes the constant rule that always predicts
    ``constant``.
    """

    w: tuple[float, float]
    c: float
    constant: int = 1
    train_errors: int = 0
    margin: float = 0.0

    def predict(self, d0, d1) -> np.ndarray:
        d0 = np.atleast_1d(np.asarray(d0, dtype=np.float64))
        d1 = np.atleast_1d(np.asarray(d1, dtype=np.float64))
        if self.w == (0.0, 0.0):
            return np.full(d0.shape, self.constant, dtype=np.int64)
        s = self.w[0] * d0 + self.w[1] * d1 - self.c
        return (s >= 0.0).astype(np.int64)


def _rule_stats(xy, labels, w, c):
    s = xy @ w - c
    pred = s >= 0.0
    errors = int(np.sum(pred != labels))
    nw = math.hypot(w[0], w[1])
    margin = float(np.min(np.abs(s)) / nw) if nw > 0 else 0.0
    return errors, margin


def dd_linear_classifier(points) -> LinearRule:
    """Best training line in DD space by exhaustive candidate search.

    Candidates are the lines through every pair of DD points (both
    orientations, boundary points fall on the >= side) and axis-parallel
    cuts at coordinate midpoints, plus the two constant rules. The rule
    with the fewest training errors wins; ties go to the larger geometric
    margin.
    """
    points = list(points)
    if not points:
        raise ValueError("need at least one DD point")
    xy = np.array([[p.d0, p.d1] for p in points])
    labels = np.array([p.label for p in points], dtype=bool)
    n = len(points)

    best = None  # (errors, -margin, rule)

    def consider(w, c):
        nonlocal best
        if w[0] == 0.0 and w[1] == 0.0:
            return
        errors, margin = _rule_stats(xy, labels, np.asarray(w, float), c)
        rule = LinearRule(
            w=(float(w[0]), float(w[1])), c=float(c),
            train_errors=errors, margin=margin,
        )
        key = (errors, -margin)
        if best is None or key < best[0]:
            best = (key, rule)

    # Constant rules.
    for const in (0, 1):
        errors = int(np.sum(labels != bool(const)))
        rule = LinearRule(w=(0.0, 0.0), c=0.0, constant=const,
                          train_errors=errors, margin=0.0)
        key = (errors, 0.0)
        if best is None or key < best[0]:
            best = (key, rule)

    # Axis-parallel cuts at midpoints between consecutive coordinates.
    for axis in (0, 1):
        vals = np.unique(xy[:, axis])
        cuts = (vals[:-1] + vals[1:]) / 2.0
        w = (1.0, 0.0) if axis == 0 else (0.0, 1.0)
        for c in cuts:
            consider(w, c)
            consider((-w[0], -w[1]), -c)

    # Lines through every pair of distinct DD points.
    for i in range(n):
        for j in range(i + 1, n):
            v = xy[j] - xy[i]
            if v[0] == 0.0 and v[1] == 0.0:
                continue
            w = (-v[1], v[0])
            c = w[0] * xy[i, 0] + w[1] * xy[i, 1]
            consider(w, c)
            consider((-w[0], -w[1]), -c)

    return best[1]


@dataclass(frozen=True)
class WilcoxonResult:
    w: float
    z: float
    p_value: float


def wilcoxon_depth_test(reference, s0, s1, m: int, cfg: DepthConfig,
                        seed: int) -> WilcoxonResult:
    """Rank-sum test on depths with respect to a reference curve sample.

    Depths of both groups are computed against the reference law; the
    statistic is the midrank sum of group 0 with the tie-corrected normal
    approximation for the two-sided p-value. Identical groups yield z = 0
    and p = 1.
    """
    s0, s1 = list(s0), list(s1)
    if not s0 or not s1:
        raise ValueError("both groups must be nonempty")
    ref = build_reference(list(reference), m, seed)
    depths = []
    for sample in (s0, s1):
        occ = occurrence_indices(sample)
        depths.append(np.array([
            curve_depth_against(c, ref, m, cfg, seed, occ=o).depth
            for c, o in zip(sample, occ)
        ]))
    n0, n1 = len(s0), len(s1)
    pooled = np.concatenate(depths)
    order = np.argsort(pooled, kind="stable")
    ranks = np.empty(pooled.size)
    ranks[order] = np.arange(1, pooled.size + 1, dtype=np.float64)
    # Midranks for ties.
    vals, inv, counts = np.unique(pooled, return_inverse=True, return_counts=True)
    sums = np.zeros(vals.size)
    np.add.at(sums, inv, ranks)
    ranks = (sums / counts)[inv]
    w = float(np.sum(ranks[:n0]))
    nn = n0 + n1
    expect = n0 * (nn + 1) / 2.0
    tie = float(np.sum(counts.astype(np.float64) ** 3 - counts))
    var = n0 * n1 / 12.0 * ((nn + 1) - tie / (nn * (nn - 1))) if nn > 1 else 0.0
    if var <= 0.0:
        return WilcoxonResult(w=w, z=0.0, p_value=1.0)
    z = (w - expect) / math.sqrt(var)
    p = math.erfc(abs(z) / math.sqrt(2.0))
    return WilcoxonResult(w=w, z=float(z), p_value=float(min(1.0, p)))


@dataclass(frozen=True)
class OutlierPartition:
    """Depth-ordered split into outliers / outer / central / deepest."""

    sizes: tuple[int, int, int, int]
    curve_ids: tuple[str, ...]          # input order
    groups: np.ndarray                  # (n,) group index, 0 = outliers
    depths: np.ndarray                  # (n,) input order

    def ids_in_group(self, g: int) -> list[str]:
        return [self.curve_ids[i] for i in np.flatnonzero(self.groups == g)]


def outlier_partition(reports: list[DepthReport], sizes=None,
                      threshold: float | None = None) -> OutlierPartition:
    """Partition curves into depth bands.

    Exactly one of ``sizes`` (four group sizes, shallowest first, summing
    to n) and ``threshold`` (outliers are the curves with depth strictly
    below it) must be given. In threshold mode the deepest curve stands
    alone and the remaining non-outliers split at the median into outer
    and central. Ties in depth resolve by input order.
    """
    if (sizes is None) == (threshold is None):
        raise ValueError("give exactly one of sizes and threshold")
    reports = list(reports)
    n = len(reports)
    depths = np.array([r.depth for r in reports])
    ids = tuple(r.curve_id for r in reports)
    order = np.argsort(depths, kind="stable")

    if sizes is not None:
        sizes = tuple(int(s) for s in sizes)
        if len(sizes) != 4 or any(s < 0 for s in sizes):
            raise ValueError("sizes must be four nonnegative integers")
        if sum(sizes) != n:
            raise ValueError(f"group sizes must sum to {n}")
    else:
        k_out = int(np.sum(depths < threshold))
        rest = n - k_out
        k_deep = 1 if rest >= 1 else 0
        rest -= k_deep
        k_outer = rest // 2
        sizes = (k_out, k_outer, rest - k_outer, k_deep)

    groups = np.empty(n, dtype=np.int64)
    start = 0
    for g, size in enumerate(sizes):
        groups[order[start:start + size]] = g
        start += size
    return OutlierPartition(sizes=sizes, curve_ids=ids, groups=groups, depths=depths)

"""Depth-and-distance clustering of curves by annealed reallocation.

Each observation carries a cost C_i = (1 - lambda) * Sil_i + lambda * ReD_i
mixing its silhouette width (distance structure) with its relative depth
(own-cluster depth minus best foreign-cluster depth). Observations whose
cost falls below a threshold are candidates for reallocation to their
highest-depth cluster; a candidate partition is accepted when the total
cost rises, or with a probability that decays as the inverse temperature
doubles.

Cluster-conditional depths use a reduced Monte Carlo size (default 50).
Every curve's reference stratum and query samples are drawn once per run
and reused, so identical cluster compositions give identical depth tables
and the whole procedure is deterministic per seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .curves import Curve
from .distance import curve_distance_matrix
from .pointdepth import DepthConfig
from .curvedepth import _point_depths
from .sampling import (
    ROLE_MISC,
    ROLE_QUERY_Y,
    ROLE_QUERY_Z,
    build_reference,
    occurrence_indices,
    sample_on_curve,
    substream,
)

__all__ = ["Partition", "ddclust", "relative_depth", "silhouette"]


@dataclass(frozen=True)
class Partition:
    """Converged cluster assignment with its per-observation cost terms."""

    assignment: np.ndarray   # (n,) cluster index in [0, K)
    red: np.ndarray          # (n,) relative depths
    sil: np.ndarray          # (n,) silhouette widths
    cost: np.ndarray         # (n,) per-observation costs
    total_cost: float        # mean of cost
    n_clusters: int
    iterations: int


def relative_depth(i: int, assignment, depth_table) -> float:
    """Own-cluster depth minus the best foreign-cluster depth."""
    assignment = np.asarray(assignment)
    depth_table = np.asarray(depth_table)
    k = assignment[i]
    own = depth_table[i, k]
    foreign = np.delete(depth_table[i], k)
    return float(own - foreign.min())


def silhouette(i: int, assignment, dist) -> float:
    """Silhouette width of observation i for the given assignment.

    The own-cluster average excludes i; a singleton cluster's own average
    is defined as 0, so singletons are pulled outward only through their
    relative depth.
    """
    assignment = np.asarray(assignment)
    dist = np.asarray(dist)
    k = assignment[i]
    own_members = np.flatnonzero((assignment == k) & (np.arange(assignment.size) != i))
    own = float(dist[i, own_members].mean()) if own_members.size else 0.0
    foreign = np.inf
    for l in np.unique(assignment):
        if l == k:
            continue
        members = np.flatnonzero(assignment == l)
        foreign = min(foreign, float(dist[i, members].mean()))
    denom = max(own, foreign)
    if denom == 0.0:
        return 0.0
    return (foreign - own) / denom


def _costs(assignment, depth_table, dist, lam):
    n = assignment.size
    red = np.array([relative_depth(i, assignment, depth_table) for i in range(n)])
    sil = np.array([silhouette(i, assignment, dist) for i in range(n)])
    cost = (1.0 - lam) * sil + lam * red
    return red, sil, cost


class _DepthTables:
    """Cluster-conditional curve depths with per-composition memoization."""

    def __init__(self, curves, m, cfg, seed):
        self.curves = curves
        self.m = m
        self.cfg = cfg
        self.seed = seed
        occ = occurrence_indices(curves)
        self.strata = build_reference(curves, m, seed).strata
        self.y = [
            sample_on_curve(c, m, substream(seed, ROLE_QUERY_Y, c.id, o))
            for c, o in zip(curves, occ)
        ]
        self.z = [
            sample_on_curve(c, m, substream(seed, ROLE_QUERY_Z, c.id, o))
            for c, o in zip(curves, occ)
        ]
        self._cache: dict[tuple[int, tuple[int, ...]], float] = {}

    def depth(self, i: int, members: tuple[int, ...]) -> float:
        key = (i, members)
        val = self._cache.get(key)
        if val is None:
            q = np.concatenate([self.strata[j].points for j in members], axis=0)
            vals = _point_depths(
                self.z[i].points, self.y[i].points, q, self.cfg,
                self.seed, self.curves[i].id, i,
            )
            val = float(vals.mean())
            self._cache[key] = val
        return val

    def table(self, assignment: np.ndarray, k: int) -> np.ndarray:
        comps = [tuple(np.flatnonzero(assignment == c)) for c in range(k)]
        n = assignment.size
        out = np.empty((n, k))
        for i in range(n):
            for c in range(k):
                out[i, c] = self.depth(i, comps[c])
        return out


def ddclust(curves, k: int, lam: float = 0.5, t: float = 0.0,
            beta0: float = -1.0, max_iter: int = 100, stable_iters: int = 5,
            m: int = 50, cfg: DepthConfig | None = None, seed: int = 0,
            resample: int = 100, paper_acceptance: bool = False) -> Partition:
    """Cluster curves into k groups by annealed depth/distance reallocation.

    Parameters
    ----------
    lam : float in [0, 1]
        Trade-off between silhouette (0) and relative depth (1).
    t : float <= 0
        Cost threshold below which an observation becomes a reallocation
        candidate.
    beta0 : float
        Initial inverse temperature; doubled every iteration. Worse moves
        are accepted with probability exp(-|beta| dC)/2, which decays over
        time; ``paper_acceptance`` switches to the source formula
        1 - exp(beta dC)/2 instead.
    stable_iters : int
        Stop after this many consecutive iterations without an accepted
        change (or after ``max_iter`` iterations).
    """
    curves = list(curves)
    n = len(curves)
    if not 2 <= k <= n:
        raise ValueError(f"need 2 <= k <= {n} clusters, got {k}")
    if not 0.0 <= lam <= 1.0:
        raise ValueError("lambda must lie in [0, 1]")
    if t > 0.0:
        raise ValueError("threshold t must be <= 0")
    cfg = cfg or DepthConfig()

    dist = curve_distance_matrix(curves, resample=resample)
    tables = _DepthTables(curves, m, cfg, seed)
    rng = substream(seed, ROLE_MISC, "ddclust")

    # Random initial partition with every cluster nonempty.
    assignment = rng.integers(0, k, size=n)
    for c in range(k):
        if not np.any(assignment == c):
            assignment[rng.integers(0, n)] = c
    while np.unique(assignment).size < k:
        assignment = rng.integers(0, k, size=n)

    beta = beta0
    quiet = 0
    iterations = 0
    tab = tables.table(assignment, k)
    while quiet < stable_iters and iterations < max_iter:
        _, _, cost = _costs(assignment, tab, dist, lam)
        total = float(cost.mean())
        pending = [i for i in range(n) if cost[i] < t]
        changed = False
        while pending:
            take = min(len(pending), max(1, math.ceil(len(pending) / 4)))
            picked = rng.choice(len(pending), size=take, replace=False)
            moved = sorted(pending[j] for j in picked)
            cand = assignment.copy()
            for i in moved:
                cand[i] = int(np.argmax(tab[i]))
            pending = [i for i in pending if i not in set(moved)]
            if np.array_equal(cand, assignment):
                continue
            if np.unique(cand).size < k:
                continue  # never empty a cluster
            cand_tab = tables.table(cand, k)
            _, _, cand_cost = _costs(cand, cand_tab, dist, lam)
            cand_total = float(cand_cost.mean())
            accept = cand_total > total
            if not accept:
                dc = total - cand_total
                if paper_acceptance:
                    p_acc = 1.0 - math.exp(beta * dc) / 2.0
                else:
                    p_acc = math.exp(-abs(beta) * dc) / 2.0
                accept = rng.random() < p_acc
            if accept:
                assignment, tab, total = cand, cand_tab, cand_total
                changed = True
        beta *= 2.0
        iterations += 1
        quiet = 0 if changed else quiet + 1

    red, sil, cost = _costs(assignment, tab, dist, lam)
    return Partition(
        assignment=assignment,
        red=red,
        sil=sil,
        cost=cost,
        total_cost=float(cost.mean()),
        n_clusters=k,
        iterations=iterations,
    )

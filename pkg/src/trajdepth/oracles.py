"""Independent oracles: closed-form depths for special curve families and
brute-force counterparts of the fast kernels.

The closed forms evaluate published expressions for degenerate families
(collinear segments, parallel segments, star segments, concentric
circles). The brute-force point-depth oracle enumerates halfplane
candidates directly from point geometry, and the distance oracle is the
textbook discrete Frechet dynamic program; both stay independent of the
production code paths they verify.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.integrate import quad

from .curves import Curve

__all__ = [
    "oracle_segments_line",
    "oracle_segments_line_point",
    "oracle_parallel_segment",
    "oracle_star_point",
    "oracle_star_population",
    "oracle_circle_population",
    "oracle_circle_sample",
    "oracle_point_depth_bruteforce",
    "oracle_point_depth_bruteforce_3d",
    "oracle_distance_dp",
]


# ---------------------------------------------------------------------------
# Segments on a line


def oracle_segments_line(k: int, n: int) -> float:
    """Depth of the k-th of n disjoint collinear segments (1-based).

    End segments score 1/n; interior ones add the entropy-like term in
    t_k = (k-1)/(n-1). As n grows the value at t_k tends to the Shannon
    entropy of a Bernoulli(t_k).
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    if k in (1, n):
        return 1.0 / n
    t = (k - 1) / (n - 1)
    return 1.0 / n - (n - 1) / n * math.log((1.0 - t) ** (1.0 - t) * t**t)


def oracle_segments_line_point(k: int, n: int, t: float) -> float:
    """Point depth at arc-length fraction t along the k-th segment."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    if not 0.0 <= t <= 1.0:
        raise ValueError("t must lie in [0, 1]")
    if k in (1, n):
        return 1.0 / n
    tk = (k - 1) / (n - 1)
    if t >= tk:
        return (t + (n - 1) * tk) / (n * t)
    return (1.0 - t + (n - 1) * (1.0 - tk)) / (n * (1.0 - t))


# ---------------------------------------------------------------------------
# Parallel segments on the unit square


def oracle_parallel_segment(y: float) -> float:
    """Population depth of the horizontal unit segment at height y."""
    if not 0.0 <= y <= 1.0:
        raise ValueError("y must lie in [0, 1]")
    return min(y, 1.0 - y)


# ---------------------------------------------------------------------------
# Star segments

def _star_q(rho: float) -> float:
    # Mass, under the star mixture, of the halfplane at distance rho from
    # the center on the side away from it: a random unit ray at angle g to
    # the line normal contributes max(0, 1 - rho/cos g).
    if rho >= 1.0:
        return 0.0
    if rho <= 0.0:
        return 0.5
    c = math.sqrt(1.0 - rho * rho)
    return (math.acos(rho) - rho * math.log((1.0 + c) / rho)) / math.pi


def oracle_star_point(t: float) -> float:
    """Point depth at distance t along any star segment (population law)."""
    if not 0.0 <= t <= 1.0:
        raise ValueError("t must lie in [0, 1]")
    if t == 0.0:
        return 0.5
    if t == 1.0:
        return 0.0
    best = 0.5
    # Candidate boundary lines through the point at angle a to its own
    # segment; both families are symmetric in a, so a in (0, pi/2] covers
    # everything. Golden-section refinement after a coarse scan.

    def far_ratio(a: float) -> float:
        return _star_q(t * math.sin(a)) / (1.0 - t)

    def near_ratio(a: float) -> float:
        return (1.0 - _star_q(t * math.sin(a))) / t

    for fn in (far_ratio, near_ratio):
        best = min(best, _scan_min(fn, 1e-9, math.pi / 2))
    return best


def _scan_min(fn, lo: float, hi: float, coarse: int = 2000) -> float:
    grid = np.linspace(lo, hi, coarse)
    vals = np.array([fn(a) for a in grid])
    i = int(np.argmin(vals))
    a, b = grid[max(0, i - 1)], grid[min(coarse - 1, i + 1)]
    phi = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = b - phi * (b - a)
    x2 = a + phi * (b - a)
    f1, f2 = fn(x1), fn(x2)
    for _ in range(80):
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - phi * (b - a)
            f1 = fn(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + phi * (b - a)
            f2 = fn(x2)
    return min(float(vals[i]), f1, f2)


def oracle_star_population() -> float:
    """Population depth shared by all star segments: the integral of the
    point depth over the segment (about 0.255)."""
    val, _ = quad(oracle_star_point, 0.0, 1.0, limit=200, epsabs=1e-6)
    return float(val)


# ---------------------------------------------------------------------------
# Concentric circles


def _circle_chord_mass(rho: float, radius: float) -> float:
    # Fraction of a circle of given radius inside the halfplane at
    # distance rho from the common center, on the far side.
    if radius <= rho:
        return 0.0
    return math.acos(rho / radius) / math.pi


def _circle_q_far(rho: float) -> float:
    # Average far-halfplane mass over radii ~ U(0,1): integral of
    # acos(rho/R)/pi over R in (rho, 1).
    if rho >= 1.0:
        return 0.0
    if rho <= 0.0:
        return 0.5
    s = math.sqrt(1.0 - rho * rho)
    return (math.acos(rho) - rho * math.log((1.0 + s) / rho)) / math.pi


def oracle_circle_population(r: float) -> float:
    """Population depth of the circle of radius r among U(0,1) radii."""
    if r <= 0.0:
        raise ValueError("radius must be positive")
    if r >= 1.0:
        return 0.0

    def far_ratio(a: float) -> float:
        # Boundary line at distance r sin(a); own-circle far mass is
        # acos(sin a)/pi = (pi - 2a)/(2 pi).
        rho = r * math.sin(a)
        return 2.0 * math.pi * _circle_q_far(rho) / (math.pi - 2.0 * a)

    def near_ratio(a: float) -> float:
        rho = r * math.sin(a)
        return 2.0 * math.pi * (1.0 - _circle_q_far(rho)) / (math.pi + 2.0 * a)

    best = 1.0
    best = min(best, _scan_min(far_ratio, 1e-9, math.pi / 2 - 1e-12, coarse=10000))
    best = min(best, _scan_min(near_ratio, 1e-9, math.pi / 2, coarse=10000))
    return best


def oracle_circle_sample(r: float, radii) -> float:
    """Sample depth of the circle of radius r among observed radii."""
    if r <= 0.0:
        raise ValueError("radius must be positive")
    radii = np.asarray(radii, dtype=np.float64)
    n = radii.size
    if n == 0:
        raise ValueError("need at least one sample radius")
    if r >= radii.max():
        return 0.0

    def q_far(rho: float) -> float:
        inside = radii > rho
        if not np.any(inside):
            return 0.0
        return float(np.sum(np.arccos(rho / radii[inside])) / math.pi) / n

    def far_ratio(a: float) -> float:
        rho = r * math.sin(a)
        return 2.0 * math.pi * q_far(rho) / (math.pi - 2.0 * a)

    def near_ratio(a: float) -> float:
        rho = r * math.sin(a)
        return 2.0 * math.pi * (1.0 - q_far(rho)) / (math.pi + 2.0 * a)

    best = 1.0
    best = min(best, _scan_min(far_ratio, 1e-9, math.pi / 2 - 1e-12, coarse=10000))
    best = min(best, _scan_min(near_ratio, 1e-9, math.pi / 2, coarse=10000))
    return best


# ---------------------------------------------------------------------------
# Brute-force point depth


def _wrap_angle(a: np.ndarray) -> np.ndarray:
    out = np.mod(a + math.pi, 2.0 * math.pi) - math.pi
    out[out <= -math.pi] = math.pi
    return out


def _split_origin(pts: np.ndarray, x: np.ndarray):
    rel = pts - x
    at = np.all(rel == 0.0, axis=1)
    return rel[~at], int(at.sum())


def _ratio_for_direction(u, rel_mu, rel_q, n_mu, n_q, mu_orig, q_orig, delta):
    cm = int(np.sum(rel_mu @ u >= 0.0)) + mu_orig
    cq = int(np.sum(rel_q @ u >= 0.0)) + q_orig
    if cq == 0:
        return 0.0, True
    mu_frac = cm / n_mu
    if mu_frac > delta:
        return (cq / n_q) / mu_frac, False
    return np.inf, False


def oracle_point_depth_bruteforce(x, mu_pts, q_pts, delta: float) -> float:
    """Exhaustive planar point depth: every breakpoint halfplane (boundary
    through a data point, evaluated via exact perpendicular directions) and
    every open arc between breakpoints (evaluated at angular midpoints)."""
    x = np.asarray(x, dtype=np.float64).reshape(2)
    mu = np.asarray(getattr(mu_pts, "points", mu_pts), dtype=np.float64)
    q = np.asarray(getattr(q_pts, "points", q_pts), dtype=np.float64)
    rel_mu, mu_orig = _split_origin(mu, x)
    rel_q, q_orig = _split_origin(q, x)
    pooled = np.concatenate([rel_mu, rel_q], axis=0)

    candidates = []
    if pooled.shape[0] == 0:
        candidates.append(np.array([1.0, 0.0]))
    else:
        for p in pooled:
            u = np.array([-p[1], p[0]])
            candidates.append(u)
            candidates.append(-u)
        ang = np.arctan2(pooled[:, 1], pooled[:, 0])
        crit = np.sort(np.unique(_wrap_angle(
            np.concatenate([ang + math.pi / 2.0, ang - math.pi / 2.0])
        )))
        mids = (crit[:-1] + crit[1:]) / 2.0
        wrap_mid = crit[-1] + (crit[0] + 2.0 * math.pi - crit[-1]) / 2.0
        for f in np.concatenate([mids, [wrap_mid]]):
            candidates.append(np.array([math.cos(f), math.sin(f)]))

    best = np.inf
    for u in candidates:
        r, zero = _ratio_for_direction(
            u, rel_mu, rel_q, mu.shape[0], q.shape[0], mu_orig, q_orig, delta
        )
        if zero:
            return 0.0
        best = min(best, r)
    return float(best)


def oracle_point_depth_bruteforce_3d(x, mu_pts, q_pts, delta: float,
                                     n_random: int = 100_000,
                                     seed: int = 0) -> float:
    """Upper bound on the spatial point depth: all planes spanned by the
    query and a pair of data points, plus dense random directions."""
    x = np.asarray(x, dtype=np.float64).reshape(3)
    mu = np.asarray(getattr(mu_pts, "points", mu_pts), dtype=np.float64)
    q = np.asarray(getattr(q_pts, "points", q_pts), dtype=np.float64)
    rel_mu, mu_orig = _split_origin(mu, x)
    rel_q, q_orig = _split_origin(q, x)
    pooled = np.concatenate([rel_mu, rel_q], axis=0)
    npool = pooled.shape[0]

    dirs = []
    for i in range(npool):
        for j in range(i + 1, npool):
            u = np.cross(pooled[i], pooled[j])
            if np.any(u != 0.0):
                dirs.append(u)
                dirs.append(-u)
    rng = np.random.default_rng(seed)
    rand = rng.standard_normal((n_random, 3))
    u_all = np.concatenate([np.array(dirs).reshape(-1, 3), rand], axis=0)

    smu = rel_mu @ u_all.T >= 0.0
    sq = rel_q @ u_all.T >= 0.0
    cm = smu.sum(axis=0) + mu_orig
    cq = sq.sum(axis=0) + q_orig
    if np.any(cq == 0):
        return 0.0
    mu_frac = cm / mu.shape[0]
    ok = mu_frac > delta
    if not np.any(ok):
        return np.inf
    return float(np.min((cq[ok] / q.shape[0]) / mu_frac[ok]))


# ---------------------------------------------------------------------------
# Discrete Frechet dynamic program


def oracle_distance_dp(c1, c2) -> float:
    """Textbook discrete Frechet recurrence on the vertex sequences."""
    a = c1.vertices if isinstance(c1, Curve) else np.asarray(c1, dtype=np.float64)
    b = c2.vertices if isinstance(c2, Curve) else np.asarray(c2, dtype=np.float64)
    diff = a[:, None, :] - b[None, :, :]
    d = np.sqrt(np.sum(diff * diff, axis=2))
    m1, m2 = d.shape
    f = np.empty((m1, m2))
    f[0, 0] = d[0, 0]
    for j in range(1, m2):
        f[0, j] = max(f[0, j - 1], d[0, j])
    for i in range(1, m1):
        f[i, 0] = max(f[i - 1, 0], d[i, 0])
        for j in range(1, m2):
            f[i, j] = max(d[i, j], min(f[i - 1, j], f[i, j - 1], f[i - 1, j - 1]))
    return float(f[m1 - 1, m2 - 1])

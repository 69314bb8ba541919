"""Event-sweep core for the exact halfplane ratio minimum.

Computes, for a query point, the infimum over closed halfplanes H through
it of Q(H)/mu(H), restricted to the family where Q(H) = 0 or mu(H) >
delta, with the conventions a/0 = +inf (a > 0) and 0/0 = 0.

The sweep walks the boundary-direction circle once. Counts change only
where the boundary line passes through a data point, so the infimum is the
minimum over two kinds of candidates: closed halfplanes at those
breakpoints (boundary points included) and open arcs between them. Points
coincident with the query lie in every closed halfplane and enter every
count.

The angle preparation (subtraction, arctangent, sort) is vectorized in
numpy, which owns the n log n part; the compiled sweep is linear. The same
routine serves as the 2D slice of the exact 3D kernel: points on the
rotation axis arrive as above/below counts, and every open arc is then
evaluated three ways (tilted toward either side of the axis and exactly on
the axis plane), which together enumerate every cell of the 3D direction
arrangement. Events whose positions round one ulp apart split into
adjacent candidates whose count vectors are still genuine halfplane
values, so the minimum is unaffected.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

__all__ = ["min_ratio_2d", "batch_depth_2d"]


@njit(cache=True, inline="always")
def _eval(cm, cq, vmu, vq, mu_orig, q_orig, n_mu, n_q, delta, best):
    # Fold one candidate count pair into the running minimum; -1.0 signals
    # a zero-Q halfplane (the depth is then exactly 0).
    total_m = cm + mu_orig + vmu
    total_q = cq + q_orig + vq
    if total_q == 0:
        return -1.0
    mu_frac = total_m / n_mu
    if mu_frac > delta:
        r = (total_q / n_q) / mu_frac
        if r < best:
            best = r
    return best


@njit(cache=True, nogil=True)
def _sweep_sorted(ths, mus, n_mu, n_q, delta,
                  mu_orig, q_orig, mu_above, mu_below, q_above, q_below):
    """Linear pass over sorted point angles in (-pi, pi].

    ``ths`` are the pooled angles about the query, ascending; ``mus``
    flags which belong to the mu sample. Returns the minimum thresholded
    ratio, 0.0 on a zero-Q halfplane, +inf if nothing is admissible.
    """
    n = ths.shape[0]
    axis = mu_above + mu_below + q_above + q_below > 0
    ab_mu = mu_above + mu_below
    ab_q = q_above + q_below
    best = np.inf

    if n == 0:
        best = _eval(0, 0, ab_mu, ab_q, mu_orig, q_orig, n_mu, n_q, delta, best)
        if best < 0.0:
            return 0.0
        if axis:
            best = _eval(0, 0, mu_above, q_above, mu_orig, q_orig, n_mu, n_q, delta, best)
            if best < 0.0:
                return 0.0
            best = _eval(0, 0, mu_below, q_below, mu_orig, q_orig, n_mu, n_q, delta, best)
            if best < 0.0:
                return 0.0
        return best

    # Initial window [-pi, 0]: angles <= 0 are inside.
    split = np.searchsorted(ths, 0.0, side="right")
    cm = 0
    for i in range(split):
        if mus[i]:
            cm += 1
    cq = split - cm

    # A point at angle t is inside window [s, s + pi] for sweep positions
    # s in [t - pi, t]: it enters at t - pi (wrapped into (-pi, pi]) and
    # exits after t. Entry order is therefore a rotation of the sorted
    # angles: first those with t > 0 (entry position t - pi), then the
    # rest (entry position t + pi).
    n_hi = n - split
    i = 0  # entry cursor (rotated indexing)
    j = 0  # exit cursor
    while i < n or j < n:
        if i < n:
            base = split + i if i < n_hi else i - n_hi
            pe = ths[base] - math.pi if i < n_hi else ths[base] + math.pi
        else:
            pe = np.inf
        px = ths[j] if j < n else np.inf
        p = pe if pe <= px else px

        while i < n and pe == p:
            if mus[base]:
                cm += 1
            else:
                cq += 1
            i += 1
            if i < n:
                base = split + i if i < n_hi else i - n_hi
                pe = ths[base] - math.pi if i < n_hi else ths[base] + math.pi

        # Closed halfplane whose boundary touches the points at p.
        best = _eval(cm, cq, ab_mu, ab_q, mu_orig, q_orig, n_mu, n_q, delta, best)
        if best < 0.0:
            return 0.0

        while j < n and ths[j] == p:
            if mus[j]:
                cm -= 1
            else:
                cq -= 1
            j += 1

        # Open arc between this breakpoint and the next.
        best = _eval(cm, cq, ab_mu, ab_q, mu_orig, q_orig, n_mu, n_q, delta, best)
        if best < 0.0:
            return 0.0
        if axis:
            best = _eval(cm, cq, mu_above, q_above, mu_orig, q_orig, n_mu, n_q, delta, best)
            if best < 0.0:
                return 0.0
            best = _eval(cm, cq, mu_below, q_below, mu_orig, q_orig, n_mu, n_q, delta, best)
            if best < 0.0:
                return 0.0

    return best


def min_ratio_2d(mu_rel, q_rel, n_mu, n_q, delta,
                 mu_orig, q_orig, mu_above, mu_below, q_above, q_below):
    """Exact minimum of the thresholded halfplane ratio at the origin.

    ``mu_rel`` and ``q_rel`` hold the in-plane points relative to the
    query with origin-coincident rows already removed; the denominators
    ``n_mu``/``n_q`` count all points including origin and axis ones.
    """
    a = mu_rel.shape[0]
    b = q_rel.shape[0]
    th = np.empty(a + b)
    np.arctan2(mu_rel[:, 1], mu_rel[:, 0], out=th[:a])
    np.arctan2(q_rel[:, 1], q_rel[:, 0], out=th[a:])
    th[th <= -math.pi] = math.pi
    labels = np.zeros(a + b, dtype=np.bool_)
    labels[:a] = True
    order = np.argsort(th)
    return float(_sweep_sorted(
        th[order], labels[order], n_mu, n_q, delta,
        mu_orig, q_orig, mu_above, mu_below, q_above, q_below,
    ))


def batch_depth_2d(zs, mu, q, delta):
    """Exact 2D point depth at every row of ``zs`` against fixed samples."""
    a = mu.shape[0]
    b = q.shape[0]
    pooled = np.concatenate([mu, q], axis=0)
    labels = np.zeros(a + b, dtype=np.bool_)
    labels[:a] = True
    px = pooled[:, 0]
    py = pooled[:, 1]
    out = np.empty(zs.shape[0])
    for t in range(zs.shape[0]):
        rx = px - zs[t, 0]
        ry = py - zs[t, 1]
        th = np.arctan2(ry, rx)
        orig = (rx == 0.0) & (ry == 0.0)
        labs = labels
        morig = 0
        qorig = 0
        if orig.any():
            keep = ~orig
            morig = int(np.sum(orig & labels))
            qorig = int(np.sum(orig)) - morig
            th = th[keep]
            labs = labels[keep]
        th[th <= -math.pi] = math.pi
        order = np.argsort(th)
        out[t] = _sweep_sorted(
            th[order], labs[order], a, b, delta, morig, qorig, 0, 0, 0, 0
        )
    return out

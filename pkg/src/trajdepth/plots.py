"""Matplotlib figure emission for the CLI report paths.

Figures are written to files (format by extension; SVG works well for the
vector output these plots are). Depth maps to the usual yellow-to-red
ramp, deepest darkest.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

__all__ = ["plot_dd", "plot_depth_curves", "plot_clusters"]

DEPTH_CMAP = "autumn_r"


def plot_dd(points, path, rule=None) -> None:
    """Scatter of (d0, d1) pairs, one marker per sample label."""
    fig, ax = plt.subplots(figsize=(5, 5))
    d0 = np.array([p.d0 for p in points])
    d1 = np.array([p.d1 for p in points])
    lab = np.array([p.label for p in points])
    ax.scatter(d0[lab == 0], d1[lab == 0], marker="o", facecolors="none",
               edgecolors="tab:red", label="sample 0")
    ax.scatter(d0[lab == 1], d1[lab == 1], marker="+", color="tab:blue",
               label="sample 1")
    top = max(1e-9, d0.max(), d1.max()) * 1.05
    ax.plot([0, top], [0, top], color="0.7", lw=0.8, zorder=0)
    if rule is not None and rule.w != (0.0, 0.0):
        xs = np.linspace(0.0, top, 200)
        wx, wy = rule.w
        if wy != 0.0:
            ax.plot(xs, (rule.c - wx * xs) / wy, color="tab:green", lw=1.2)
        else:
            ax.axvline(rule.c / wx, color="tab:green", lw=1.2)
    ax.set_xlim(0, top)
    ax.set_ylim(0, top)
    ax.set_xlabel("depth w.r.t. sample 0")
    ax.set_ylabel("depth w.r.t. sample 1")
    ax.legend(loc="best", frameon=False)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def plot_depth_curves(curves, depths, path, groups=None) -> None:
    """Curves colored by depth (yellow shallow, red deep); optional outlier
    groups drawn with distinct line width."""
    fig, ax = plt.subplots(figsize=(6, 5))
    depths = np.asarray(depths, dtype=float)
    lo, hi = float(depths.min()), float(depths.max())
    span = hi - lo if hi > lo else 1.0
    cmap = plt.get_cmap(DEPTH_CMAP)
    order = np.argsort(depths)
    for i in order:
        c = curves[i]
        xy = c.vertices if c.dim == 2 else np.column_stack(
            (np.arange(c.n_vertices), c.vertices[:, 0]))
        lw = 1.0
        if groups is not None and groups[i] == 0:
            lw = 1.8
        ax.plot(xy[:, 0], xy[:, 1], color=cmap((depths[i] - lo) / span), lw=lw)
    sm = plt.cm.ScalarMappable(cmap=cmap, norm=plt.Normalize(lo, hi))
    fig.colorbar(sm, ax=ax, label="depth")
    ax.set_aspect("auto")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def plot_clusters(curves, assignment, path) -> None:
    """Curves colored by cluster index."""
    fig, ax = plt.subplots(figsize=(6, 5))
    assignment = np.asarray(assignment)
    cmap = plt.get_cmap("tab10")
    for i, c in enumerate(curves):
        xy = c.vertices if c.dim == 2 else np.column_stack(
            (np.arange(c.n_vertices), c.vertices[:, 0]))
        ax.plot(xy[:, 0], xy[:, 1], color=cmap(int(assignment[i]) % 10), lw=1.0)
    ax.set_aspect("auto")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)

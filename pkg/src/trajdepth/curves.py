"""Polyline curves: length, arc-length parametrization, similarity transforms.

A curve is stored as an ordered list of vertices in R^d. Consecutive
duplicate vertices are collapsed at construction because they carry zero
length and would corrupt segment-proportional sampling weights. A curve
whose total chordal length is zero (a single point) is flagged trivial and
treated as a Dirac mass everywhere downstream.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "Curve",
    "length",
    "point_at",
    "points_at",
    "apply_similarity",
    "reverse",
]

ORTHO_TOL = 1e-10


@dataclass(frozen=True)
class Curve:
    """An unparameterized curve observed as a polyline in R^d.

    Parameters
    ----------
    id : str
        Identifier, also used to derive per-curve sampling substreams.
    vertices : (k, d) array_like
        Ordered vertex coordinates, all finite, k >= 1.
    """

    id: str
    vertices: np.ndarray
    _cumlen: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=np.float64)
        if v.ndim == 1:
            v = v[:, None]
        if v.ndim != 2 or v.shape[0] < 1 or v.shape[1] < 1:
            raise ValueError("vertices must be a non-empty (k, d) array")
        if not np.all(np.isfinite(v)):
            raise ValueError(f"curve {self.id!r} has non-finite coordinates")
        if v.shape[0] > 1:
            keep = np.ones(v.shape[0], dtype=bool)
            keep[1:] = np.any(v[1:] != v[:-1], axis=1)
            v = v[keep]
        seg = np.linalg.norm(np.diff(v, axis=0), axis=1)
        cum = np.concatenate(([0.0], np.cumsum(seg)))
        v.setflags(write=False)
        cum.setflags(write=False)
        object.__setattr__(self, "vertices", v)
        object.__setattr__(self, "_cumlen", cum)

    @property
    def dim(self) -> int:
        return self.vertices.shape[1]

    @property
    def n_vertices(self) -> int:
        return self.vertices.shape[0]

    @property
    def length(self) -> float:
        return float(self._cumlen[-1])

    @property
    def is_trivial(self) -> bool:
        """True when the chordal length is zero (single point, Dirac mass)."""
        return self.length == 0.0

    @property
    def segment_lengths(self) -> np.ndarray:
        return np.diff(self._cumlen)


def length(curve: Curve) -> float:
    """Chordal length of the polyline (exact for polylines)."""
    return curve.length


def points_at(curve: Curve, ts) -> np.ndarray:
    """Points at arc-length fractions ``ts`` in [0, 1] along the curve.

    Piecewise linear in t; t=0 is the first vertex, t=1 the last. A
    trivial curve returns its single point for every t.
    """
    ts = np.atleast_1d(np.asarray(ts, dtype=np.float64))
    if np.any((ts < 0.0) | (ts > 1.0)):
        raise ValueError("arc-length fraction t must lie in [0, 1]")
    if curve.is_trivial:
        return np.broadcast_to(curve.vertices[0], (ts.size, curve.dim)).copy()
    target = ts * curve.length
    cum = curve._cumlen
    idx = np.searchsorted(cum, target, side="right") - 1
    idx = np.clip(idx, 0, curve.n_vertices - 2)
    seg = curve.segment_lengths[idx]
    frac = (target - cum[idx]) / seg
    frac = np.clip(frac, 0.0, 1.0)
    a = curve.vertices[idx]
    b = curve.vertices[idx + 1]
    return a + frac[:, None] * (b - a)


def point_at(curve: Curve, t: float) -> np.ndarray:
    """Point at arc-length fraction ``t`` in [0, 1]."""
    return points_at(curve, [t])[0]


def apply_similarity(curve: Curve, scale: float, rotation, translation) -> Curve:
    """Map every vertex through x -> scale * rotation @ x + translation.

    The rotation matrix must be orthogonal (R^T R = I within 1e-10);
    reflections are allowed. Length scales exactly by ``scale``.
    """
    if scale <= 0.0:
        raise ValueError("scale must be positive")
    rot = np.asarray(rotation, dtype=np.float64)
    d = curve.dim
    if rot.shape != (d, d):
        raise ValueError(f"rotation must be {d}x{d}")
    if np.max(np.abs(rot.T @ rot - np.eye(d))) > ORTHO_TOL:
        raise ValueError("rotation matrix is not orthogonal")
    b = np.asarray(translation, dtype=np.float64).reshape(d)
    verts = scale * (curve.vertices @ rot.T) + b
    return Curve(curve.id, verts)


def reverse(curve: Curve) -> Curve:
    """The same locus traversed in the opposite order."""
    return Curve(curve.id, curve.vertices[::-1])

"""Depth-based rigid registration of curves.

A bundle is summarized by its deepest curve; registration aligns one
representative to another by minimizing the curve distance over rigid
motions (rotation + translation, pivoted at the moving curve's centroid)
with a derivative-free coordinate pattern search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .curves import Curve
from .curvedepth import DepthReport, depth_all
from .distance import curve_distance, resample_curve
from .pointdepth import DepthConfig
from .sampling import ROLE_MISC, substream

__all__ = ["RigidTransform", "deepest", "register"]

ORTHO_TOL = 1e-10


@dataclass(frozen=True)
class RigidTransform:
    """Proper rigid motion x -> R (x - center) + center + translation."""

    rotation: np.ndarray     # (d, d), orthogonal, det +1
    translation: np.ndarray  # (d,)
    center: np.ndarray       # (d,) pre-rotation pivot

    def __post_init__(self):
        r = np.asarray(self.rotation, dtype=np.float64)
        d = r.shape[0]
        if r.shape != (d, d):
            raise ValueError("rotation must be square")
        if np.max(np.abs(r.T @ r - np.eye(d))) > ORTHO_TOL:
            raise ValueError("rotation matrix is not orthogonal")
        if np.linalg.det(r) <= 0.0:
            raise ValueError("rotation must preserve orientation (det +1)")
        t = np.asarray(self.translation, dtype=np.float64).reshape(d)
        c = np.asarray(self.center, dtype=np.float64).reshape(d)
        for name, arr in (("rotation", r), ("translation", t), ("center", c)):
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    def apply(self, points: np.ndarray) -> np.ndarray:
        pts = np.asarray(points, dtype=np.float64)
        return (pts - self.center) @ self.rotation.T + self.center + self.translation

    def apply_curve(self, curve: Curve) -> Curve:
        return Curve(curve.id, self.apply(curve.vertices))


def deepest(sample, m: int, cfg: DepthConfig, seed: int) -> tuple[int, DepthReport]:
    """Index and report of the deepest curve; ties go to the lowest index."""
    reports = depth_all(sample, m, cfg, seed)
    depths = np.array([r.depth for r in reports])
    idx = int(np.argmax(depths))
    return idx, reports[idx]


def _rotation_2d(angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, -s], [s, c]])


def _rotation_3d(a: float, b: float, g: float) -> np.ndarray:
    # Euler angles about z, y, x; gimbal degeneracy is acceptable for a
    # derivative-free search.
    cz, sz = math.cos(a), math.sin(a)
    cy, sy = math.cos(b), math.sin(b)
    cx, sx = math.cos(g), math.sin(g)
    rz = np.array([[cz, -sz, 0.0], [sz, cz, 0.0], [0.0, 0.0, 1.0]])
    ry = np.array([[cy, 0.0, sy], [0.0, 1.0, 0.0], [-sy, 0.0, cy]])
    rx = np.array([[1.0, 0.0, 0.0], [0.0, cx, -sx], [0.0, sx, cx]])
    return rz @ ry @ rx


def _transform_from_params(params: np.ndarray, dim: int, center: np.ndarray) -> RigidTransform:
    if dim == 2:
        rot = _rotation_2d(params[0])
        t = params[1:3]
    else:
        rot = _rotation_3d(params[0], params[1], params[2])
        t = params[3:6]
    return RigidTransform(rotation=rot, translation=t, center=center)


def register(moving: Curve, target: Curve, restarts: int = 10, seed: int = 0,
             resample: int = 100) -> tuple[RigidTransform, float]:
    """Rigid alignment of ``moving`` onto ``target`` minimizing curve distance.

    Coordinate pattern search over rotation angle(s) and translation with
    shrinking steps (rotation step 0.5 rad, translation step a quarter of
    the joint bounding-box diagonal, each halved on a failed pass, 8
    halvings), restarted from ``restarts`` seeded initial motions plus the
    identity. The achieved distance is never worse than the unregistered
    one.
    """
    dim = moving.dim
    if dim != target.dim:
        raise ValueError(f"dimension mismatch: {dim} vs {target.dim}")
    if dim not in (2, 3):
        raise ValueError("registration supports dimensions 2 and 3 only")
    if restarts < 1:
        raise ValueError("need at least one restart")

    mov = resample_curve(moving, resample)
    tgt = resample_curve(target, resample)
    center = mov.vertices.mean(axis=0)
    allv = np.concatenate([mov.vertices, tgt.vertices], axis=0)
    diag = float(np.linalg.norm(allv.max(axis=0) - allv.min(axis=0)))
    if diag == 0.0:
        diag = 1.0

    n_ang = 1 if dim == 2 else 3
    n_par = n_ang + dim
    steps0 = np.empty(n_par)
    steps0[:n_ang] = 0.5
    steps0[n_ang:] = 0.25 * diag

    def objective(params: np.ndarray) -> float:
        tr = _transform_from_params(params, dim, center)
        return curve_distance(Curve(mov.id, tr.apply(mov.vertices)), tgt)

    def pattern_search(start: np.ndarray) -> tuple[np.ndarray, float]:
        params = start.copy()
        best = objective(params)
        steps = steps0.copy()
        halvings = 0
        while halvings <= 8:
            improved = False
            for i in range(n_par):
                for sgn in (1.0, -1.0):
                    cand = params.copy()
                    cand[i] += sgn * steps[i]
                    val = objective(cand)
                    if val < best:
                        params, best = cand, val
                        improved = True
            if not improved:
                steps *= 0.5
                halvings += 1
        return params, best

    rng = substream(seed, ROLE_MISC, f"register:{moving.id}->{target.id}")
    starts = [np.zeros(n_par)]
    for _ in range(restarts - 1):
        s = np.zeros(n_par)
        s[:n_ang] = rng.uniform(-math.pi, math.pi, size=n_ang)
        s[n_ang:] = rng.normal(scale=0.25 * diag, size=dim)
        starts.append(s)

    best_params, best_val = None, np.inf
    for s in starts:
        p, v = pattern_search(s)
        if v < best_val:
            best_params, best_val = p, v
    return _transform_from_params(best_params, dim, center), float(best_val)

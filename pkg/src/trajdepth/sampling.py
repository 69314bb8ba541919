"""Sampling from the arc-length measure of a curve and the pooled reference.

Each draw picks a polyline segment with probability proportional to its
length and then a uniform point on it; for a polyline this realizes the
arc-length measure exactly. All randomness flows through substreams keyed
by (master seed, role, curve-id digest, occurrence), so results do not
depend on evaluation order and swapping sample roles in DD-plots swaps
coordinates exactly.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from .curves import Curve

__all__ = [
    "PointSample",
    "ReferenceMeasure",
    "sample_on_curve",
    "build_reference",
    "substream",
]

# Substream roles.
ROLE_REF = 0      # X-sample: curve acting as a reference member
ROLE_QUERY_Y = 1  # Y-sample: empirical mu of a query curve
ROLE_QUERY_Z = 2  # Z-sample: integration points of a query curve
ROLE_DIRS = 3     # random halfspace directions
ROLE_MISC = 4     # optimizer restarts, clustering moves, ...


def _digest(ident: str) -> tuple[int, int]:
    h = hashlib.sha256(ident.encode("utf-8")).digest()
    k = int.from_bytes(h[:8], "little")
    return k & 0xFFFFFFFF, k >> 32


def substream(seed: int, role: int, ident: str = "", occ: int = 0) -> np.random.Generator:
    """Deterministic child generator for (seed, role, ident, occ)."""
    lo, hi = _digest(ident)
    ss = np.random.SeedSequence(seed, spawn_key=(role, lo, hi, occ))
    return np.random.default_rng(ss)


@dataclass(frozen=True)
class PointSample:
    """Points drawn i.i.d. from the arc-length measure of one curve."""

    owner: str
    points: np.ndarray  # (m, d)

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=np.float64)
        if pts.ndim != 2 or pts.shape[0] < 1:
            raise ValueError("a point sample must hold at least one point")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    @property
    def size(self) -> int:
        return self.points.shape[0]

    @property
    def dim(self) -> int:
        return self.points.shape[1]


@dataclass(frozen=True)
class ReferenceMeasure:
    """Stratified pooled sample realizing the empirical mixture measure.

    One stratum of equal size m per reference curve; the pooled point set
    weights every curve equally regardless of its length.
    """

    strata: tuple[PointSample, ...]

    def __post_init__(self):
        if not self.strata:
            raise ValueError("reference measure needs at least one stratum")
        m = self.strata[0].size
        d = self.strata[0].dim
        for s in self.strata:
            if s.size != m or s.dim != d:
                raise ValueError("all strata must share size and dimension")

    @property
    def n(self) -> int:
        return len(self.strata)

    @property
    def m(self) -> int:
        return self.strata[0].size

    @property
    def dim(self) -> int:
        return self.strata[0].dim

    def pooled(self, exclude: int | None = None) -> np.ndarray:
        """All points stacked, optionally leaving one stratum out."""
        parts = [s.points for i, s in enumerate(self.strata) if i != exclude]
        if not parts:
            raise ValueError("cannot exclude the only stratum")
        return np.concatenate(parts, axis=0)


def sample_on_curve(curve: Curve, m: int, rng: np.random.Generator) -> PointSample:
    """Draw m i.i.d. points from the arc-length measure of ``curve``.

    A trivial curve yields m copies of its single point.
    """
    if m < 1:
        raise ValueError("sample size m must be >= 1")
    if curve.is_trivial:
        pts = np.repeat(curve.vertices[:1], m, axis=0)
        return PointSample(curve.id, pts)
    # Segment choice proportional to length, then uniform within the segment.
    u = rng.random(m) * curve.length
    idx = np.searchsorted(curve._cumlen, u, side="right") - 1
    idx = np.clip(idx, 0, curve.n_vertices - 2)
    frac = rng.random(m)
    a = curve.vertices[idx]
    b = curve.vertices[idx + 1]
    return PointSample(curve.id, a + frac[:, None] * (b - a))


def occurrence_indices(curves) -> list[int]:
    """Occurrence index of each curve id within the list (0 for the first)."""
    seen: dict[str, int] = {}
    occ = []
    for c in curves:
        k = seen.get(c.id, 0)
        occ.append(k)
        seen[c.id] = k + 1
    return occ


def build_reference(curves, m: int, seed: int) -> ReferenceMeasure:
    """Stratified reference sample: m points on each of the n curves."""
    curves = list(curves)
    if not curves:
        raise ValueError("need at least one reference curve")
    d = curves[0].dim
    for c in curves:
        if c.dim != d:
            raise ValueError(f"mixed dimensions in reference sample: {c.dim} vs {d}")
    strata = []
    for c, occ in zip(curves, occurrence_indices(curves)):
        rng = substream(seed, ROLE_REF, c.id, occ)
        strata.append(sample_on_curve(c, m, rng))
    return ReferenceMeasure(tuple(strata))

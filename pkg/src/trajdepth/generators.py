"""Seeded simulation schemes: degenerate families with known depths,
two functional-data processes, outlier-contaminated ensembles, and
randomly placed S-shaped letters.

Every scheme is deterministic given its seed. Functional curves are
tabulated on a uniform 200-point grid over their own domain; circles use
256 vertices by default (the closed forms concern the continuous objects,
and refinement studies put the discretization effect below 1e-3 at 256
vertices).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .curves import Curve, points_at
from .sampling import ROLE_MISC, substream

__all__ = [
    "SchemeSpec",
    "generate",
    "SCHEMES",
    "circle_curve",
    "parallel_segment_curve",
    "star_segment_curve",
    "claeskens_mean_curve",
    "cuevas_mean_curve",
]

GRID_POINTS = 200
CIRCLE_VERTICES = 256


@dataclass(frozen=True)
class SchemeSpec:
    """A named simulation scheme with its size, parameters and seed."""

    scheme: str
    n: int
    seed: int = 0
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.scheme not in SCHEMES:
            raise ValueError(
                f"unknown scheme {self.scheme!r}; choose from {sorted(SCHEMES)}"
            )
        if self.n < 1:
            raise ValueError("n must be >= 1")


def circle_curve(r: float, vertices: int = CIRCLE_VERTICES,
                 center=(0.0, 0.0), id: str = "") -> Curve:
    """Closed polygonal circle of radius r (first vertex repeated last)."""
    if r <= 0.0:
        raise ValueError("radius must be positive")
    a = np.linspace(0.0, 2.0 * math.pi, vertices + 1)
    pts = np.column_stack((center[0] + r * np.cos(a), center[1] + r * np.sin(a)))
    return Curve(id or f"circle-r{r:g}", pts)


def parallel_segment_curve(y: float, id: str = "") -> Curve:
    """Horizontal unit segment of the parallel-segments family."""
    return Curve(id or f"hseg-y{y:g}", [[0.0, y], [1.0, y]])


def star_segment_curve(theta: float, id: str = "") -> Curve:
    """Unit segment from the origin toward angle theta."""
    return Curve(id or f"star-th{theta:g}",
                 [[0.0, 0.0], [math.cos(theta), math.sin(theta)]])


def claeskens_mean_curve(id: str = "mean") -> Curve:
    """Mean of the low-amplitude sinusoid process on its expected domain."""
    x = np.linspace(math.pi / 3.0, 5.0 * math.pi / 3.0, GRID_POINTS)
    y = 0.025 * np.sin(2.0 * math.pi * x) + 0.025 * np.cos(2.0 * math.pi * x)
    return Curve(id, np.column_stack((x, y)))


def _cuevas_mean(x: np.ndarray) -> np.ndarray:
    # Pointwise mean of 30 (1-x)^(1+W) x^(1.5-W) over W ~ U[0, 0.5],
    # continuously extended at x = 1/2 and the endpoints.
    y = np.empty_like(x)
    interior = (x > 0.0) & (x < 1.0)
    xi = x[interior]
    ratio = np.empty_like(xi)
    mid = np.isclose(xi, 0.5)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = (np.sqrt(1.0 - xi) - np.sqrt(xi)) / (np.log(1.0 - xi) - np.log(xi))
    ratio[mid] = math.sqrt(2.0) / 4.0
    y[interior] = 60.0 * (1.0 - xi) * xi * ratio
    y[~interior] = 0.0
    return y


def cuevas_mean_curve(id: str = "mean") -> Curve:
    x = np.linspace(0.0, 1.0, GRID_POINTS)
    return Curve(id, np.column_stack((x, _cuevas_mean(x))))


def _gen_circles(n, rng, params):
    vertices = int(params.get("vertices", CIRCLE_VERTICES))
    radii = rng.uniform(0.0, 1.0, size=n)
    radii = np.maximum(radii, 1e-9)  # exclude the zero-length degenerate
    return [circle_curve(r, vertices, id=f"circle-{i:03d}") for i, r in enumerate(radii)]


def _gen_parallel_segments(n, rng, params):
    ys = rng.uniform(0.0, 1.0, size=n)
    return [parallel_segment_curve(y, id=f"hseg-{i:03d}") for i, y in enumerate(ys)]


def _gen_star(n, rng, params):
    thetas = rng.uniform(0.0, 2.0 * math.pi, size=n)
    return [star_segment_curve(t, id=f"star-{i:03d}") for i, t in enumerate(thetas)]


def _gen_segments_line(n, rng, params):
    # Disjoint segments along the x axis with random lengths and gaps;
    # the closed-form depth depends only on the left-to-right order.
    lengths = rng.uniform(0.5, 1.5, size=n)
    gaps = rng.uniform(0.2, 0.8, size=n)
    start = 0.0
    out = []
    for i in range(n):
        a = start + gaps[i]
        b = a + lengths[i]
        out.append(Curve(f"seg-{i:03d}", [[a, 0.0], [b, 0.0]]))
        start = b
    return out


def _claeskens_curve(rng, ident) -> Curve:
    a1, a2 = rng.uniform(0.0, 0.05, size=2)
    lo = rng.uniform(0.0, 2.0 * math.pi / 3.0)
    hi = rng.uniform(4.0 * math.pi / 3.0, 2.0 * math.pi)
    x = np.linspace(lo, hi, GRID_POINTS)
    y = a1 * np.sin(2.0 * math.pi * x) + a2 * np.cos(2.0 * math.pi * x)
    return Curve(ident, np.column_stack((x, y)))


def _gen_claeskens(n, rng, params):
    out = [_claeskens_curve(rng, f"claeskens-{i:03d}") for i in range(n)]
    if params.get("with_mean"):
        out.append(claeskens_mean_curve())
    return out


def _exp_ou_noise(rng, npts, dt, variance=0.2, scale=0.3):
    # Stationary zero-mean Gaussian noise with covariance v*exp(-|t|/s),
    # simulated exactly on the grid by its AR(1) recursion.
    rho = math.exp(-dt / scale)
    u = np.empty(npts)
    u[0] = rng.normal(scale=math.sqrt(variance))
    innov = rng.normal(scale=math.sqrt(variance * (1.0 - rho * rho)), size=npts - 1)
    for j in range(1, npts):
        u[j] = rho * u[j - 1] + innov[j - 1]
    return u


def _cuevas_curve(rng, ident, bump=None) -> Curve:
    w = rng.uniform(0.0, 0.5)
    lo = rng.uniform(0.0, 0.1)
    hi = rng.uniform(0.9, 1.0)
    x = np.linspace(lo, hi, GRID_POINTS)
    noise = _exp_ou_noise(rng, GRID_POINTS, (hi - lo) / (GRID_POINTS - 1))
    y = 30.0 * (1.0 - x) ** (1.0 + w) * x ** (1.5 - w) + noise
    if bump is not None:
        center, height, width = bump
        y = y + height * np.exp(-(((x - center) / width) ** 2))
    return Curve(ident, np.column_stack((x, y)))


def _gen_cuevas(n, rng, params):
    out = [_cuevas_curve(rng, f"cuevas-{i:03d}") for i in range(n)]
    if params.get("with_mean"):
        out.append(cuevas_mean_curve())
    return out


def _gen_outlier_a(n, rng, params):
    """Low-amplitude sinusoid sample plus three spatial outliers.

    Two shift-shape outliers sit 0.2 above/below the band with altered
    frequency; the pure shape outlier keeps a zero mean level but swings
    five times wider than the band. n counts the base curves (12 in the
    reference scenario); the outliers are appended after them.
    """
    out = [_claeskens_curve(rng, f"base-{i:03d}") for i in range(n)]
    x = np.linspace(0.3, 5.8, GRID_POINTS)
    shift_up = 0.2 + 0.025 * np.sin(4.0 * math.pi * x)
    out.append(Curve("outlier-shift-up", np.column_stack((x, shift_up))))
    shift_dn = -0.2 + 0.025 * np.cos(6.0 * math.pi * x)
    out.append(Curve("outlier-shift-down", np.column_stack((x, shift_dn))))
    shape = 0.25 * np.sin(2.0 * math.pi * x)
    out.append(Curve("outlier-shape", np.column_stack((x, shape))))
    return out


def _gen_outlier_b(n, rng, params):
    """Oscillating hump sample plus four outliers.

    A smooth shift outlier rides 2.5 above the mean hump; the isolated
    outlier carries one sharp positive peak; the persistent outlier stays
    flattened over the whole domain; the negative-peak outlier dips
    sharply downward, the documented hard case for halfspace masses.
    n counts the base curves (46 in the reference scenario).
    """
    out = [_cuevas_curve(rng, f"base-{i:03d}") for i in range(n)]
    x = np.linspace(0.02, 0.98, GRID_POINTS)
    out.append(Curve("outlier-shift", np.column_stack((x, _cuevas_mean(x) + 2.5))))
    out.append(_cuevas_curve(rng, "outlier-isolated", bump=(0.5, 4.0, 0.02)))
    flat = 0.3 * _cuevas_mean(x) + _exp_ou_noise(rng, GRID_POINTS, (x[-1] - x[0]) / (GRID_POINTS - 1))
    out.append(Curve("outlier-persistent", np.column_stack((x, flat))))
    out.append(_cuevas_curve(rng, "outlier-negpeak", bump=(0.55, -4.0, 0.02)))
    return out


def _s_locus(npts: int) -> np.ndarray:
    # Three quarters of the upper unit circle followed by three quarters
    # of the lower one, traced as a single S-shaped stroke.
    t = np.linspace(0.0, 2.0 * math.pi, npts)
    upper = t < 1.5 * math.pi
    x = np.where(upper, -np.cos(t), -np.cos(3.0 * t - 3.0 * math.pi))
    y = np.where(upper, np.sin(t) + 1.0, -np.sin(3.0 * t - 3.0 * math.pi) - 1.0)
    return np.column_stack((x, y))


def _gen_s_letters(n, rng, params):
    """Shifted, rotated, end-trimmed copies of an ideal S stroke.

    Randomization magnitudes (normal, centered at zero): shift sd 0.3 per
    coordinate, rotation sd 0.2 rad, end trim sd 0.3 arc-length units
    (absolute value, capped at 15% of the stroke per end).
    """
    sd_shift = float(params.get("sd_shift", 0.3))
    sd_angle = float(params.get("sd_angle", 0.2))
    sd_trim = float(params.get("sd_trim", 0.3))
    base = Curve("s-ideal", _s_locus(257))
    out = []
    for i in range(n):
        trim0 = min(abs(rng.normal(scale=sd_trim)), 0.15 * base.length)
        trim1 = min(abs(rng.normal(scale=sd_trim)), 0.15 * base.length)
        t0 = trim0 / base.length
        t1 = 1.0 - trim1 / base.length
        pts = points_at(base, np.linspace(t0, t1, 257))
        ang = rng.normal(scale=sd_angle)
        c, s = math.cos(ang), math.sin(ang)
        rot = np.array([[c, -s], [s, c]])
        shift = rng.normal(scale=sd_shift, size=2)
        out.append(Curve(f"sletter-{i:03d}", pts @ rot.T + shift))
    return out


SCHEMES = {
    "segments-line": _gen_segments_line,
    "parallel-segments": _gen_parallel_segments,
    "star": _gen_star,
    "circles": _gen_circles,
    "claeskens": _gen_claeskens,
    "cuevas": _gen_cuevas,
    "outlierA": _gen_outlier_a,
    "outlierB": _gen_outlier_b,
    "s-letters": _gen_s_letters,
}


def generate(spec: SchemeSpec) -> list[Curve]:
    """Seeded curve sample for a named scheme."""
    rng = substream(spec.seed, ROLE_MISC, f"scheme:{spec.scheme}")
    return SCHEMES[spec.scheme](spec.n, rng, dict(spec.params))

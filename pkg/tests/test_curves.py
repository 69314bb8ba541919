import math

import numpy as np
import pytest

from trajdepth import Curve, apply_similarity, length, point_at, points_at, reverse


def circle(r=0.5, n=10_000):
    a = np.linspace(0.0, 2.0 * math.pi, n + 1)
    return Curve("circle", np.column_stack((r * np.cos(a), r * np.sin(a))))


def test_length_unit_segment():
    assert length(Curve("s", [[0, 0], [1, 0]])) == 1.0


def test_length_square_perimeter():
    sq = Curve("sq", [[0, 0], [1, 0], [1, 1], [0, 1], [0, 0]])
    assert length(sq) == 4.0


def test_length_circle_matches_circumference():
    assert length(circle()) == pytest.approx(math.pi, abs=1e-6)


def test_point_at_linear_interpolation():
    c = Curve("s", [[0, 0], [2, 0]])
    assert np.allclose(point_at(c, 0.25), [0.5, 0.0])


def test_point_at_corner_of_two_segments():
    c = Curve("L", [[0, 0], [1, 0], [1, 1]])
    assert np.allclose(point_at(c, 0.5), [1.0, 0.0])


def test_point_at_boundaries():
    c = Curve("L", [[0, 0], [1, 0], [1, 1]])
    assert np.allclose(point_at(c, 0.0), [0.0, 0.0])
    assert np.allclose(point_at(c, 1.0), [1.0, 1.0])


def test_point_at_trivial_curve_returns_single_point():
    c = Curve("pt", [[2.0, 3.0]])
    assert c.is_trivial
    for t in (0.0, 0.3, 1.0):
        assert np.allclose(point_at(c, t), [2.0, 3.0])


def test_point_at_rejects_outside_unit_interval():
    c = Curve("s", [[0, 0], [1, 0]])
    with pytest.raises(ValueError):
        point_at(c, 1.5)


def test_duplicate_vertices_collapse():
    c = Curve("d", [[0, 0], [0, 0], [1, 0], [1, 0], [1, 0], [2, 0]])
    assert c.n_vertices == 3
    assert c.length == 2.0


def test_all_identical_vertices_is_trivial():
    c = Curve("d", [[1, 1], [1, 1], [1, 1]])
    assert c.is_trivial and c.n_vertices == 1


def test_nonfinite_vertices_rejected():
    with pytest.raises(ValueError):
        Curve("bad", [[0, 0], [np.nan, 1]])
    with pytest.raises(ValueError):
        Curve("bad", [[0, 0], [np.inf, 1]])


def test_similarity_identity():
    c = Curve("s", [[0, 0], [1, 0], [1, 1]])
    out = apply_similarity(c, 1.0, np.eye(2), [0, 0])
    assert np.array_equal(out.vertices, c.vertices)


def test_similarity_scales_length():
    c = Curve("s", [[0, 0], [1, 0]])
    out = apply_similarity(c, 2.0, np.eye(2), [3, -1])
    assert out.length == pytest.approx(2.0, rel=1e-12)


def test_similarity_rotation_is_isometry():
    c = Curve("s", [[0, 0], [1, 0]])
    rot = np.array([[0.0, -1.0], [1.0, 0.0]])
    out = apply_similarity(c, 1.0, rot, [0, 0])
    assert np.allclose(out.vertices, [[0, 0], [0, 1]])
    assert out.length == pytest.approx(1.0, rel=1e-12)


def test_similarity_rejects_non_orthogonal():
    c = Curve("s", [[0, 0], [1, 0]])
    with pytest.raises(ValueError):
        apply_similarity(c, 1.0, np.array([[1.0, 0.1], [0.0, 1.0]]), [0, 0])
    with pytest.raises(ValueError):
        apply_similarity(c, -1.0, np.eye(2), [0, 0])


def test_similarity_length_scaling_random():
    rng = np.random.default_rng(0)
    for _ in range(20):
        c = Curve("r", rng.normal(size=(7, 2)))
        ang = rng.uniform(0, 2 * math.pi)
        rot = np.array([[math.cos(ang), -math.sin(ang)],
                        [math.sin(ang), math.cos(ang)]])
        r = rng.uniform(0.1, 5.0)
        out = apply_similarity(c, r, rot, rng.normal(size=2))
        assert out.length == pytest.approx(r * c.length, rel=1e-12)


def _exact_subcurve_length(c, t1, t2):
    # Walk the polyline between the two interpolated points: partial ends
    # plus the full interior segments.
    cum = c._cumlen
    p1, p2 = points_at(c, [t1, t2])
    s1, s2 = t1 * c.length, t2 * c.length
    i1 = min(np.searchsorted(cum, s1, side="right") - 1, c.n_vertices - 2)
    i2 = min(np.searchsorted(cum, s2, side="right") - 1, c.n_vertices - 2)
    if i1 == i2:
        return float(np.linalg.norm(p2 - p1))
    total = float(np.linalg.norm(c.vertices[i1 + 1] - p1))
    total += float(cum[i2] - cum[i1 + 1])
    total += float(np.linalg.norm(p2 - c.vertices[i2]))
    return total


def test_subcurve_arclength_proportionality():
    rng = np.random.default_rng(1)
    c = Curve("r", rng.normal(size=(9, 2)))
    ts = np.sort(rng.uniform(0, 1, size=12))
    for t1, t2 in zip(ts[:-1], ts[1:]):
        sub_len = _exact_subcurve_length(c, t1, t2)
        assert sub_len == pytest.approx((t2 - t1) * c.length, abs=1e-10)


def test_point_at_continuity():
    rng = np.random.default_rng(2)
    c = Curve("r", rng.normal(size=(6, 2)))
    for t in rng.uniform(0, 0.999, size=50):
        eps = 1e-6
        step = np.linalg.norm(point_at(c, t + eps) - point_at(c, t))
        assert step <= eps * c.length + 1e-12


def test_reverse_preserves_length_and_flips_ends():
    c = Curve("r", [[0, 0], [1, 0], [1, 2]])
    rv = reverse(c)
    assert rv.length == c.length
    assert np.array_equal(rv.vertices[0], c.vertices[-1])


def test_one_dimensional_curves_supported():
    c = Curve("line", [[0.0], [2.0], [1.0]])
    assert c.dim == 1
    assert c.length == 3.0
    assert np.allclose(point_at(c, 0.5), [1.5])

import numpy as np
import pytest

from trajdepth import Curve, curve_distance, curve_distance_matrix, resample_curve
from trajdepth.oracles import oracle_distance_dp


def rand_curve(rng, ident, max_vertices=40, dim=2):
    k = int(rng.integers(2, max_vertices + 1))
    return Curve(ident, rng.normal(size=(k, dim)))


def test_identical_curves_zero():
    c = Curve("a", [[0, 0], [1, 0], [2, 1]])
    assert curve_distance(c, c) == 0.0


def test_vertical_offset_segments():
    a = Curve("a", [[0, 0], [0.5, 0], [1, 0]])
    b = Curve("b", [[0, 0.3], [0.5, 0.3], [1, 0.3]])
    assert curve_distance(a, b) == pytest.approx(0.3, abs=1e-12)


def test_matches_dp_oracle_on_random_pairs():
    rng = np.random.default_rng(17)
    for _ in range(60):
        a = rand_curve(rng, "a")
        b = rand_curve(rng, "b")
        assert curve_distance(a, b) == oracle_distance_dp(a, b)


def test_symmetry_exact():
    rng = np.random.default_rng(3)
    for _ in range(25):
        a = rand_curve(rng, "a")
        b = rand_curve(rng, "b")
        assert curve_distance(a, b) == curve_distance(b, a)


def test_triangle_inequality():
    rng = np.random.default_rng(23)
    for _ in range(50):
        a, b, c = (rand_curve(rng, t, 15) for t in "abc")
        dab = curve_distance(a, b)
        dbc = curve_distance(b, c)
        dac = curve_distance(a, c)
        assert dac <= dab + dbc + 1e-9


def test_rigid_motion_invariance():
    rng = np.random.default_rng(5)
    ang = 0.7
    rot = np.array([[np.cos(ang), -np.sin(ang)], [np.sin(ang), np.cos(ang)]])
    shift = np.array([2.0, -1.0])
    for _ in range(10):
        a = rand_curve(rng, "a", 20)
        b = rand_curve(rng, "b", 20)
        a2 = Curve("a2", a.vertices @ rot.T + shift)
        b2 = Curve("b2", b.vertices @ rot.T + shift)
        assert curve_distance(a2, b2) == pytest.approx(curve_distance(a, b), abs=1e-12)


def test_vertex_duplication_invariance():
    rng = np.random.default_rng(9)
    a = rand_curve(rng, "a", 12)
    b = rand_curve(rng, "b", 12)
    d = curve_distance(a, b)
    # duplicating a vertex inserts a zero-length relocation step
    v = b.vertices
    dup = np.insert(v, 5, v[5], axis=0)
    # construction collapses duplicates, so compare through the DP oracle
    assert oracle_distance_dp(a.vertices, dup) == d


def test_dimension_mismatch_rejected():
    with pytest.raises(ValueError):
        curve_distance(Curve("a", [[0, 0], [1, 1]]), Curve("b", [[0, 0, 0], [1, 1, 1]]))


def test_resampling_flag():
    a = Curve("a", [[0, 0], [1, 0]])
    b = Curve("b", [[0, 0.2], [0.3, 0.2], [0.31, 0.2], [1, 0.2]])
    d = curve_distance(a, b, resample=100)
    assert d == pytest.approx(0.2, abs=1e-9)
    assert resample_curve(a, 100).n_vertices == 100


def test_orientation_flag():
    a = Curve("a", [[0, 0], [1, 0]])
    rev = Curve("r", [[1, 0.1], [0, 0.1]])
    sensitive = curve_distance(a, rev)
    free = curve_distance(a, rev, orientation_free=True)
    assert sensitive > 0.9  # endpoints must map to opposite ends
    assert free == pytest.approx(0.1, abs=1e-12)


def test_distance_matrix_properties():
    rng = np.random.default_rng(2)
    curves = [rand_curve(rng, f"c{i}", 10) for i in range(5)]
    curves.append(Curve("c0-copy", curves[0].vertices))
    mat = curve_distance_matrix(curves)
    assert np.array_equal(mat, mat.T)
    assert np.all(np.diag(mat) == 0.0)
    assert mat[0, 5] == 0.0  # duplicated curve
    single = curve_distance_matrix([curves[0]])
    assert single.shape == (1, 1) and single[0, 0] == 0.0

"""Data depth for unparameterized curves, with distance, registration,
clustering, and depth-based analysis tools built on top of it."""

from .curves import Curve, apply_similarity, length, point_at, points_at, reverse
from .sampling import PointSample, ReferenceMeasure, build_reference, sample_on_curve
from .pointdepth import (
    DepthConfig,
    point_depth,
    point_depth_1d,
    point_depth_exact_2d,
    point_depth_exact_3d,
    point_depth_random,
)
from .curvedepth import DepthReport, curve_depth, curve_depth_against, depth_all
from .distance import curve_distance, curve_distance_matrix, resample_curve, vertex_distance_matrix
from .registration import RigidTransform, deepest, register
from .clustering import Partition, ddclust, relative_depth, silhouette
from .analysis import (
    DDPoint,
    LinearRule,
    OutlierPartition,
    WilcoxonResult,
    dd_linear_classifier,
    dd_plot,
    outlier_partition,
    wilcoxon_depth_test,
)

__version__ = "0.1.0"

__all__ = [
    "Curve",
    "DepthConfig",
    "DepthReport",
    "DDPoint",
    "LinearRule",
    "OutlierPartition",
    "Partition",
    "PointSample",
    "ReferenceMeasure",
    "RigidTransform",
    "WilcoxonResult",
    "apply_similarity",
    "build_reference",
    "curve_depth",
    "curve_depth_against",
    "curve_distance",
    "curve_distance_matrix",
    "dd_linear_classifier",
    "dd_plot",
    "ddclust",
    "deepest",
    "depth_all",
    "length",
    "outlier_partition",
    "point_at",
    "point_depth",
    "point_depth_1d",
    "point_depth_exact_2d",
    "point_depth_exact_3d",
    "point_depth_random",
    "points_at",
    "register",
    "relative_depth",
    "resample_curve",
    "reverse",
    "sample_on_curve",
    "silhouette",
    "vertex_distance_matrix",
    "wilcoxon_depth_test",
]

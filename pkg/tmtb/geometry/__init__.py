"""Geometric primitives: distances, diameters and segment intersection."""

from tmtb.geometry.distance import (
    bounding_box,
    closest_point_segment,
    diameter_2approx,
    dist_point_segment,
    dist_point_trajectory,
    exact_diameter,
    touching_radii,
    touching_radius,
    trajectory_distances,
)
from tmtb.geometry.intersection import Overlap, segment_segment_intersection

__all__ = [
    "bounding_box",
    "closest_point_segment",
    "diameter_2approx",
    "dist_point_segment",
    "dist_point_trajectory",
    "exact_diameter",
    "touching_radii",
    "touching_radius",
    "trajectory_distances",
    "Overlap",
    "segment_segment_intersection",
]

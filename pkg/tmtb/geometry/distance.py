"""
Point-to-segment and point-to-trajectory distances.

The scalar functions and the vectorised ``trajectory_distances`` evaluate the
same clamped-projection formula, so batch radii agree with ``touching_radius``
up to rounding in the final square root.
"""

import math
from typing import Optional, Tuple

import numpy as np

from tmtb.core.models import Point, Segment, Trajectory, TrajectorySet
from tmtb.core.utils import ChunkExecutor


def _clamped_distance(
    px: float, py: float, ax: float, ay: float, bx: float, by: float
) -> Tuple[float, float, float, float]:
    dx = bx - ax
    dy = by - ay
    dd = dx * dx + dy * dy
    if dd == 0.0:
        lam = 0.0
    else:
        lam = ((px - ax) * dx + (py - ay) * dy) / dd
        lam = min(1.0, max(0.0, lam))
    qx = ax + lam * dx
    qy = ay + lam * dy
    return math.hypot(px - qx, py - qy), qx, qy, lam


def closest_point_segment(p: Point, s: Segment) -> Tuple[Point, float]:
    """Point of ``s`` nearest to ``p`` and its parameter ``lam`` in ``[0, 1]``."""
    _, qx, qy, lam = _clamped_distance(p.x, p.y, s.a.x, s.a.y, s.b.x, s.b.y)
    return Point(qx, qy), lam


def dist_point_segment(p: Point, s: Segment) -> float:
    """Euclidean distance from ``p`` to the closed segment ``s``."""
    return _clamped_distance(p.x, p.y, s.a.x, s.a.y, s.b.x, s.b.y)[0]


def dist_point_trajectory(p: Point, t: Trajectory) -> float:
    """Distance from ``p`` to the nearest point of ``t``."""
    if t.k == 0:
        return p.distance_to(t.waypoints[0])
    return min(dist_point_segment(p, s) for s in t.segments)


def touching_radius(p: Point, ts: TrajectorySet) -> float:
    """Smallest radius of a ball centered at ``p`` that meets every trajectory."""
    return max(dist_point_trajectory(p, t) for t in ts)


def trajectory_distances(
    centers: np.ndarray, ts: TrajectorySet, chunk_size: int = 4096
) -> np.ndarray:
    """
    Distances from many centers to every trajectory.

    Args:
        centers: ``(m, 2)`` array of points
        ts: Trajectory set
        chunk_size: Rows evaluated per numpy batch

    Returns:
        ``(m, n)`` array of point-to-trajectory distances
    """
    centers = np.asarray(centers, dtype=float).reshape(-1, 2)
    table = ts.segment_table
    ax, ay = table.a[:, 0], table.a[:, 1]
    dx = table.b[:, 0] - ax
    dy = table.b[:, 1] - ay
    dd = dx * dx + dy * dy
    degenerate = dd == 0.0
    safe = np.where(degenerate, 1.0, dd)

    out = np.empty((centers.shape[0], ts.n), dtype=float)
    for start in range(0, centers.shape[0], chunk_size):
        stop = min(start + chunk_size, centers.shape[0])
        px = centers[start:stop, 0:1]
        py = centers[start:stop, 1:2]
        lam = ((px - ax) * dx + (py - ay) * dy) / safe
        lam = np.where(degenerate, 0.0, np.clip(lam, 0.0, 1.0))
        dist = np.hypot(px - (ax + lam * dx), py - (ay + lam * dy))
        out[start:stop] = np.minimum.reduceat(dist, table.offsets, axis=1)
    return out


def touching_radii(
    centers: np.ndarray, ts: TrajectorySet, executor: Optional[ChunkExecutor] = None
) -> np.ndarray:
    """
    Vectorised ``touching_radius`` for an ``(m, 2)`` array of centers.

    Args:
        centers: Candidate centers
        ts: Trajectory set
        executor: Optional executor used to split the rows into chunks

    Returns:
        ``(m,)`` array of radii
    """
    centers = np.asarray(centers, dtype=float).reshape(-1, 2)
    if executor is None:
        return trajectory_distances(centers, ts).max(axis=1)
    parts = executor.map_chunks(
        lambda rows: trajectory_distances(centers[rows.start : rows.stop], ts).max(axis=1),
        centers.shape[0],
    )
    return np.concatenate(parts) if parts else np.empty(0, dtype=float)


def bounding_box(ts: TrajectorySet) -> Tuple[float, float, float, float]:
    """Axis-aligned bounds ``(xmin, ymin, xmax, ymax)`` of all waypoints."""
    pts = np.asarray([p.as_tuple() for p in ts.waypoints], dtype=float)
    xmin, ymin = pts.min(axis=0)
    xmax, ymax = pts.max(axis=0)
    return float(xmin), float(ymin), float(xmax), float(ymax)


def diameter_2approx(ts: TrajectorySet) -> float:
    """
    Diameter estimate within a factor two of the true one.

    The farthest waypoint from an arbitrary waypoint lies at a distance
    between half the diameter and the diameter.
    """
    pts = np.asarray([p.as_tuple() for p in ts.waypoints], dtype=float)
    d = np.hypot(pts[:, 0] - pts[0, 0], pts[:, 1] - pts[0, 1])
    return float(d.max())


def exact_diameter(ts: TrajectorySet) -> float:
    """Largest distance between two waypoints."""
    pts = np.unique(np.asarray([p.as_tuple() for p in ts.waypoints], dtype=float), axis=0)
    best = 0.0
    for i in range(pts.shape[0] - 1):
        rest = pts[i + 1 :]
        best = max(best, float(np.hypot(rest[:, 0] - pts[i, 0], rest[:, 1] - pts[i, 1]).max()))
    return best

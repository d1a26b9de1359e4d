"""
Seeded random instances for tests and benchmarks.
"""

from typing import Optional

import numpy as np

from tmtb.core.models import Trajectory, TrajectorySet


def random_trajectory_set(
    n: int,
    k: int,
    seed: Optional[int] = None,
    extent: float = 10.0,
    k_max: Optional[int] = None,
    rng: Optional[np.random.Generator] = None,
) -> TrajectorySet:
    """
    Trajectories with waypoints drawn uniformly from ``[0, extent]^2``.

    Args:
        n: Number of trajectories
        k: Segments per trajectory, or the lower end when ``k_max`` is given
        seed: Seed used when ``rng`` is not supplied
        extent: Side length of the sampling square
        k_max: Upper end of a per-trajectory segment count drawn uniformly
        rng: Generator to draw from

    Returns:
        TrajectorySet with ``n`` trajectories
    """
    rng = rng if rng is not None else np.random.default_rng(seed)
    trajectories = []
    for _ in range(n):
        segments = int(rng.integers(k, k_max + 1)) if k_max is not None else k
        points = rng.uniform(0.0, extent, size=(segments + 1, 2))
        trajectories.append(Trajectory.from_coords(points.tolist()))
    return TrajectorySet(tuple(trajectories))


def random_segment_set(
    n: int,
    seed: Optional[int] = None,
    extent: float = 10.0,
    rng: Optional[np.random.Generator] = None,
) -> TrajectorySet:
    """``n`` single-segment trajectories in ``[0, extent]^2``."""
    return random_trajectory_set(n, 1, seed=seed, extent=extent, rng=rng)

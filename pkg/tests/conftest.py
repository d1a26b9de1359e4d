"""Test configuration and fixtures."""

import math

import pytest

from tmtb.cli.io import write_trajectories
from tmtb.constructions import random_trajectory_set
from tmtb.core.models import TrajectorySet


@pytest.fixture
def parallel_segments():
    """Two horizontal unit segments at y=0 and y=2; optimum (0.5, 1) with radius 1."""
    return TrajectorySet.from_coords([[(0, 0), (1, 0)], [(0, 2), (1, 2)]])


@pytest.fixture
def equilateral_points():
    """Three point trajectories on an equilateral triangle of side 2."""
    return TrajectorySet.from_coords([[(0, 0)], [(2, 0)], [(1, math.sqrt(3))]])


@pytest.fixture
def concurrent_segments():
    """Three segments crossing at (1, 1)."""
    return TrajectorySet.from_coords(
        [[(0, 0), (2, 2)], [(0, 2), (2, 0)], [(1, -1), (1, 3)]]
    )


@pytest.fixture
def random_set():
    """Factory for seeded random trajectory sets."""

    def make(n, k, seed, k_max=None, extent=10.0):
        return random_trajectory_set(n, k, seed=seed, k_max=k_max, extent=extent)

    return make


@pytest.fixture
def trajectory_file(tmp_path):
    """Factory writing a trajectory set to a temporary file."""

    def make(ts, name="trajectories.txt"):
        return str(write_trajectories(ts, tmp_path / name))

    return make


@pytest.fixture
def text_file(tmp_path):
    """Factory writing raw text to a temporary file."""

    def make(text, name="input.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return make

"""Test point distances, radii and diameters."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tmtb.core.models import Point, Segment, Trajectory, TrajectorySet
from tmtb.geometry import (
    closest_point_segment,
    diameter_2approx,
    dist_point_segment,
    dist_point_trajectory,
    exact_diameter,
    touching_radii,
    touching_radius,
)
from tmtb.constructions import random_trajectory_set
from tmtb.core.utils import ChunkExecutor

coords = st.floats(min_value=-100.0, max_value=100.0, allow_nan=False, allow_infinity=False)
points = st.builds(Point, coords, coords)


@st.composite
def segments(draw):
    a = draw(points)
    b = draw(points)
    if a.distance_to(b) < 1e-6:
        b = Point(a.x + 1.0, a.y)
    return Segment(a, b)


@st.composite
def trajectories(draw, max_waypoints=5):
    waypoints = [draw(points)]
    for _ in range(draw(st.integers(min_value=0, max_value=max_waypoints - 1))):
        p = draw(points)
        if p.distance_to(waypoints[-1]) > 1e-6:
            waypoints.append(p)
    return Trajectory(tuple(waypoints))


def test_dist_point_segment_examples():
    """Test the endpoint, foot and clamped cases."""
    unit = Segment(Point(0.0, 0.0), Point(1.0, 0.0))
    assert dist_point_segment(Point(0.0, 0.0), unit) == 0.0
    assert dist_point_segment(Point(0.0, 1.0), Segment(Point(-1.0, 0.0), Point(1.0, 0.0))) == 1.0
    assert dist_point_segment(Point(3.0, 4.0), unit) == pytest.approx(math.sqrt(20.0))


def test_closest_point_parameter():
    """Test that the clamped parameter is exposed."""
    q, lam = closest_point_segment(Point(3.0, 4.0), Segment(Point(0.0, 0.0), Point(1.0, 0.0)))
    assert lam == 1.0
    assert q == Point(1.0, 0.0)
    q, lam = closest_point_segment(Point(0.25, -2.0), Segment(Point(0.0, 0.0), Point(1.0, 0.0)))
    assert lam == pytest.approx(0.25)


def test_clamped_distance_matches_sampling():
    """Test the clamped distance against dense parameter sampling."""
    s = Segment(Point(0.0, 0.0), Point(1.0, 0.0))
    p = Point(3.0, 4.0)
    lams = np.linspace(0.0, 1.0, 10001)
    sampled = np.hypot(p.x - lams, p.y).min()
    assert dist_point_segment(p, s) == pytest.approx(sampled, abs=1e-9)


def test_dist_point_trajectory_examples():
    """Test the polyline and single-waypoint cases."""
    t = Trajectory.from_coords([(-1, 0), (1, 0), (1, 3)])
    assert dist_point_trajectory(Point(0.0, 2.0), t) == pytest.approx(1.0)
    assert dist_point_trajectory(Point(5.0, 5.0), Trajectory.from_coords([(5, 4)])) == 1.0
    assert dist_point_trajectory(Point(1.0, 2.0), t) == 0.0


def test_touching_radius_examples(parallel_segments, equilateral_points, concurrent_segments):
    """Test the touching radius on the reference configurations."""
    assert touching_radius(Point(0.5, 1.0), parallel_segments) == pytest.approx(1.0)
    centroid = Point(1.0, math.sqrt(3) / 3.0)
    assert touching_radius(centroid, equilateral_points) == pytest.approx(2.0 / math.sqrt(3))
    assert touching_radius(Point(1.0, 1.0), concurrent_segments) == pytest.approx(0.0, abs=1e-15)


def test_diameter_examples():
    """Test the diameter estimate on simple inputs."""
    assert diameter_2approx(TrajectorySet.from_coords([[(2, 2)]])) == 0.0
    assert diameter_2approx(TrajectorySet.from_coords([[(0, 0)], [(3, 4)]])) == 5.0


@pytest.mark.parametrize("seed", range(20))
def test_diameter_bracket(seed):
    """Test that the estimate brackets the exact diameter within a factor two."""
    ts = random_trajectory_set(6, 3, seed=seed)
    estimate = diameter_2approx(ts)
    exact = exact_diameter(ts)
    assert estimate <= exact + 1e-12
    assert exact <= 2.0 * estimate + 1e-12


@given(points, segments())
def test_segment_distance_bounded_by_endpoints(p, s):
    """Test that the segment is never farther than its nearer endpoint."""
    assert dist_point_segment(p, s) <= min(p.distance_to(s.a), p.distance_to(s.b)) + 1e-12


@given(points, segments())
def test_returned_parameter_realizes_distance(p, s):
    """Test that the exposed parameter gives the reported distance."""
    _, lam = closest_point_segment(p, s)
    d = dist_point_segment(p, s)
    assert 0.0 <= lam <= 1.0
    assert p.distance_to(s.point_at(lam)) == pytest.approx(d, rel=1e-12, abs=1e-9)


@given(points, points, trajectories())
def test_trajectory_distance_is_lipschitz(p, q, t):
    """Test the 1-Lipschitz property of the distance to a trajectory."""
    delta = abs(dist_point_trajectory(p, t) - dist_point_trajectory(q, t))
    assert delta <= p.distance_to(q) + 1e-9


@settings(max_examples=50)
@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_touching_radius_midpoint_convexity(seed):
    """Test midpoint convexity of the radius for single-segment trajectories."""
    rng = np.random.default_rng(seed)
    ts = random_trajectory_set(5, 1, rng=rng)
    for _ in range(10):
        p, q = (Point(*rng.uniform(-5.0, 15.0, size=2)) for _ in range(2))
        mid = Point((p.x + q.x) / 2.0, (p.y + q.y) / 2.0)
        bound = (touching_radius(p, ts) + touching_radius(q, ts)) / 2.0
        assert touching_radius(mid, ts) <= bound + 1e-9


@pytest.mark.parametrize("workers", [1, 3])
def test_vectorised_radii_agree(workers):
    """Test that batch radii match the scalar function."""
    ts = random_trajectory_set(7, 3, seed=11, k_max=4)
    ts = TrajectorySet(ts.trajectories + (Trajectory.from_coords([(5, 5)]),))
    centers = np.random.default_rng(3).uniform(-5.0, 15.0, size=(500, 2))
    batch = touching_radii(centers, ts, ChunkExecutor(workers, 64))
    scalar = np.array([touching_radius(Point(x, y), ts) for x, y in centers])
    np.testing.assert_allclose(batch, scalar, rtol=1e-12, atol=1e-12)

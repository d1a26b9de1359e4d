"""Test the approximation pipeline."""

import pytest

from tmtb.core.exceptions import ParameterError
from tmtb.core.models import Point, Segment, TrajectorySet
from tmtb.geometry import diameter_2approx, touching_radius
from tmtb.solvers.approx import (
    ApproxParams,
    estimate_rad,
    estimate_rad_report,
    estimate_tmtb,
    estimate_tmtb_report,
)
from tmtb.solvers.exact import exact_tmtb
from tmtb.solvers.oracle import restricted_radius


@pytest.mark.parametrize(
    "kwargs",
    [{"eps": 0.0}, {"eps": 0.6}, {"rho": -1.0}, {"gamma": 1.0}, {"tau0": 0.0}],
)
def test_params_validation(kwargs):
    """Test parameter ranges."""
    with pytest.raises(ParameterError):
        ApproxParams(**kwargs)


def test_estimate_rad_parallel(parallel_segments):
    """Test the restricted search on two parallel segments."""
    ts = parallel_segments
    ball, tau = estimate_rad(ts, ts[0].segments, 2.0, 1e-6, 4.0, source_index=0)
    assert ball.radius == pytest.approx(2.0)
    assert tau / 2.0 <= 2.0 <= 2.0 * tau


def test_estimate_rad_outside_source():
    """Test a source segment that is not a member of the set."""
    ts = TrajectorySet.from_coords([[(0, 0), (4, 0)], [(0, 2), (4, 2)]])
    source = [Segment(Point(0.0, 1.0), Point(4.0, 1.0))]
    report = estimate_rad_report(ts, source, 2.0, 1e-6, 8.0)
    assert report.found_witness
    assert report.ball.radius == pytest.approx(1.0)
    assert report.evaluations >= 3


def test_estimate_rad_bracket(random_set):
    """Test that the returned threshold brackets the restricted optimum."""
    ts = random_set(4, 2, seed=13)
    gamma, rho = 2.0, 1e-6
    report = estimate_rad_report(
        ts, ts[0].segments, gamma, rho, 2.0 * diameter_2approx(ts), source_index=0
    )
    restricted = restricted_radius(ts, 0, samples=4001)
    assert max(report.tau / gamma, rho) <= restricted
    assert restricted <= gamma * report.tau + 5e-3
    assert report.ball.radius <= report.level + 1e-9


def test_estimate_rad_validation(parallel_segments):
    """Test parameter errors."""
    ts = parallel_segments
    with pytest.raises(ParameterError):
        estimate_rad(ts, ts[0].segments, 1.0, 1e-6, 1.0)
    with pytest.raises(ParameterError):
        estimate_rad(ts, [], 2.0, 1e-6, 1.0)
    with pytest.raises(ParameterError):
        estimate_rad(ts, ts[0].segments, 2.0, 1e-6, -1.0)


def test_estimate_tmtb_parallel(parallel_segments):
    """Test the full pipeline on the reference configuration."""
    ball = estimate_tmtb(parallel_segments, eps=0.25, rho=1e-6)
    assert 1.0 - 1e-9 <= ball.radius <= 1.25
    assert ball.radius == pytest.approx(touching_radius(ball.center, parallel_segments))


def test_estimate_tmtb_report(random_set):
    """Test the report of both stages."""
    ts = random_set(4, 3, seed=5)
    report = estimate_tmtb_report(ts, eps=0.5, rho=1e-6)
    assert report.ball.radius <= report.stage1.ball.radius
    assert report.ghosts is not None
    assert report.sausage_tau == pytest.approx(report.stage1.level)
    assert len(report.ghosts) <= 2 * 24 + 1
    data = report.to_dict()
    assert data["ghost_count"] == len(report.ghosts)
    assert data["stage3_radius"] == report.stage3.ball.radius


def test_estimate_tmtb_coincident_points():
    """Test a set whose waypoints all coincide."""
    ts = TrajectorySet.from_coords([[(2, 3)], [(2, 3)]])
    report = estimate_tmtb_report(ts)
    assert report.ball.radius == 0.0
    assert report.ball.center == Point(2.0, 3.0)


def test_estimate_tmtb_concurrent(concurrent_segments):
    """Test that a common point is found up to rho."""
    ball = estimate_tmtb(concurrent_segments, eps=0.25, rho=1e-6)
    assert ball.radius <= 1.25e-6 + 1e-12


def test_estimate_tmtb_point_source(equilateral_points):
    """Test a stationary first trajectory."""
    ball = estimate_tmtb(equilateral_points, eps=0.25)
    exact = exact_tmtb(equilateral_points).radius
    assert exact - 1e-9 <= ball.radius <= 1.25 * exact


@pytest.mark.parametrize("seed", range(8))
@pytest.mark.parametrize("eps", [0.5, 0.25, 0.1])
def test_estimate_tmtb_guarantee(random_set, seed, eps):
    """Test the (1 + eps) guarantee against the exact solver."""
    ts = random_set(2 + seed % 4, 1, seed=300 + seed, k_max=3)
    exact = exact_tmtb(ts).radius
    ball = estimate_tmtb(ts, eps=eps, rho=1e-6)
    assert ball.radius == pytest.approx(touching_radius(ball.center, ts), abs=1e-12)
    assert exact - 1e-9 <= ball.radius <= (1.0 + eps) * max(exact, 1e-6) + 1e-9

"""End-to-end agreement between the solvers on reference and random instances."""

import math

import numpy as np
import pytest

from tmtb.cli.bench import BenchConfig, run_bench, scaling_ratios, summarize
from tmtb.constructions import lp_monster, random_segment_set, random_trajectory_set
from tmtb.core.models import Trajectory, TrajectorySet
from tmtb.geometry import touching_radius
from tmtb.solvers.approx import estimate_tmtb_report
from tmtb.solvers.exact import exact_tmtb
from tmtb.solvers.lp import axiom_probe, lp_trajectory_mtb
from tmtb.solvers.oracle import grid_tmtb


def test_triangle_three_solvers(equilateral_points):
    """Test exact, approximate and grid answers on three points."""
    expected = 2.0 / math.sqrt(3.0)
    exact = exact_tmtb(equilateral_points)
    assert exact.radius == pytest.approx(expected, abs=1e-9)
    assert exact.center.x == pytest.approx(1.0, abs=1e-9)
    assert exact.center.y == pytest.approx(1.0 / math.sqrt(3.0), abs=1e-9)

    grid = grid_tmtb(equilateral_points, 0.01)
    assert expected - 1e-9 <= grid.radius <= expected + 0.01 * math.sqrt(2.0) / 2.0

    approx = estimate_tmtb_report(equilateral_points, eps=0.25).ball
    assert expected - 1e-9 <= approx.radius <= 1.25 * expected


@pytest.mark.parametrize("seed", range(5))
def test_lp_matches_exact_and_grid(seed):
    """Test that the LP-type and exact solvers agree on single segments."""
    ts = random_segment_set(5, seed=700 + seed)
    exact = exact_tmtb(ts).radius
    lp = lp_trajectory_mtb(ts, seed=seed).ball.radius
    assert lp == pytest.approx(exact, abs=1e-6)
    assert grid_tmtb(ts, 0.1).radius <= exact + 0.1 * math.sqrt(2.0) / 2.0 + 1e-9


@pytest.mark.parametrize("seed", range(6))
def test_stage_one_bound(random_set, seed):
    """Test that the first stage is within a factor four of the optimum."""
    ts = random_set(3 + seed % 3, 3, seed=900 + seed)
    rho = 1e-6
    exact = exact_tmtb(ts).radius
    report = estimate_tmtb_report(ts, eps=0.25, rho=rho)
    assert exact - 1e-9 <= report.stage1.ball.radius <= 4.0 * max(exact, rho) + 1e-9
    assert exact - 1e-9 <= report.sausage_tau <= 4.0 * max(exact, rho) + 1e-9


@pytest.mark.parametrize("seed", range(6))
def test_approx_ball_is_valid(random_set, seed):
    """Test that the reported radius reaches every trajectory."""
    ts = random_set(4, 4, seed=40 + seed)
    ball = estimate_tmtb_report(ts, eps=0.5).ball
    assert ball.radius == pytest.approx(touching_radius(ball.center, ts), abs=1e-12)
    assert max(ball.residuals(ts)) <= 1e-9


def test_axioms_hold_for_segments():
    """Test that the probe finds no violation on single segments."""
    report = axiom_probe(random_segment_set(6, seed=12), trials=60, seed=1)
    assert report.is_clean
    assert report.locality_tests > 0


def test_axioms_on_construction():
    """Test that monotonicity still holds on the four-segment construction."""
    report = axiom_probe(lp_monster(5), trials=40, seed=2)
    assert report.count("monotonicity") == 0


def test_translation_invariance(random_set):
    """Test that translating every trajectory translates the ball."""
    ts = random_set(4, 2, seed=3)
    moved = TrajectorySet(tuple(t.translated(100.0, -50.0) for t in ts))
    a, b = exact_tmtb(ts), exact_tmtb(moved)
    assert b.radius == pytest.approx(a.radius, abs=1e-7)
    approx = estimate_tmtb_report(moved, eps=0.25).ball
    assert approx.radius <= 1.25 * b.radius + 1e-7


def rigid_motion(ts, angle, reflect=False, shift=(0.0, 0.0)):
    """Rotate every waypoint about the origin, optionally mirror in the x axis, then shift."""
    c, s = math.cos(angle), math.sin(angle)
    rotation = np.array([[c, -s], [s, c]])
    if reflect:
        rotation = rotation @ np.diag([1.0, -1.0])
    moved = []
    for t in ts:
        coords = np.array([p.as_tuple() for p in t.waypoints]) @ rotation.T + np.asarray(shift)
        moved.append(Trajectory.from_coords(coords.tolist()))
    return TrajectorySet(tuple(moved))


@pytest.mark.parametrize("seed", range(6))
def test_rigid_motion_invariance(seed):
    """Test that rotating and mirroring the input keeps the radius."""
    rng = np.random.default_rng(seed)
    angle = float(rng.uniform(0.0, 2.0 * math.pi))
    shift = tuple(rng.uniform(-20.0, 20.0, size=2))
    segments = random_segment_set(8, seed=300 + seed)
    moved = rigid_motion(segments, angle, reflect=seed % 2 == 1, shift=shift)

    base = lp_trajectory_mtb(segments, seed=seed).ball.radius
    assert lp_trajectory_mtb(moved, seed=seed).ball.radius == pytest.approx(base, rel=1e-9)
    assert exact_tmtb(moved).radius == pytest.approx(base, rel=1e-9)

    ts = random_trajectory_set(4, 2, seed=400 + seed)
    assert exact_tmtb(rigid_motion(ts, angle, reflect=seed % 2 == 1, shift=shift)).radius == (
        pytest.approx(exact_tmtb(ts).radius, rel=1e-9)
    )


def mixed_instance(seed, n_low=2, n_high=6):
    """Seeded set with n in [n_low, n_high] and 1 to 4 segments per trajectory."""
    rng = np.random.default_rng(seed)
    n = int(rng.integers(n_low, n_high + 1))
    return random_trajectory_set(n, 1, k_max=4, rng=rng)


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(200))
def test_oracle_triangle_full(seed):
    """Test exact against a fine grid on mixed instances."""
    ts = mixed_instance(seed)
    exact = exact_tmtb(ts).radius
    grid = grid_tmtb(ts, 0.005).radius
    assert exact - 1e-9 <= grid <= exact + 0.005 * math.sqrt(2.0) / 2.0 + 1e-9


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(100))
def test_lp_matches_exact_full(seed):
    """Test LP agreement and seed independence on segment sets."""
    rng = np.random.default_rng(5000 + seed)
    ts = random_segment_set(int(rng.integers(2, 51)), rng=rng)
    radii = [lp_trajectory_mtb(ts, seed=s).ball.radius for s in range(3)]
    assert radii[0] == pytest.approx(exact_tmtb(ts).radius, abs=1e-6)
    assert max(radii) - min(radii) <= 1e-9 * max(1.0, max(radii))


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(100))
def test_stage_one_bound_full(seed):
    """Test the factor-four first stage on mixed instances."""
    ts = mixed_instance(8000 + seed)
    exact = exact_tmtb(ts).radius
    stage1 = estimate_tmtb_report(ts, eps=0.25, rho=1e-6).stage1
    assert exact - 1e-9 <= stage1.ball.radius <= 4.0 * max(exact, 1e-6) + 1e-9


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(100))
@pytest.mark.parametrize("eps", [0.5, 0.25, 0.1])
def test_approx_guarantee_full(seed, eps):
    """Test the (1 + eps) bound on mixed instances."""
    ts = mixed_instance(9000 + seed)
    exact = exact_tmtb(ts).radius
    ball = estimate_tmtb_report(ts, eps=eps, rho=1e-6).ball
    assert max(ball.residuals(ts)) <= 1e-9
    assert exact - 1e-9 <= ball.radius <= (1.0 + eps) * max(exact, 1e-6) + 1e-9


@pytest.mark.slow
def test_axioms_full():
    """Test the axioms with the full trial count."""
    assert axiom_probe(random_segment_set(8, seed=31), trials=200, seed=4).is_clean
    report = axiom_probe(random_trajectory_set(6, 4, seed=32), trials=200, seed=5)
    assert report.count("monotonicity") == 0


@pytest.mark.slow
def test_approx_scaling():
    """Test that doubling n at most triples the approximate solver's median time."""
    config = BenchConfig(n_values=[100, 200], k=3, eps=0.25, seeds=3, solvers=("approx",))
    ratios = scaling_ratios(summarize(run_bench(config)))
    assert ratios.loc[200, "approx"] <= 3.0


@pytest.mark.slow
def test_exact_scales_worse_than_approx():
    """Test that the exact solver grows faster than the approximation.

    Compared at n = 6 and 12 rather than 100 and 200: exact candidate enumeration is cubic
    in the feature count, so the larger sizes are out of reach for a test run.
    """
    config = BenchConfig(n_values=[6, 12], k=3, seeds=3, exact_max_n=12)
    ratios = scaling_ratios(summarize(run_bench(config)))
    assert ratios.loc[12, "exact"] > ratios.loc[12, "approx"]

"""
Approximate trajectory minimum touching ball.

``estimate_rad`` restricts the center to a set of source segments and shrinks
a threshold ``tau`` geometrically while some point of a source segment stays
within ``tau`` of every constraining trajectory. ``estimate_tmtb`` runs it
once on the first trajectory with ratio 2 to bound the optimum, then again
on the ghost trajectories of that bound with ratio ``1 + eps / 3``.
"""

import math
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from tmtb.core.exceptions import ParameterError
from tmtb.core.logging import get_logger
from tmtb.core.models import Ball, Point, Segment, TrajectorySet
from tmtb.core.utils.tolerance import ABS_TOL
from tmtb.geometry.distance import diameter_2approx, touching_radius
from tmtb.solvers.approx.ghosts import DEFAULT_MITER_LIMIT, GhostSet, ghost_trajectories
from tmtb.solvers.approx.intervals import feasible_intersection, spans_by_trajectory

logger = get_logger(__name__)


@dataclass(frozen=True)
class ApproxParams:
    """Approximation parameters; ``gamma`` and ``tau0`` drive the refining search."""

    eps: float = 0.25
    rho: float = 1e-6
    gamma: float = 2.0
    tau0: float = 1.0

    def __post_init__(self):
        if not 0 < self.eps <= 0.5:
            raise ParameterError(f"eps must lie in (0, 1/2], got {self.eps}")
        if self.rho < 0 or not math.isfinite(self.rho):
            raise ParameterError(f"rho must be finite and non-negative, got {self.rho}")
        if not self.gamma > 1:
            raise ParameterError(f"gamma must exceed 1, got {self.gamma}")
        if not self.tau0 > 0 or not math.isfinite(self.tau0):
            raise ParameterError(f"tau0 must be positive, got {self.tau0}")


@dataclass
class RadEstimate:
    """Outcome of one threshold search."""

    ball: Ball
    tau: float
    gamma: float
    evaluations: int = 0
    found_witness: bool = True

    @property
    def level(self) -> float:
        """Smallest threshold at which a feasible center was found."""
        return self.gamma * self.tau


@dataclass
class ApproxReport:
    """Both stages of the approximation and the ball finally returned."""

    ball: Ball
    stage1: RadEstimate
    stage3: Optional[RadEstimate]
    ghosts: Optional[GhostSet]
    sausage_tau: float
    params: ApproxParams
    seconds: float = 0.0
    notes: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict:
        return {
            "ball": self.ball.to_dict(),
            "eps": self.params.eps,
            "rho": self.params.rho,
            "sausage_tau": self.sausage_tau,
            "ghost_count": len(self.ghosts) if self.ghosts else 0,
            "ghost_segments": len(self.ghosts.segments) if self.ghosts else 0,
            "stage1_radius": self.stage1.ball.radius,
            "stage3_radius": self.stage3.ball.radius if self.stage3 else None,
            "evaluations": self.stage1.evaluations
            + (self.stage3.evaluations if self.stage3 else 0),
            "seconds": self.seconds,
        }


def _rho_floor(ts: TrajectorySet, rho: float) -> float:
    """Stop threshold; a zero ``rho`` becomes a tiny scale-relative floor."""
    return max(rho, ABS_TOL * max(1.0, diameter_2approx(ts)))


def estimate_rad_report(
    ts: TrajectorySet,
    source_segments: Sequence[Segment],
    gamma: float,
    rho: float,
    tau0: float,
    source_index: Optional[int] = None,
) -> RadEstimate:
    """
    Threshold search with the center restricted to ``source_segments``.

    Args:
        ts: Trajectory set the ball must touch
        source_segments: Segments the center may lie on
        gamma: Shrink ratio, greater than 1
        rho: Stop once the threshold drops to ``rho``
        tau0: Starting threshold, an upper bound on the restricted optimum
        source_index: Index of the source trajectory in ``ts`` when it is a
            member; that trajectory is then left out of the constraints

    Returns:
        RadEstimate whose ``level`` is the last feasible threshold
    """
    if not gamma > 1:
        raise ParameterError(f"gamma must exceed 1, got {gamma}")
    if not tau0 > 0 or not math.isfinite(tau0):
        raise ParameterError(f"tau0 must be positive, got {tau0}")
    if rho < 0:
        raise ParameterError(f"rho must be non-negative, got {rho}")
    if not source_segments:
        raise ParameterError("estimate_rad needs at least one source segment")

    constraints = ts.without(source_index) if source_index is not None and ts.n > 1 else ts
    unconstrained = source_index is not None and ts.n == 1
    stop = _rho_floor(ts, rho)

    tau = tau0
    evaluations = 0
    best: Optional[Ball] = None
    for segment in source_segments:
        while tau > stop:
            evaluations += 1
            if unconstrained:
                feasible = feasible_intersection([], segment)
            else:
                spans = spans_by_trajectory(segment, constraints, tau)
                feasible = feasible_intersection(spans, segment)
            if feasible.is_empty:
                break
            widest = feasible.widest()
            witness = segment.point_at(widest.mid)
            ball = Ball(witness, touching_radius(witness, ts))
            if best is None or ball.radius < best.radius:
                best = ball
            tau /= gamma

    found = best is not None
    if not found:
        start = source_segments[0].midpoint
        best = Ball(start, touching_radius(start, ts))
        logger.warning(
            "No feasible center at the starting threshold",
            extra={"context": {"tau0": tau0, "segments": len(source_segments)}},
        )
    return RadEstimate(best, tau, gamma, evaluations, found)


def estimate_rad(
    ts: TrajectorySet,
    source_segments: Sequence[Segment],
    gamma: float,
    rho: float,
    tau0: float,
    source_index: Optional[int] = None,
) -> Tuple[Ball, float]:
    """
    Threshold search with the center restricted to ``source_segments``.

    Returns:
        The witness ball and the final threshold ``tau``; ``gamma * tau`` is
        the last threshold at which a feasible center existed
    """
    result = estimate_rad_report(ts, source_segments, gamma, rho, tau0, source_index)
    return result.ball, result.tau


def _stage1(ts: TrajectorySet, rho: float) -> RadEstimate:
    source = ts[0]
    if source.k == 0:
        p = source.start
        radius = touching_radius(p, ts)
        return RadEstimate(Ball(p, radius), radius / 2.0, 2.0, 0, True)
    tau0 = 2.0 * diameter_2approx(ts)
    return estimate_rad_report(ts, source.segments, 2.0, rho, tau0, source_index=0)


def estimate_tmtb_report(
    ts: TrajectorySet,
    eps: float = 0.25,
    rho: float = 1e-6,
    miter_limit: float = DEFAULT_MITER_LIMIT,
) -> ApproxReport:
    """
    (1 + eps)-approximate touching ball with both stages exposed.

    Args:
        ts: Trajectory set
        eps: Approximation parameter in ``(0, 1/2]``
        rho: Radii below ``rho`` are not resolved further
        miter_limit: Ghost join limit, see ``ghost_trajectories``

    Returns:
        ApproxReport; ``ball`` is the smaller of the two stage balls
    """
    started = time.perf_counter()
    diameter = diameter_2approx(ts)
    params = ApproxParams(eps, rho, 1.0 + eps / 3.0, 2.0 * diameter if diameter > 0 else 1.0)

    if diameter == 0.0:
        ball = Ball(ts[0].start, 0.0)
        stage = RadEstimate(ball, 0.0, 2.0, 0, True)
        elapsed = time.perf_counter() - started
        return ApproxReport(ball, stage, None, None, 0.0, params, elapsed)

    stage1 = _stage1(ts, rho)
    sausage_tau = stage1.level
    report = ApproxReport(stage1.ball, stage1, None, None, sausage_tau, params)

    if sausage_tau <= _rho_floor(ts, rho):
        report.notes.append("stage one already below rho")
    else:
        ghosts = ghost_trajectories(ts[0], sausage_tau, eps, miter_limit)
        stage3 = estimate_rad_report(ts, ghosts.segments, params.gamma, rho, sausage_tau)
        report.ghosts = ghosts
        report.stage3 = stage3
        if stage3.ball.radius <= stage1.ball.radius:
            report.ball = stage3.ball

    report.seconds = time.perf_counter() - started
    logger.info(
        "Approximate solve finished",
        extra={
            "context": {
                "n": ts.n,
                "eps": eps,
                "rho": rho,
                "sausage_tau": sausage_tau,
                "ghosts": len(report.ghosts) if report.ghosts else 0,
                "radius": report.ball.radius,
                "seconds": report.seconds,
            }
        },
    )
    return report


def estimate_tmtb(
    ts: TrajectorySet,
    eps: float = 0.25,
    rho: float = 1e-6,
    miter_limit: float = DEFAULT_MITER_LIMIT,
) -> Ball:
    """
    Ball touching every trajectory with radius at most ``(1 + eps) * max(r*, rho)``.

    Args:
        ts: Trajectory set
        eps: Approximation parameter in ``(0, 1/2]``
        rho: Radii below ``rho`` are not resolved further
        miter_limit: Ghost join limit, see ``ghost_trajectories``

    Returns:
        The approximate ball
    """
    return estimate_tmtb_report(ts, eps, rho, miter_limit).ball

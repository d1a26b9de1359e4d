"""
Exact trajectory minimum touching ball by candidate enumeration.
"""

import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

from tmtb.core.exceptions import ParameterError
from tmtb.core.logging import get_logger
from tmtb.core.models import Ball, Point, TrajectorySet
from tmtb.core.utils import ChunkExecutor, radius_slack
from tmtb.core.utils.tolerance import TOL_PT
from tmtb.geometry.distance import (
    bounding_box,
    diameter_2approx,
    touching_radii,
    touching_radius,
)
from tmtb.solvers.exact.candidates import (
    Candidate,
    CandidateKind,
    Window,
    enumerate_candidates,
    generators_of,
)
from tmtb.solvers.exact.features import FeatureCatalog, collect_features

logger = get_logger(__name__)

# Roots farther than this many diameters outside the bounding box are dropped.
WINDOW_DIAMETERS = 10.0


@dataclass
class ExactReport:
    """Exact solution plus enumeration statistics."""

    ball: Ball
    candidate_counts: Dict[str, int] = field(default_factory=dict)
    generated: int = 0
    evaluated: int = 0
    winner: Optional[Candidate] = None
    seconds: float = 0.0

    def to_dict(self) -> Dict:
        """Convert report to dictionary."""
        return {
            "ball": self.ball.to_dict(),
            "candidate_counts": dict(self.candidate_counts),
            "generated": self.generated,
            "evaluated": self.evaluated,
            "winner_kind": self.winner.kind.name.lower() if self.winner else None,
            "generators": [f.describe() for f in self.winner.generators] if self.winner else [],
            "seconds": self.seconds,
        }


@dataclass(frozen=True)
class EssentialityEntry:
    """Leave-one-out radius for one trajectory."""

    index: int
    full_radius: float
    without_ball: Ball
    essential: bool

    @property
    def without_radius(self) -> float:
        return self.without_ball.radius

    def to_dict(self) -> Dict:
        return {
            "index": self.index,
            "full_radius": self.full_radius,
            "without_center": [self.without_ball.center.x, self.without_ball.center.y],
            "without_radius": self.without_radius,
            "essential": self.essential,
        }


def search_window(ts: TrajectorySet) -> Window:
    """Bounding box of ``ts`` grown by ten diameter estimates on every side."""
    xmin, ymin, xmax, ymax = bounding_box(ts)
    pad = WINDOW_DIAMETERS * diameter_2approx(ts) + TOL_PT
    return xmin - pad, ymin - pad, xmax + pad, ymax + pad


def select_best(centers: np.ndarray, radii: np.ndarray) -> int:
    """
    Index of the smallest radius; near-ties go to the lexicographically smallest center.

    Args:
        centers: ``(m, 2)`` candidate centers
        radii: ``(m,)`` touching radii

    Returns:
        Row index of the chosen candidate
    """
    rmin = float(radii.min())
    tied = np.flatnonzero(radii <= rmin + radius_slack(rmin))
    order = np.lexsort((centers[tied, 1], centers[tied, 0]))
    return int(tied[order[0]])


def exact_tmtb_report(
    ts: TrajectorySet, executor: Optional[ChunkExecutor] = None
) -> ExactReport:
    """
    Solve exactly and report how the answer was found.

    Args:
        ts: Trajectory set
        executor: Optional executor for the candidate evaluation

    Returns:
        ExactReport with the optimal ball
    """
    if ts is None or ts.n < 1:
        raise ParameterError("exact_tmtb needs at least one trajectory")
    started = time.perf_counter()

    if ts.n == 1:
        ball = Ball(ts[0].start, 0.0)
        return ExactReport(ball, seconds=time.perf_counter() - started)

    catalog = FeatureCatalog.build(collect_features(ts))
    cloud = enumerate_candidates(ts, search_window(ts), catalog)
    radii = touching_radii(cloud.centers, ts, executor)
    best = select_best(cloud.centers, radii)
    center = Point(float(cloud.centers[best, 0]), float(cloud.centers[best, 1]))
    ball = Ball(center, touching_radius(center, ts))

    counts = {kind.name.lower(): n for kind, n in cloud.counts().items()}
    generators = generators_of(
        center, ball.radius, catalog.endpoints + catalog.interiors, radius_slack(ball.radius, 1e-7)
    )
    winner = Candidate(center, CandidateKind(int(cloud.kinds[best])), generators)
    elapsed = time.perf_counter() - started
    logger.debug(
        "Exact solve finished",
        extra={
            "context": {
                "n": ts.n,
                "features": catalog.size,
                "generated": cloud.generated,
                "evaluated": len(cloud),
                "radius": ball.radius,
                "winner_kind": winner.kind.name.lower(),
                "seconds": elapsed,
            }
        },
    )
    return ExactReport(ball, counts, cloud.generated, len(cloud), winner, elapsed)


def exact_tmtb(ts: TrajectorySet, executor: Optional[ChunkExecutor] = None) -> Ball:
    """
    Exact minimum touching ball of a trajectory set.

    Args:
        ts: Trajectory set with at least one trajectory
        executor: Optional executor for the candidate evaluation

    Returns:
        The smallest ball meeting every trajectory
    """
    return exact_tmtb_report(ts, executor).ball


def essentiality_check(
    ts: TrajectorySet, executor: Optional[ChunkExecutor] = None
) -> List[EssentialityEntry]:
    """
    Leave-one-out test of every trajectory.

    A trajectory is essential when removing it strictly shrinks the optimal radius.

    Args:
        ts: Trajectory set with at least two trajectories
        executor: Optional executor for the candidate evaluation

    Returns:
        One entry per trajectory, in input order
    """
    if ts.n < 2:
        raise ParameterError("essentiality_check needs at least two trajectories")
    full = exact_tmtb(ts, executor).radius
    entries = []
    for i in range(ts.n):
        without = exact_tmtb(ts.without(i), executor)
        essential = without.radius < full - radius_slack(full)
        entries.append(EssentialityEntry(i, full, without, essential))
        logger.debug(
            "Leave-one-out radius",
            extra={"context": {"index": i, "full": full, "without": without.radius}},
        )
    return entries

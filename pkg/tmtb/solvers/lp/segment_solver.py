"""
Move-to-front LP-type solver.

With at most one segment per trajectory the touching-ball problem satisfies
monotonicity and locality with combinatorial dimension three, so a basis of at
most three constraints determines the optimum. Constraints are scanned in a
seeded random order; a violator triggers a basis recomputation over the
current basis plus the violator and is moved to the front of the order.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Sequence, Tuple, Union

import numpy as np

from tmtb.core.exceptions import ParameterError, SolverError
from tmtb.core.logging import get_logger
from tmtb.core.models import Ball, Point, Segment, Trajectory, TrajectorySet
from tmtb.core.utils import exceeds
from tmtb.geometry.distance import dist_point_trajectory
from tmtb.solvers.exact import exact_tmtb

logger = get_logger(__name__)

Constraint = Union[Segment, Trajectory]

# Largest basis for planar single-segment inputs.
MAX_BASIS = 3
DEFAULT_STEP_FACTOR = 10


@dataclass(frozen=True)
class Basis:
    """Minimal constraint subset whose exact ball is the current optimum."""

    constraints: Tuple[Trajectory, ...]
    ball: Ball

    @property
    def segments(self) -> List[Segment]:
        return [s for t in self.constraints for s in t.segments]

    def __len__(self) -> int:
        return len(self.constraints)


@dataclass
class LPResult:
    """Ball, final basis and work counters of one LP-type run."""

    ball: Ball
    basis: Basis
    violation_tests: int = 0
    basis_changes: int = 0
    passes: int = 0
    seed: int = 0
    history: List[float] = field(default_factory=list)

    def to_dict(self):
        return {
            "ball": self.ball.to_dict(),
            "basis_size": len(self.basis),
            "violation_tests": self.violation_tests,
            "basis_changes": self.basis_changes,
            "passes": self.passes,
            "seed": self.seed,
        }


def _as_trajectory(c: Constraint) -> Trajectory:
    if isinstance(c, Trajectory):
        return c
    return Trajectory((c.a, c.b))


def _mtb_of(constraints: Sequence[Trajectory]) -> Ball:
    if not constraints:
        return Ball(Point(0.0, 0.0), 0.0)
    if len(constraints) == 1:
        t = constraints[0]
        return Ball(t.segments[0].midpoint if t.k else t.start, 0.0)
    return exact_tmtb(TrajectorySet(tuple(constraints)))


def mtb_small(segments: Sequence[Constraint]) -> Ball:
    """
    Exact minimum touching ball of a handful of segments.

    Args:
        segments: Up to four segments (or stationary/single-segment trajectories)

    Returns:
        The optimal ball; the origin with radius 0 for no input and the
        segment midpoint for a single segment
    """
    if len(segments) > MAX_BASIS + 1:
        raise ParameterError(f"mtb_small takes at most {MAX_BASIS + 1} segments")
    return _mtb_of([_as_trajectory(s) for s in segments])


def violates(ball: Ball, s: Constraint) -> bool:
    """True when ``s`` lies farther from the center than the radius allows."""
    return exceeds(dist_point_trajectory(ball.center, _as_trajectory(s)), ball.radius)


def _reduce(candidates: List[Trajectory]) -> Basis:
    """Smallest subset of ``candidates`` whose ball has the full radius and covers the rest."""
    full = _mtb_of(candidates)
    for size in range(1, len(candidates)):
        for subset in combinations(candidates, size):
            ball = _mtb_of(subset)
            if exceeds(full.radius, ball.radius):
                continue
            if any(violates(ball, c) for c in candidates):
                continue
            return Basis(tuple(subset), ball)
    if len(candidates) <= MAX_BASIS:
        return Basis(tuple(candidates), full)
    raise SolverError(
        f"No basis of size <= {MAX_BASIS} among {len(candidates)} constraints; "
        "the input is not an LP-type instance"
    )


def lp_trajectory_mtb(
    constraints: Sequence[Constraint],
    seed: int = 0,
    step_factor: int = DEFAULT_STEP_FACTOR,
) -> LPResult:
    """
    Solve the touching-ball problem for trajectories with at most one segment.

    Args:
        constraints: Segments, or trajectories with ``k <= 1``
        seed: Seed of the random scan order
        step_factor: Abort after ``step_factor * n^2`` violation tests

    Returns:
        LPResult with the optimal ball and the final basis
    """
    if isinstance(constraints, TrajectorySet):
        constraints = list(constraints.trajectories)
    items = [_as_trajectory(c) for c in constraints]
    if not items:
        raise ParameterError("lp_trajectory_mtb needs at least one constraint")
    too_long = [i for i, t in enumerate(items) if t.k > 1]
    if too_long:
        raise ParameterError(
            f"Trajectory {too_long[0]} has {items[too_long[0]].k} segments; the LP-type "
            "solver only accepts trajectories with at most one segment"
        )

    n = len(items)
    rng = np.random.default_rng(seed)
    order = [items[i] for i in rng.permutation(n)]
    basis = Basis((order[0],), _mtb_of([order[0]]))
    step_limit = step_factor * n * n
    result = LPResult(basis.ball, basis, seed=seed)

    dirty = True
    while dirty:
        dirty = False
        result.passes += 1
        for idx in range(n):
            c = order[idx]
            result.violation_tests += 1
            if result.violation_tests > step_limit:
                raise SolverError(
                    f"LP-type solver exceeded {step_limit} violation tests "
                    f"(n={n}, basis changes={result.basis_changes})"
                )
            if not violates(basis.ball, c):
                continue
            basis = _reduce(list(basis.constraints) + [c])
            order.insert(0, order.pop(idx))
            result.basis_changes += 1
            result.history.append(basis.ball.radius)
            dirty = True

    result.ball = basis.ball
    result.basis = basis
    logger.debug(
        "LP-type solve finished",
        extra={
            "context": {
                "n": n,
                "seed": seed,
                "radius": basis.ball.radius,
                "violation_tests": result.violation_tests,
                "basis_changes": result.basis_changes,
                "passes": result.passes,
            }
        },
    )
    return result


def lp_segment_mtb(
    segments: Sequence[Segment], seed: int = 0, step_factor: int = DEFAULT_STEP_FACTOR
) -> Ball:
    """
    Exact minimum touching ball of a set of segments.

    Args:
        segments: At least one segment
        seed: Seed of the random scan order; the radius does not depend on it
        step_factor: Abort after ``step_factor * n^2`` violation tests

    Returns:
        The optimal ball
    """
    return lp_trajectory_mtb(segments, seed, step_factor).ball

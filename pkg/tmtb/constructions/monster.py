"""
A configuration in which every trajectory is essential.

Four-segment trajectories can be arranged so that removing any single one
strictly shrinks the minimum touching ball. The number of trajectories is
arbitrary, so no constant-size basis exists and the problem is not LP-type
once trajectories have four segments.

Layout for ``n`` trajectories:

* ``T0`` runs from ``(0, 0)`` down to ``(n + 2.5, -0.5)``.
* ``T1`` starts at ``(0, 4)``, descends through ``(3.5, 1)`` and runs along
  height 1 to ``(n + 2.5, 1)``.
* Arch ``Ti`` for ``2 <= i <= n - 1`` runs along height 1 from ``(0, 1)`` to
  ``(i, 1)``, rises to ``(i + 1.25, 4)``, returns to ``(i + 2.5, 1)`` and
  continues along height 1 to ``(n + 2.5, 1)``.
"""

from dataclasses import dataclass, field
from typing import Dict, List

from tmtb.core.exceptions import ParameterError
from tmtb.core.logging import get_logger
from tmtb.core.models import Ball, Trajectory, TrajectorySet
from tmtb.solvers.exact import EssentialityEntry, essentiality_check, exact_tmtb

logger = get_logger(__name__)

ARCH_WIDTH = 2.5
ARCH_HEIGHT = 4.0
BASELINE = 1.0


@dataclass(frozen=True)
class MonsterConfig:
    """Size of the construction; needs more than four trajectories."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n <= 4:
            raise ParameterError(f"The construction needs n > 4, got {self.n}")

    @property
    def right_end(self) -> float:
        return self.n + ARCH_WIDTH


def lp_monster(n: int) -> TrajectorySet:
    """
    Build the construction with ``n`` trajectories.

    Args:
        n: Number of trajectories, greater than 4

    Returns:
        ``T0`` (1 segment), ``T1`` (2 segments) and ``n - 2`` arches (4 segments each)
    """
    config = MonsterConfig(n)
    end = config.right_end
    trajectories = [
        Trajectory.from_coords([(0.0, 0.0), (end, -0.5)]),
        Trajectory.from_coords([(0.0, ARCH_HEIGHT), (3.5, BASELINE), (end, BASELINE)]),
    ]
    for i in range(2, n):
        trajectories.append(
            Trajectory.from_coords(
                [
                    (0.0, BASELINE),
                    (float(i), BASELINE),
                    (i + ARCH_WIDTH / 2.0, ARCH_HEIGHT),
                    (i + ARCH_WIDTH, BASELINE),
                    (end, BASELINE),
                ]
            )
        )
    return TrajectorySet(tuple(trajectories))


def monster_without(n: int, index: int) -> TrajectorySet:
    """The construction with trajectory ``index`` removed."""
    return lp_monster(n).without(index)


@dataclass
class MonsterReport:
    """Leave-one-out results for the construction."""

    n: int
    full_ball: Ball
    entries: List[EssentialityEntry] = field(default_factory=list)

    @property
    def all_essential(self) -> bool:
        return all(e.essential for e in self.entries)

    def entry(self, index: int) -> EssentialityEntry:
        return self.entries[index]

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "full_ball": self.full_ball.to_dict(),
            "entries": [e.to_dict() for e in self.entries],
            "all_essential": self.all_essential,
        }


def monster_removals(n: int) -> MonsterReport:
    """
    Remove each trajectory of the construction in turn and re-solve exactly.

    Args:
        n: Number of trajectories, greater than 4

    Returns:
        MonsterReport with the full ball and one entry per removed trajectory
    """
    ts = lp_monster(n)
    report = MonsterReport(n, exact_tmtb(ts), essentiality_check(ts))
    logger.info(
        "Leave-one-out sweep finished",
        extra={
            "context": {
                "n": n,
                "full_radius": report.full_ball.radius,
                "all_essential": report.all_essential,
            }
        },
    )
    return report

"""Approximation by geometric threshold search on trajectory and ghost segments."""

from tmtb.solvers.approx.estimate import (
    ApproxParams,
    ApproxReport,
    RadEstimate,
    estimate_rad,
    estimate_rad_report,
    estimate_tmtb,
    estimate_tmtb_report,
)
from tmtb.solvers.approx.ghosts import (
    GhostSet,
    ghost_offsets,
    ghost_trajectories,
    offset_polyline,
    sausage_contains,
)
from tmtb.solvers.approx.intervals import (
    FeasibleSet,
    ParamInterval,
    feasible_intersection,
    interval_within,
    spans_by_trajectory,
)

__all__ = [
    "ApproxParams",
    "ApproxReport",
    "RadEstimate",
    "estimate_rad",
    "estimate_rad_report",
    "estimate_tmtb",
    "estimate_tmtb_report",
    "GhostSet",
    "ghost_offsets",
    "ghost_trajectories",
    "offset_polyline",
    "sausage_contains",
    "FeasibleSet",
    "ParamInterval",
    "feasible_intersection",
    "interval_within",
    "spans_by_trajectory",
]

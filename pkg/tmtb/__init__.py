"""
Trajectory Minimum Touching Ball

Smallest disk that intersects every polygonal trajectory of a set: an exact
candidate-enumeration solver, an LP-type solver for single-segment inputs, a
(1+eps)-approximation driven by ghost offset polylines, and a grid oracle.
"""

__version__ = "1.0.0"

from tmtb.core.models import Ball, Point, Segment, Trajectory, TrajectorySet
from tmtb.solvers.exact import exact_tmtb
from tmtb.solvers.lp import lp_segment_mtb, lp_trajectory_mtb
from tmtb.solvers.approx import estimate_tmtb
from tmtb.solvers.oracle import grid_tmtb

__all__ = [
    "Ball",
    "Point",
    "Segment",
    "Trajectory",
    "TrajectorySet",
    "exact_tmtb",
    "lp_segment_mtb",
    "lp_trajectory_mtb",
    "estimate_tmtb",
    "grid_tmtb",
]

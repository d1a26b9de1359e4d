"""
Uniform grid oracle.

Evaluates the touching radius at every point of a square grid over the
bounding box grown by the diameter estimate. Since the touching radius is
1-Lipschitz, the best grid point is within half a cell diagonal of optimal.
"""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from tmtb.core.exceptions import ParameterError
from tmtb.core.logging import get_logger
from tmtb.core.models import Ball, Point, TrajectorySet
from tmtb.core.utils import ChunkExecutor
from tmtb.geometry.distance import (
    bounding_box,
    diameter_2approx,
    touching_radii,
    touching_radius,
)

logger = get_logger(__name__)

DEFAULT_MAX_POINTS = 100_000_000
# Distance evaluations per numpy batch.
_BATCH_CELLS = 4_000_000


@dataclass(frozen=True)
class GridSpec:
    """Grid of pitch ``width`` anchored at ``(xmin, ymin)``."""

    width: float
    xmin: float
    ymin: float
    xmax: float
    ymax: float

    def __post_init__(self):
        if not self.width > 0 or not math.isfinite(self.width):
            raise ParameterError(f"Grid width must be positive, got {self.width}")

    @classmethod
    def around(cls, ts: TrajectorySet, width: float) -> "GridSpec":
        """Bounding box of ``ts`` expanded by the diameter estimate on every side."""
        pad = diameter_2approx(ts)
        xmin, ymin, xmax, ymax = bounding_box(ts)
        return cls(width, xmin - pad, ymin - pad, xmax + pad, ymax + pad)

    @property
    def shape(self) -> Tuple[int, int]:
        """Number of rows and columns."""
        nx = int(math.floor((self.xmax - self.xmin) / self.width)) + 1
        ny = int(math.floor((self.ymax - self.ymin) / self.width)) + 1
        return ny, nx

    @property
    def count(self) -> int:
        ny, nx = self.shape
        return ny * nx

    def xs(self) -> np.ndarray:
        return self.xmin + np.arange(self.shape[1]) * self.width

    def row_y(self, row: int) -> float:
        return self.ymin + row * self.width


def grid_tmtb(
    ts: TrajectorySet,
    width: float,
    max_points: int = DEFAULT_MAX_POINTS,
    executor: Optional[ChunkExecutor] = None,
) -> Ball:
    """
    Best grid point for the touching radius.

    Args:
        ts: Trajectory set
        width: Grid pitch
        max_points: Refuse grids with more points than this
        executor: Optional executor; rows are split across its workers

    Returns:
        Ball at the best grid point; ties go to the lexicographically
        smallest center
    """
    spec = GridSpec.around(ts, width)
    if spec.xmin == spec.xmax and spec.ymin == spec.ymax:
        return Ball(ts[0].start, 0.0)
    if spec.count > max_points:
        raise ParameterError(
            f"Grid of width {width} has {spec.count} points, above the limit of {max_points}"
        )

    ny, nx = spec.shape
    xs = spec.xs()
    segments = ts.segment_table.a.shape[0]
    rows_per_batch = max(1, _BATCH_CELLS // max(1, nx * segments))
    runner = ChunkExecutor(executor.max_workers if executor else 1, rows_per_batch)

    def scan(rows: range) -> Tuple[float, float, float]:
        ys = spec.ymin + np.arange(rows.start, rows.stop) * width
        centers = np.column_stack([np.tile(xs, len(ys)), np.repeat(ys, nx)])
        radii = touching_radii(centers, ts)
        rmin = radii.min()
        tied = np.flatnonzero(radii == rmin)
        order = np.lexsort((centers[tied, 1], centers[tied, 0]))
        best = tied[order[0]]
        return float(rmin), float(centers[best, 0]), float(centers[best, 1])

    _, x, y = min(runner.map_chunks(scan, ny))
    center = Point(x, y)
    ball = Ball(center, touching_radius(center, ts))
    logger.debug(
        "Grid scan finished",
        extra={"context": {"width": width, "points": spec.count, "radius": ball.radius}},
    )
    return ball


def restricted_radius(ts: TrajectorySet, source_index: int, samples: int = 2001) -> float:
    """
    Smallest touching radius over sampled centers on one trajectory.

    Args:
        ts: Trajectory set
        source_index: Trajectory the center is restricted to
        samples: Samples per segment, endpoints included

    Returns:
        Sampled upper estimate of the restricted optimum
    """
    source = ts[source_index]
    if source.k == 0:
        return touching_radius(source.start, ts)
    lam = np.linspace(0.0, 1.0, max(2, samples))
    best = math.inf
    for s in source.segments:
        centers = np.column_stack(
            [s.a.x + lam * (s.b.x - s.a.x), s.a.y + lam * (s.b.y - s.a.y)]
        )
        best = min(best, float(touching_radii(centers, ts).min()))
    return best

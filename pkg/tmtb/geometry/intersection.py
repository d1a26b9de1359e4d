"""
Segment-segment intersection.
"""

from dataclasses import dataclass
from typing import Optional, Union

from tmtb.core.models import Point, Segment
from tmtb.core.utils.tolerance import TOL_PT

# Sine of the angle below which two directions count as parallel.
PARALLEL_SINE = 1e-12


@dataclass(frozen=True)
class Overlap:
    """Shared stretch of two collinear segments."""

    start: Point
    end: Point

    @property
    def length(self) -> float:
        return self.start.distance_to(self.end)

    @property
    def midpoint(self) -> Point:
        return Point((self.start.x + self.end.x) / 2.0, (self.start.y + self.end.y) / 2.0)


def segment_segment_intersection(s1: Segment, s2: Segment) -> Union[None, Point, Overlap]:
    """
    Intersect two closed segments.

    Args:
        s1: First segment
        s2: Second segment

    Returns:
        ``None`` when disjoint, the crossing ``Point`` when they meet in a
        single point, or an ``Overlap`` when they are collinear and share a
        stretch longer than ``TOL_PT``.
    """
    r = s1.vector
    s = s2.vector
    qp = s2.a - s1.a
    len_r = r.norm()
    len_s = s.norm()
    denom = r.cross(s)

    if abs(denom) <= PARALLEL_SINE * len_r * len_s:
        if abs(qp.cross(r)) / len_r > TOL_PT:
            return None
        rr = len_r * len_r
        t0 = qp.dot(r) / rr
        t1 = t0 + s.dot(r) / rr
        lo = max(0.0, min(t0, t1))
        hi = min(1.0, max(t0, t1))
        if lo > hi + TOL_PT / len_r:
            return None
        start = s1.point_at(lo)
        end = s1.point_at(max(lo, hi))
        if start.distance_to(end) <= TOL_PT:
            return start
        return Overlap(start, end)

    t = qp.cross(s) / denom
    u = qp.cross(r) / denom
    t_slack = TOL_PT / len_r
    u_slack = TOL_PT / len_s
    if -t_slack <= t <= 1.0 + t_slack and -u_slack <= u <= 1.0 + u_slack:
        return s1.point_at(min(1.0, max(0.0, t)))
    return None


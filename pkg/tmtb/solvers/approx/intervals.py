"""
Feasible parameter intervals along a segment.

A point ``ell(lam)`` is within ``tau`` of a segment ``s`` exactly when it lies
in the capsule around ``s``: the union of two endpoint disks and a rectangle.
The capsule is convex, so its trace on ``ell`` is a single interval.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from tmtb.core.models import Segment, Trajectory, TrajectorySet

# Coefficients below this count as zero when solving the clip inequalities.
_EPS = 1e-15


@dataclass(frozen=True)
class ParamInterval:
    """Closed parameter range ``[lo, hi]`` on one segment."""

    segment: Segment
    lo: float
    hi: float

    def __post_init__(self):
        if not 0.0 <= self.lo <= self.hi <= 1.0:
            raise ValueError(f"Invalid parameter interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return (self.lo + self.hi) / 2.0

    def contains(self, lam: float) -> bool:
        return self.lo <= lam <= self.hi


@dataclass(frozen=True)
class FeasibleSet:
    """Sorted, pairwise disjoint intervals on one segment."""

    segment: Optional[Segment]
    intervals: Tuple[ParamInterval, ...] = field(default_factory=tuple)

    @property
    def is_empty(self) -> bool:
        return not self.intervals

    def widest(self) -> Optional[ParamInterval]:
        if not self.intervals:
            return None
        return max(self.intervals, key=lambda iv: iv.width)

    def contains(self, lam: float) -> bool:
        return any(iv.contains(lam) for iv in self.intervals)

    @property
    def measure(self) -> float:
        return sum(iv.width for iv in self.intervals)


def _disk_span(p0, d, dd, cx, cy, tau):
    ex = p0[0] - cx
    ey = p0[1] - cy
    half_b = d[0] * ex + d[1] * ey
    disc = half_b * half_b - dd * (ex * ex + ey * ey - tau * tau)
    ok = disc >= 0
    sq = np.sqrt(np.where(ok, disc, 0.0))
    lo = np.where(ok, (-half_b - sq) / dd, np.inf)
    hi = np.where(ok, (-half_b + sq) / dd, -np.inf)
    return lo, hi


def _slab(alpha, beta, lower, upper):
    """Parameter range where ``lower <= alpha + beta * lam <= upper``."""
    flat = np.abs(beta) <= _EPS
    safe = np.where(flat, 1.0, beta)
    t1 = (lower - alpha) / safe
    t2 = (upper - alpha) / safe
    inside = (alpha >= lower) & (alpha <= upper)
    lo = np.where(flat, np.where(inside, -np.inf, np.inf), np.minimum(t1, t2))
    hi = np.where(flat, np.where(inside, np.inf, -np.inf), np.maximum(t1, t2))
    return lo, hi


def capsule_spans(
    ell: Segment, a: np.ndarray, b: np.ndarray, tau: float
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Parameter span of ``ell`` inside the ``tau``-capsule of each segment ``a[i] -> b[i]``.

    Rows with ``a == b`` are points and contribute a disk only.

    Returns:
        ``(lo, hi)`` arrays clipped to ``[0, 1]``; empty spans have ``lo > hi``
    """
    p0 = (ell.a.x, ell.a.y)
    d = (ell.b.x - ell.a.x, ell.b.y - ell.a.y)
    dd = d[0] * d[0] + d[1] * d[1]
    ax, ay, bx, by = a[:, 0], a[:, 1], b[:, 0], b[:, 1]

    lo_a, hi_a = _disk_span(p0, d, dd, ax, ay, tau)
    lo_b, hi_b = _disk_span(p0, d, dd, bx, by, tau)

    sx, sy = bx - ax, by - ay
    length = np.hypot(sx, sy)
    real = length > 0
    safe_len = np.where(real, length, 1.0)
    ux, uy = sx / safe_len, sy / safe_len
    nx, ny = -uy, ux
    rel_x, rel_y = p0[0] - ax, p0[1] - ay
    lo_u, hi_u = _slab(rel_x * ux + rel_y * uy, d[0] * ux + d[1] * uy, 0.0, length)
    lo_n, hi_n = _slab(rel_x * nx + rel_y * ny, d[0] * nx + d[1] * ny, -tau, tau)
    lo_r = np.where(real, np.maximum(lo_u, lo_n), np.inf)
    hi_r = np.where(real, np.minimum(hi_u, hi_n), -np.inf)

    pieces_lo = np.stack([lo_a, lo_b, lo_r])
    pieces_hi = np.stack([hi_a, hi_b, hi_r])
    live = pieces_lo <= pieces_hi
    lo = np.where(live, pieces_lo, np.inf).min(axis=0)
    hi = np.where(live, pieces_hi, -np.inf).max(axis=0)
    return np.maximum(lo, 0.0), np.minimum(hi, 1.0)


def _merge(spans: Sequence[Tuple[float, float]]) -> List[Tuple[float, float]]:
    merged: List[Tuple[float, float]] = []
    for lo, hi in sorted(spans):
        if merged and lo <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], hi))
        else:
            merged.append((lo, hi))
    return merged


def interval_within(ell: Segment, t2: Trajectory, tau: float) -> List[ParamInterval]:
    """
    Parameters of ``ell`` whose points are within ``tau`` of trajectory ``t2``.

    Args:
        ell: Segment being searched
        t2: Constraining trajectory
        tau: Distance threshold, non-negative

    Returns:
        Sorted, disjoint intervals
    """
    if tau < 0:
        raise ValueError(f"tau must be non-negative, got {tau}")
    table = TrajectorySet((t2,)).segment_table
    lo, hi = capsule_spans(ell, table.a, table.b, tau)
    spans = [(float(l), float(h)) for l, h in zip(lo, hi) if l <= h]
    return [ParamInterval(ell, l, h) for l, h in _merge(spans)]


def spans_by_trajectory(
    ell: Segment, ts: TrajectorySet, tau: float
) -> List[List[ParamInterval]]:
    """``interval_within`` for every trajectory of ``ts`` in one vectorised pass."""
    table = ts.segment_table
    lo, hi = capsule_spans(ell, table.a, table.b, tau)
    bounds = list(table.offsets) + [table.a.shape[0]]
    out: List[List[ParamInterval]] = []
    for start, stop in zip(bounds, bounds[1:]):
        spans = [
            (float(lo[i]), float(hi[i])) for i in range(start, stop) if lo[i] <= hi[i]
        ]
        out.append([ParamInterval(ell, l, h) for l, h in _merge(spans)])
    return out


def feasible_intersection(
    per_trajectory: Sequence[Sequence[ParamInterval]], segment: Optional[Segment] = None
) -> FeasibleSet:
    """
    Parameters covered by at least one interval of every trajectory.

    Sweeps the interval endpoints in order, opening before closing at equal
    parameters, and tracks how many trajectories currently have an open
    interval.

    Args:
        per_trajectory: One interval list per constraining trajectory
        segment: The searched segment; needed only when there are no constraints

    Returns:
        FeasibleSet on the searched segment
    """
    if segment is None:
        segment = next((ivs[0].segment for ivs in per_trajectory if ivs), None)
    m = len(per_trajectory)
    if m == 0:
        whole = (ParamInterval(segment, 0.0, 1.0),) if segment is not None else ()
        return FeasibleSet(segment, whole)
    if any(not ivs for ivs in per_trajectory):
        return FeasibleSet(segment)

    events = []
    for owner, ivs in enumerate(per_trajectory):
        for iv in ivs:
            events.append((iv.lo, 0, owner))
            events.append((iv.hi, 1, owner))
    events.sort()

    active = [0] * m
    covered = 0
    start = 0.0
    found: List[Tuple[float, float]] = []
    for lam, kind, owner in events:
        if kind == 0:
            active[owner] += 1
            if active[owner] == 1:
                covered += 1
                if covered == m:
                    start = lam
        else:
            if covered == m and active[owner] == 1:
                found.append((start, lam))
            active[owner] -= 1
            if active[owner] == 0:
                covered -= 1

    merged = _merge(found)
    return FeasibleSet(segment, tuple(ParamInterval(segment, lo, hi) for lo, hi in merged))

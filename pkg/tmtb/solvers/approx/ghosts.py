"""
Ghost trajectories: offset copies of a trajectory that net its tau-sausage.

Offsets are spaced ``tau * eps / 12`` apart across the sausage. Each offset
polyline follows the source with its segments shifted along their left
normals, joined where consecutive offset lines meet, and the first and last
segments are extended by ``tau`` past the source endpoints so the caps of the
sausage are covered too.
"""

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from tmtb.core.exceptions import ParameterError
from tmtb.core.logging import get_logger
from tmtb.core.models import Point, Segment, Trajectory
from tmtb.core.utils import radius_slack
from tmtb.core.utils.tolerance import TOL_PT
from tmtb.geometry.distance import dist_point_trajectory

logger = get_logger(__name__)

Vec = Tuple[float, float]

DEFAULT_MITER_LIMIT = 4.0
# Offsets per unit of 1/eps on each side of the source.
SPACING_DIVISOR = 12.0

# Join kinds between consecutive offset segments.
STRAIGHT = "straight"
INNER = "inner"
MITER = "miter"
ROUND = "round"
CHORD = "chord"


@dataclass(frozen=True)
class GhostSet:
    """Offset polylines covering the ``tau``-sausage of ``source``."""

    trajectories: Tuple[Trajectory, ...]
    source: Trajectory
    tau: float
    eps: float
    offsets: Tuple[float, ...]

    def __len__(self) -> int:
        return len(self.trajectories)

    @property
    def spacing(self) -> float:
        return self.tau * self.eps / SPACING_DIVISOR

    @property
    def segments(self) -> List[Segment]:
        return [s for g in self.trajectories for s in g.segments]


def ghost_offsets(tau: float, eps: float) -> List[float]:
    """Signed offsets ``i * tau * eps / 12`` for admissible ``i``, plus ``+-tau`` when needed."""
    spacing = tau * eps / SPACING_DIVISOR
    steps = int(math.floor(SPACING_DIVISOR / eps + 1e-9))
    offsets = [i * spacing for i in range(-steps, steps + 1)]
    if tau - steps * spacing > radius_slack(tau):
        offsets = [-tau] + offsets + [tau]
    return offsets


def sausage_contains(t: Trajectory, tau: float, x: Point) -> bool:
    """True when ``x`` is within distance ``tau`` of ``t``."""
    if tau < 0:
        raise ParameterError(f"tau must be non-negative, got {tau}")
    return dist_point_trajectory(x, t) <= tau + radius_slack(tau)


def _sub(p: Vec, q: Vec) -> Vec:
    return (p[0] - q[0], p[1] - q[1])


def _dot(p: Vec, q: Vec) -> float:
    return p[0] * q[0] + p[1] * q[1]


def _cross(p: Vec, q: Vec) -> float:
    return p[0] * q[1] - p[1] * q[0]


class _OffsetPolyline:
    """Offset of one trajectory at signed distance ``d``.

    Segment ``j`` lives on the line ``origin[j] + t * u[j]``; ``t0[j]`` and
    ``t1[j]`` are its current trimmed ends.
    """

    def __init__(self, waypoints: List[Vec], d: float, tau: float, miter_limit: float, eps: float):
        self.d = d
        self.tau = tau
        self.eps = eps
        self.miter_limit = miter_limit
        self.pivots = waypoints
        k = len(waypoints) - 1
        self.k = k
        self.u: List[Vec] = []
        self.n: List[Vec] = []
        self.length: List[float] = []
        for p, q in zip(waypoints, waypoints[1:]):
            v = _sub(q, p)
            length = math.hypot(*v)
            u = (v[0] / length, v[1] / length)
            self.u.append(u)
            self.n.append((-u[1], u[0]))
            self.length.append(length)
        self.origin = [(p[0] + d * n[0], p[1] + d * n[1]) for p, n in zip(waypoints, self.n)]
        self.t0 = [self.untrimmed_start(j) for j in range(k)]
        self.t1 = [self.untrimmed_end(j) for j in range(k)]
        self.kept = list(range(k))
        self.joins: Dict[Tuple[int, int], str] = {}
        self.arcs: Dict[Tuple[int, int], List[Vec]] = {}

    def untrimmed_start(self, j: int) -> float:
        return -self.tau if j == 0 else 0.0

    def untrimmed_end(self, j: int) -> float:
        return self.length[j] + (self.tau if j == self.k - 1 else 0.0)

    def at(self, j: int, t: float) -> Vec:
        o, u = self.origin[j], self.u[j]
        return (o[0] + t * u[0], o[1] + t * u[1])

    def meet(self, a: int, b: int) -> Optional[Tuple[float, float]]:
        """Parameters on lines ``a`` and ``b`` of their intersection point."""
        denom = _cross(self.u[a], self.u[b])
        if abs(denom) <= 1e-12:
            return None
        w = _sub(self.origin[b], self.origin[a])
        s = _cross(w, self.u[b]) / denom
        r = _cross(w, self.u[a]) / denom
        return s, r

    def build_joins(self) -> None:
        d = self.d
        for j in range(1, self.k):
            a, b = j - 1, j
            turn = _cross(self.u[a], self.u[b])
            cos_turn = _dot(self.u[a], self.u[b])
            if d == 0.0 or (abs(turn) <= 1e-12 and cos_turn > 0):
                self.joins[(a, b)] = STRAIGHT
                continue
            if d * turn > 0 and cos_turn > -1.0 + 1e-12:
                self.joins[(a, b)] = INNER
                s, r = self.meet(a, b)
                self.t1[a], self.t0[b] = s, r
                continue
            half_cos = math.sqrt(max(0.0, (1.0 + cos_turn) / 2.0))
            if abs(turn) > 1e-12 and half_cos >= 1.0 / self.miter_limit:
                self.joins[(a, b)] = MITER
                s, r = self.meet(a, b)
                self.t1[a], self.t0[b] = s, r
                continue
            self.joins[(a, b)] = ROUND
            self.arcs[(a, b)] = self._arc(a, b)

    def _arc(self, a: int, b: int) -> List[Vec]:
        """Chord points on the circle of radius ``|d|`` around the shared waypoint."""
        d = self.d
        pivot = self.pivots[b]
        v0 = (d * self.n[a][0], d * self.n[a][1])
        v1 = (d * self.n[b][0], d * self.n[b][1])
        sweep = math.atan2(_cross(v0, v1), _dot(v0, v1))
        if abs(abs(sweep) - math.pi) <= 1e-9:
            sweep = math.pi if _cross(v0, self.u[a]) > 0 else -math.pi
        max_step = 2.0 * math.acos(1.0 - self.eps / SPACING_DIVISOR)
        steps = max(1, int(math.ceil(abs(sweep) / max_step)))
        base = math.atan2(v0[1], v0[0])
        radius = abs(d)
        return [
            (
                pivot[0] + radius * math.cos(base + sweep * i / steps),
                pivot[1] + radius * math.sin(base + sweep * i / steps),
            )
            for i in range(1, steps)
        ]

    def _untrim(self, a: int, b: int) -> None:
        self.t1[a] = self.untrimmed_end(a)
        self.t0[b] = self.untrimmed_start(b)
        self.joins[(a, b)] = CHORD

    def resolve_inversions(self) -> None:
        """Drop or untrim segments whose inner trims crossed over."""
        while True:
            inverted = next(
                (j for j in self.kept if self.t1[j] < self.t0[j] - TOL_PT), None
            )
            if inverted is None:
                return
            pos = self.kept.index(inverted)
            prev = self.kept[pos - 1] if pos > 0 else None
            nxt = self.kept[pos + 1] if pos + 1 < len(self.kept) else None
            before = self.joins.get((prev, inverted)) if prev is not None else None
            after = self.joins.get((inverted, nxt)) if nxt is not None else None

            if before == INNER and after == INNER:
                self.kept.pop(pos)
                hit = self.meet(prev, nxt)
                if (
                    hit is not None
                    and self.t0[prev] <= hit[0] <= self.untrimmed_end(prev) + TOL_PT
                    and self.untrimmed_start(nxt) - TOL_PT <= hit[1] <= self.t1[nxt]
                ):
                    self.t1[prev], self.t0[nxt] = hit
                    self.joins[(prev, nxt)] = INNER
                else:
                    self.t1[prev] = self.untrimmed_end(prev)
                    self.t0[nxt] = self.untrimmed_start(nxt)
                    self.joins[(prev, nxt)] = CHORD
                continue

            if before == INNER:
                self._untrim(prev, inverted)
            if after == INNER:
                self._untrim(inverted, nxt)
            if before != INNER and after != INNER:
                # Only reachable through roundoff on a cap; restore both ends.
                self.t0[inverted] = self.untrimmed_start(inverted)
                self.t1[inverted] = self.untrimmed_end(inverted)

    def points(self) -> List[Vec]:
        out: List[Vec] = []
        for idx, j in enumerate(self.kept):
            if idx > 0:
                out.extend(self.arcs.get((self.kept[idx - 1], j), []))
            out.append(self.at(j, self.t0[j]))
            out.append(self.at(j, self.t1[j]))
        return out


def _dedupe(points: List[Vec]) -> List[Vec]:
    out: List[Vec] = []
    for p in points:
        if out and math.hypot(p[0] - out[-1][0], p[1] - out[-1][1]) <= TOL_PT:
            continue
        out.append(p)
    return out


def offset_polyline(
    t: Trajectory, d: float, tau: float, eps: float, miter_limit: float = DEFAULT_MITER_LIMIT
) -> Trajectory:
    """
    One ghost: ``t`` offset by signed distance ``d`` with ends extended by ``tau``.

    A stationary trajectory yields a horizontal segment of half-length
    ``tau`` at height ``d`` above the waypoint.
    """
    if t.k == 0:
        p = t.start
        return Trajectory.from_coords([(p.x - tau, p.y + d), (p.x + tau, p.y + d)])
    polyline = _OffsetPolyline([w.as_tuple() for w in t.waypoints], d, tau, miter_limit, eps)
    polyline.build_joins()
    polyline.resolve_inversions()
    return Trajectory.from_coords(_dedupe(polyline.points()))


def ghost_trajectories(
    t: Trajectory, tau: float, eps: float, miter_limit: float = DEFAULT_MITER_LIMIT
) -> GhostSet:
    """
    Build the ghost set of ``t`` for sausage radius ``tau``.

    Args:
        t: Source trajectory
        tau: Sausage radius, positive
        eps: Approximation parameter in ``(0, 1/2]``
        miter_limit: Joins whose miter would reach farther than
            ``miter_limit * |d|`` from the waypoint are replaced by chords on
            the circle of radius ``|d|``

    Returns:
        GhostSet ordered by offset
    """
    if tau <= 0 or not math.isfinite(tau):
        raise ParameterError(f"tau must be positive, got {tau}")
    if not 0 < eps <= 0.5:
        raise ParameterError(f"eps must lie in (0, 1/2], got {eps}")
    offsets = ghost_offsets(tau, eps)
    ghosts = tuple(offset_polyline(t, d, tau, eps, miter_limit) for d in offsets)
    logger.debug(
        "Built ghost trajectories",
        extra={"context": {"count": len(ghosts), "tau": tau, "eps": eps, "k": t.k}},
    )
    return GhostSet(ghosts, t, tau, eps, tuple(offsets))

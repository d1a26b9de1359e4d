"""
Geometric value types: points, segments, trajectories and balls.

All types are immutable. Trajectories and trajectory sets validate their
invariants on construction and raise ``GeometryError`` when they do not hold.
"""

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, Iterable, Iterator, List, Sequence, Tuple

import numpy as np

from tmtb.core.exceptions import GeometryError
from tmtb.core.utils.tolerance import TOL_PT

Coords = Sequence[Sequence[float]]


@dataclass(frozen=True, order=True)
class Point:
    """A point in the plane. Ordering is lexicographic on ``(x, y)``."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise GeometryError(f"Point coordinates must be finite, got ({self.x}, {self.y})")

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def scale(self, factor: float) -> "Point":
        return Point(self.x * factor, self.y * factor)

    def dot(self, other: "Point") -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Point") -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def distance_to(self, other: "Point") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def is_close(self, other: "Point", tol: float = TOL_PT) -> bool:
        return self.distance_to(other) <= tol

    def as_tuple(self) -> Tuple[float, float]:
        return (self.x, self.y)

    @classmethod
    def of(cls, value: Any) -> "Point":
        """Coerce a ``Point`` or an ``(x, y)`` pair."""
        if isinstance(value, Point):
            return value
        x, y = value
        return cls(float(x), float(y))


@dataclass(frozen=True)
class Segment:
    """A closed line segment with distinct endpoints."""

    a: Point
    b: Point

    def __post_init__(self):
        if self.a.distance_to(self.b) <= TOL_PT:
            raise GeometryError(f"Segment endpoints coincide: {self.a.as_tuple()}")

    @property
    def vector(self) -> Point:
        return self.b - self.a

    @property
    def length(self) -> float:
        return self.a.distance_to(self.b)

    @property
    def direction(self) -> Point:
        """Unit vector from ``a`` to ``b``."""
        return self.vector.scale(1.0 / self.length)

    @property
    def normal(self) -> Point:
        """Left unit normal."""
        d = self.direction
        return Point(-d.y, d.x)

    @property
    def midpoint(self) -> Point:
        return Point((self.a.x + self.b.x) / 2.0, (self.a.y + self.b.y) / 2.0)

    def point_at(self, lam: float) -> Point:
        """Point ``a + lam * (b - a)``."""
        return Point(self.a.x + lam * (self.b.x - self.a.x), self.a.y + lam * (self.b.y - self.a.y))

    def reversed(self) -> "Segment":
        return Segment(self.b, self.a)


@dataclass(frozen=True)
class Trajectory:
    """A polygonal chain through ``k + 1`` waypoints.

    A single waypoint is a stationary object (``k == 0``). Consecutive
    waypoints must be distinct.
    """

    waypoints: Tuple[Point, ...]

    def __post_init__(self):
        if len(self.waypoints) < 1:
            raise GeometryError("A trajectory needs at least one waypoint")
        for i, (p, q) in enumerate(zip(self.waypoints, self.waypoints[1:])):
            if p.distance_to(q) <= TOL_PT:
                raise GeometryError(
                    f"Consecutive waypoints {i} and {i + 1} coincide at {p.as_tuple()}"
                )

    @classmethod
    def from_coords(cls, coords: Iterable[Any]) -> "Trajectory":
        """Build a trajectory from ``(x, y)`` pairs or points."""
        return cls(tuple(Point.of(c) for c in coords))

    @property
    def k(self) -> int:
        """Number of segments."""
        return len(self.waypoints) - 1

    @cached_property
    def segments(self) -> Tuple[Segment, ...]:
        return tuple(Segment(p, q) for p, q in zip(self.waypoints, self.waypoints[1:]))

    @property
    def start(self) -> Point:
        return self.waypoints[0]

    def translated(self, dx: float, dy: float) -> "Trajectory":
        return Trajectory(tuple(Point(p.x + dx, p.y + dy) for p in self.waypoints))

    def to_dict(self) -> Dict[str, Any]:
        """Convert trajectory to dictionary."""
        return {"waypoints": [[p.x, p.y] for p in self.waypoints]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Trajectory":
        """Create trajectory from dictionary."""
        return cls.from_coords(data["waypoints"])


@dataclass(frozen=True)
class TrajectorySet:
    """An ordered, non-empty collection of trajectories."""

    trajectories: Tuple[Trajectory, ...]

    def __post_init__(self):
        if len(self.trajectories) < 1:
            raise GeometryError("A trajectory set needs at least one trajectory")

    @classmethod
    def from_coords(cls, trajectories: Iterable[Iterable[Any]]) -> "TrajectorySet":
        """Build a set from nested ``(x, y)`` sequences, one per trajectory."""
        return cls(tuple(Trajectory.from_coords(t) for t in trajectories))

    @classmethod
    def of(cls, trajectories: Iterable[Trajectory]) -> "TrajectorySet":
        return cls(tuple(trajectories))

    def __len__(self) -> int:
        return len(self.trajectories)

    def __iter__(self) -> Iterator[Trajectory]:
        return iter(self.trajectories)

    def __getitem__(self, index: int) -> Trajectory:
        return self.trajectories[index]

    @property
    def n(self) -> int:
        return len(self.trajectories)

    @property
    def k(self) -> int:
        """Largest segment count over all trajectories."""
        return max(t.k for t in self.trajectories)

    @property
    def segments(self) -> List[Segment]:
        return [s for t in self.trajectories for s in t.segments]

    @property
    def waypoints(self) -> List[Point]:
        return [p for t in self.trajectories for p in t.waypoints]

    def without(self, index: int) -> "TrajectorySet":
        """The set with trajectory ``index`` removed."""
        if not 0 <= index < self.n:
            raise IndexError(f"Trajectory index {index} out of range for n={self.n}")
        return TrajectorySet(self.trajectories[:index] + self.trajectories[index + 1 :])

    def subset(self, indices: Iterable[int]) -> "TrajectorySet":
        return TrajectorySet(tuple(self.trajectories[i] for i in indices))

    @cached_property
    def segment_table(self) -> "SegmentTable":
        """Flat numpy view of all segments, grouped by owning trajectory."""
        starts: List[Tuple[float, float]] = []
        ends: List[Tuple[float, float]] = []
        offsets: List[int] = []
        for t in self.trajectories:
            offsets.append(len(starts))
            if t.k == 0:
                p = t.waypoints[0].as_tuple()
                starts.append(p)
                ends.append(p)
                continue
            for s in t.segments:
                starts.append(s.a.as_tuple())
                ends.append(s.b.as_tuple())
        return SegmentTable(
            a=np.asarray(starts, dtype=float),
            b=np.asarray(ends, dtype=float),
            offsets=np.asarray(offsets, dtype=np.intp),
        )

    def to_dict(self) -> Dict[str, Any]:
        """Convert trajectory set to dictionary."""
        return {"trajectories": [t.to_dict()["waypoints"] for t in self.trajectories]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "TrajectorySet":
        """Create trajectory set from dictionary."""
        return cls.from_coords(data["trajectories"])


@dataclass(frozen=True, eq=False)
class SegmentTable:
    """Segment endpoints as ``(S, 2)`` arrays.

    A stationary trajectory contributes one row with ``a == b``. ``offsets``
    holds the first row of every trajectory, ready for ``np.minimum.reduceat``.
    """

    a: np.ndarray = field(repr=False)
    b: np.ndarray = field(repr=False)
    offsets: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class Ball:
    """A closed disk."""

    center: Point
    radius: float

    def __post_init__(self):
        if not math.isfinite(self.radius) or self.radius < 0:
            raise GeometryError(f"Ball radius must be finite and non-negative, got {self.radius}")

    def contains(self, p: Point, tol: float = 0.0) -> bool:
        return self.center.distance_to(p) <= self.radius + tol

    def touches(self, t: "Trajectory", tol: float = 0.0) -> bool:
        from tmtb.geometry.distance import dist_point_trajectory

        return dist_point_trajectory(self.center, t) <= self.radius + tol

    def residuals(self, ts: TrajectorySet) -> List[float]:
        """Distance from the center to each trajectory minus the radius."""
        from tmtb.geometry.distance import dist_point_trajectory

        return [dist_point_trajectory(self.center, t) - self.radius for t in ts]

    def to_dict(self) -> Dict[str, Any]:
        """Convert ball to dictionary."""
        return {"center": [self.center.x, self.center.y], "radius": self.radius}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Ball":
        """Create ball from dictionary."""
        return cls(Point.of(data["center"]), float(data["radius"]))

"""
Segment features: endpoints and open interiors.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

import numpy as np

from tmtb.core.models import Point, Segment, TrajectorySet
from tmtb.solvers.exact.equidistance import canonical_lines, lines_through

# Decimal places used to identify supporting lines that coincide.
_LINE_KEY_DIGITS = 9


class FeatureKind(Enum):
    ENDPOINT = "endpoint"
    INTERIOR = "interior"


@dataclass(frozen=True)
class Feature:
    """An endpoint or the interior of one segment, tagged with its trajectory."""

    kind: FeatureKind
    owner: int
    point: Optional[Point] = None
    segment: Optional[Segment] = None

    def __post_init__(self):
        if self.kind is FeatureKind.ENDPOINT and self.point is None:
            raise ValueError("Endpoint feature needs a point")
        if self.kind is FeatureKind.INTERIOR and self.segment is None:
            raise ValueError("Interior feature needs a segment")

    @classmethod
    def endpoint(cls, point: Point, owner: int = 0) -> "Feature":
        return cls(FeatureKind.ENDPOINT, owner, point=point)

    @classmethod
    def interior(cls, segment: Segment, owner: int = 0) -> "Feature":
        return cls(FeatureKind.INTERIOR, owner, segment=segment)

    def describe(self) -> str:
        if self.kind is FeatureKind.ENDPOINT:
            return f"endpoint {self.point.as_tuple()} of trajectory {self.owner}"
        return (
            f"interior of {self.segment.a.as_tuple()}->{self.segment.b.as_tuple()} "
            f"of trajectory {self.owner}"
        )


def collect_features(ts: TrajectorySet) -> List[Feature]:
    """
    All features of a trajectory set.

    Each segment contributes its two endpoints and its interior; a stationary
    trajectory contributes its single waypoint.
    """
    features: List[Feature] = []
    for owner, trajectory in enumerate(ts):
        if trajectory.k == 0:
            features.append(Feature.endpoint(trajectory.start, owner))
            continue
        for s in trajectory.segments:
            features.append(Feature.endpoint(s.a, owner))
            features.append(Feature.endpoint(s.b, owner))
            features.append(Feature.interior(s, owner))
    return features


@dataclass
class FeatureCatalog:
    """Features with duplicates removed, as numpy arrays for the kernels.

    Shared waypoints collapse to one endpoint, reversed or repeated segments
    to one interior, and interiors on a common line to one line for the
    equidistance triples.
    """

    endpoints: List[Feature] = field(default_factory=list)
    interiors: List[Feature] = field(default_factory=list)
    line_owners: List[Feature] = field(default_factory=list)
    points: np.ndarray = field(default_factory=lambda: np.empty((0, 2)))
    seg_a: np.ndarray = field(default_factory=lambda: np.empty((0, 2)))
    seg_b: np.ndarray = field(default_factory=lambda: np.empty((0, 2)))
    lines: np.ndarray = field(default_factory=lambda: np.empty((0, 3)))

    @classmethod
    def build(cls, features: List[Feature]) -> "FeatureCatalog":
        catalog = cls()
        seen_points: Dict[Tuple[float, float], Feature] = {}
        seen_segments: Dict[Tuple[Tuple[float, float], Tuple[float, float]], Feature] = {}
        for f in features:
            if f.kind is FeatureKind.ENDPOINT:
                seen_points.setdefault(f.point.as_tuple(), f)
            else:
                a, b = f.segment.a.as_tuple(), f.segment.b.as_tuple()
                seen_segments.setdefault((min(a, b), max(a, b)), f)

        catalog.endpoints = list(seen_points.values())
        catalog.interiors = list(seen_segments.values())
        if catalog.endpoints:
            catalog.points = np.asarray(list(seen_points.keys()), dtype=float)
        if catalog.interiors:
            catalog.seg_a = np.asarray([f.segment.a.as_tuple() for f in catalog.interiors])
            catalog.seg_b = np.asarray([f.segment.b.as_tuple() for f in catalog.interiors])
            lines = canonical_lines(lines_through(catalog.seg_a, catalog.seg_b))
            keys = np.round(lines, _LINE_KEY_DIGITS)
            _, first = np.unique(keys, axis=0, return_index=True)
            first = np.sort(first)
            catalog.lines = lines[first]
            catalog.line_owners = [catalog.interiors[i] for i in first]
        return catalog

    @property
    def size(self) -> int:
        return len(self.endpoints) + len(self.interiors)

"""
Candidate centers for the exact solver.

The optimal center is either the minimum of a bisector edge between two
features or a point equidistant from three features. Every candidate is a
valid ball center once paired with its touching radius, so over-generating is
harmless; under-generating is not.
"""

from dataclasses import dataclass, field
from enum import Enum
from itertools import chain, combinations
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from tmtb.core.models import Point, Segment, TrajectorySet
from tmtb.core.utils.tolerance import TOL_PT
from tmtb.geometry.distance import dist_point_segment
from tmtb.geometry.intersection import segment_segment_intersection
from tmtb.solvers.exact import equidistance as eq
from tmtb.solvers.exact.features import Feature, FeatureCatalog, FeatureKind, collect_features

Window = Tuple[float, float, float, float]

# Sine of the angle below which two interiors are treated as parallel.
PARALLEL_TOL = 1e-9


class CandidateKind(Enum):
    WAYPOINT = 0
    PAIR_MIN = 1
    CROSSING = 2
    TRIPLE_EQUIDISTANT = 3


@dataclass(frozen=True)
class Candidate:
    """A candidate center with the features that generated it."""

    center: Point
    kind: CandidateKind
    generators: Tuple[Feature, ...] = ()


def _interior_pair(s1: Segment, s2: Segment) -> List[Tuple[Point, CandidateKind]]:
    u1, u2 = s1.direction, s2.direction
    if abs(u1.cross(u2)) <= PARALLEL_TOL:
        n1 = s1.normal
        ta = (s2.a - s1.a).dot(u1)
        tb = (s2.b - s1.a).dot(u1)
        lo = max(0.0, min(ta, tb))
        hi = min(s1.length, max(ta, tb))
        if lo > hi + TOL_PT:
            return []
        mid = (lo + hi) / 2.0
        half_gap = (s2.a - s1.a).dot(n1) / 2.0
        return [(s1.a + u1.scale(mid) + n1.scale(half_gap), CandidateKind.PAIR_MIN)]
    hit = segment_segment_intersection(s1, s2)
    if isinstance(hit, Point):
        return [(hit, CandidateKind.CROSSING)]
    return []


def _line_of(feature: Feature) -> np.ndarray:
    return eq.lines_through(feature.segment.a.as_tuple(), feature.segment.b.as_tuple())


def _keep(centers: np.ndarray, window: Optional[Window]) -> np.ndarray:
    centers = np.asarray(centers, dtype=float).reshape(-1, 2)
    mask = np.isfinite(centers).all(axis=1)
    if window is not None:
        xmin, ymin, xmax, ymax = window
        with np.errstate(invalid="ignore"):
            mask &= (centers[:, 0] >= xmin) & (centers[:, 0] <= xmax)
            mask &= (centers[:, 1] >= ymin) & (centers[:, 1] <= ymax)
    return centers[mask]


def _points(centers: np.ndarray) -> List[Point]:
    out: List[Point] = []
    for x, y in centers:
        p = Point(float(x), float(y))
        if not any(p.is_close(q) for q in out):
            out.append(p)
    return out


def pair_candidates(f1: Feature, f2: Feature) -> List[Point]:
    """
    Minima of the bisector edge between two features.

    Args:
        f1: First feature
        f2: Second feature

    Returns:
        Zero or one candidate points
    """
    if f1.kind is FeatureKind.INTERIOR and f2.kind is FeatureKind.ENDPOINT:
        f1, f2 = f2, f1
    if f1.kind is FeatureKind.ENDPOINT and f2.kind is FeatureKind.ENDPOINT:
        return _points(eq.endpoint_midpoints(f1.point.as_tuple(), f2.point.as_tuple()))
    if f1.kind is FeatureKind.ENDPOINT:
        s = f2.segment
        mids = eq.projection_midpoints(
            f1.point.as_tuple(), s.a.as_tuple(), s.b.as_tuple(), TOL_PT / s.length
        )
        return _points(_keep(mids, None))
    return [p for p, _ in _interior_pair(f1.segment, f2.segment)]


def triple_candidates(
    f1: Feature, f2: Feature, f3: Feature, window: Optional[Window] = None
) -> List[Point]:
    """
    Points equidistant from three features.

    Endpoints act as points and interiors as their supporting lines.

    Args:
        f1, f2, f3: The features, in any order
        window: Optional ``(xmin, ymin, xmax, ymax)``; roots outside are dropped

    Returns:
        Up to four distinct candidate points
    """
    ends = [f.point.as_tuple() for f in (f1, f2, f3) if f.kind is FeatureKind.ENDPOINT]
    lines = [_line_of(f) for f in (f1, f2, f3) if f.kind is FeatureKind.INTERIOR]
    if len(ends) == 3:
        centers = eq.eee_centers(*ends)
    elif len(ends) == 2:
        centers = eq.eel_centers(ends[0], ends[1], lines[0])
    elif len(ends) == 1:
        centers = eq.ell_centers(ends[0], lines[0], lines[1])
    else:
        centers = eq.lll_centers(*lines)
    return _points(_keep(centers, window))


def _index_tuples(size: int, r: int) -> np.ndarray:
    count = comb(size, r)
    flat = np.fromiter(chain.from_iterable(combinations(range(size), r)), np.intp, count * r)
    return flat.reshape(count, r)


@dataclass
class CandidateCloud:
    """Deduplicated candidate centers with the kind that produced each."""

    centers: np.ndarray = field(default_factory=lambda: np.empty((0, 2)))
    kinds: np.ndarray = field(default_factory=lambda: np.empty(0, dtype=np.int8))
    generated: int = 0

    def __len__(self) -> int:
        return int(self.centers.shape[0])

    def counts(self) -> Dict[CandidateKind, int]:
        return {kind: int((self.kinds == kind.value).sum()) for kind in CandidateKind}


class _CloudBuilder:
    def __init__(self, window: Optional[Window]):
        self.window = window
        self.blocks: List[np.ndarray] = []
        self.kinds: List[np.ndarray] = []
        self.generated = 0

    def add(self, centers: np.ndarray, kind: CandidateKind) -> None:
        centers = np.asarray(centers, dtype=float).reshape(-1, 2)
        self.generated += centers.shape[0]
        kept = _keep(centers, self.window)
        if kept.shape[0]:
            self.blocks.append(kept)
            self.kinds.append(np.full(kept.shape[0], kind.value, dtype=np.int8))

    def build(self) -> CandidateCloud:
        if not self.blocks:
            return CandidateCloud(generated=self.generated)
        centers = np.concatenate(self.blocks)
        kinds = np.concatenate(self.kinds)
        keys = np.round(centers / TOL_PT)
        _, first = np.unique(keys, axis=0, return_index=True)
        first = np.sort(first)
        return CandidateCloud(centers[first], kinds[first], self.generated)


def enumerate_candidates(
    ts: TrajectorySet,
    window: Optional[Window] = None,
    catalog: Optional[FeatureCatalog] = None,
) -> CandidateCloud:
    """
    All candidate centers of a trajectory set.

    Args:
        ts: Trajectory set
        window: Optional bounds; candidates outside are discarded
        catalog: Precomputed feature catalog

    Returns:
        Deduplicated candidate cloud
    """
    if catalog is None:
        catalog = FeatureCatalog.build(collect_features(ts))
    builder = _CloudBuilder(window)
    pts, lines = catalog.points, catalog.lines
    n_pts, n_lines, n_int = pts.shape[0], lines.shape[0], len(catalog.interiors)

    builder.add(pts, CandidateKind.WAYPOINT)

    if n_pts >= 2:
        i, j = np.triu_indices(n_pts, 1)
        builder.add(eq.endpoint_midpoints(pts[i], pts[j]), CandidateKind.PAIR_MIN)
    if n_pts and n_int:
        pi = np.repeat(np.arange(n_pts), n_int)
        si = np.tile(np.arange(n_int), n_pts)
        lengths = np.hypot(*(catalog.seg_b - catalog.seg_a).T)
        slack = TOL_PT / lengths.min()
        mids = eq.projection_midpoints(pts[pi], catalog.seg_a[si], catalog.seg_b[si], slack)
        builder.add(mids, CandidateKind.PAIR_MIN)
    for f1, f2 in combinations(catalog.interiors, 2):
        for p, kind in _interior_pair(f1.segment, f2.segment):
            builder.add(np.asarray([p.as_tuple()]), kind)

    if n_pts >= 3:
        t = _index_tuples(n_pts, 3)
        centers = eq.eee_centers(pts[t[:, 0]], pts[t[:, 1]], pts[t[:, 2]])
        builder.add(centers, CandidateKind.TRIPLE_EQUIDISTANT)
    if n_pts >= 2 and n_lines:
        i, j = np.triu_indices(n_pts, 1)
        li = np.tile(np.arange(n_lines), i.shape[0])
        i, j = np.repeat(i, n_lines), np.repeat(j, n_lines)
        builder.add(eq.eel_centers(pts[i], pts[j], lines[li]), CandidateKind.TRIPLE_EQUIDISTANT)
    if n_pts and n_lines >= 2:
        a, b = np.triu_indices(n_lines, 1)
        pi = np.repeat(np.arange(n_pts), a.shape[0])
        a, b = np.tile(a, n_pts), np.tile(b, n_pts)
        builder.add(eq.ell_centers(pts[pi], lines[a], lines[b]), CandidateKind.TRIPLE_EQUIDISTANT)
    if n_lines >= 3:
        t = _index_tuples(n_lines, 3)
        centers = eq.lll_centers(lines[t[:, 0]], lines[t[:, 1]], lines[t[:, 2]])
        builder.add(centers, CandidateKind.TRIPLE_EQUIDISTANT)

    return builder.build()


def generators_of(
    center: Point, radius: float, features: Sequence[Feature], slack: float
) -> Tuple[Feature, ...]:
    """Features at distance ``radius`` (within ``slack``) from ``center``."""
    found = []
    for f in features:
        if f.kind is FeatureKind.ENDPOINT:
            d = center.distance_to(f.point)
        else:
            d = dist_point_segment(center, f.segment)
        if abs(d - radius) <= slack:
            found.append(f)
    return tuple(found)

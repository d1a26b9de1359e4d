"""
SVG rendering of trajectories, balls, ghosts and sampled farthest regions.
"""

import colorsys
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
import svgwrite

from tmtb.core.models import Ball, Segment, TrajectorySet
from tmtb.core.utils.tolerance import TOL_PT
from tmtb.geometry.distance import bounding_box, trajectory_distances
from tmtb.geometry.intersection import Overlap, segment_segment_intersection
from tmtb.solvers.approx.ghosts import GhostSet

PALETTE = (
    "#1f77b4",
    "#ff7f0e",
    "#2ca02c",
    "#d62728",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#17becf",
    "#bcbd22",
    "#7f7f7f",
)


@dataclass
class RenderOptions:
    """Drawing switches."""

    raise_overlaps: bool = False
    raise_step: float = 0.12
    farthest_cells: int = 0
    sausage_tau: Optional[float] = None
    size: Tuple[str, str] = ("900px", "600px")
    margin: float = 0.08


def trajectory_color(index: int) -> str:
    if index < len(PALETTE):
        return PALETTE[index]
    hue = (index * 0.618033988749895) % 1.0
    r, g, b = colorsys.hsv_to_rgb(hue, 0.65, 0.85)
    return f"#{int(r * 255):02x}{int(g * 255):02x}{int(b * 255):02x}"


def _overlaps(s1: Segment, s2: Segment) -> bool:
    hit = segment_segment_intersection(s1, s2)
    return isinstance(hit, Overlap) and hit.length > TOL_PT


def overlap_offsets(ts: TrajectorySet, step: float) -> List[List[float]]:
    """
    Vertical lift per waypoint so collinear overlapping runs are drawn apart.

    A segment is lifted by ``step`` times the number of earlier trajectories
    it overlaps; a waypoint takes the larger lift of its two segments.
    """
    lifts: List[List[float]] = []
    for i, t in enumerate(ts):
        seg_lift = []
        for s in t.segments:
            rank = 0
            for other in ts.trajectories[:i]:
                if any(_overlaps(s, o) for o in other.segments):
                    rank += 1
            seg_lift.append(rank * step)
        if not seg_lift:
            lifts.append([0.0])
            continue
        points = [seg_lift[0]]
        points += [max(a, b) for a, b in zip(seg_lift, seg_lift[1:])]
        points.append(seg_lift[-1])
        lifts.append(points)
    return lifts


def _flip(points: Sequence[Tuple[float, float]]) -> List[Tuple[float, float]]:
    return [(float(x), float(-y)) for x, y in points]


def _extent(
    ts: TrajectorySet, ball: Optional[Ball], ghosts: Optional[GhostSet], pad: float
) -> Tuple[float, float, float, float]:
    xmin, ymin, xmax, ymax = bounding_box(ts)
    if ghosts is not None and len(ghosts):
        gx, gy, gX, gY = bounding_box(TrajectorySet(ghosts.trajectories))
        xmin, ymin, xmax, ymax = min(xmin, gx), min(ymin, gy), max(xmax, gX), max(ymax, gY)
    if ball is not None:
        c, r = ball.center, ball.radius
        xmin, ymin = min(xmin, c.x - r), min(ymin, c.y - r)
        xmax, ymax = max(xmax, c.x + r), max(ymax, c.y + r)
    return xmin - pad, ymin - pad, xmax + pad, ymax + pad


def build_drawing(
    ts: TrajectorySet,
    ball: Optional[Ball] = None,
    ghosts: Optional[GhostSet] = None,
    options: Optional[RenderOptions] = None,
) -> svgwrite.Drawing:
    """
    Compose the drawing; y grows upwards as in the input coordinates.

    Args:
        ts: Trajectories, one color each
        ball: Optional ball, drawn in black; radius 0 becomes a dot
        ghosts: Optional ghost set, drawn as thin gray polylines
        options: Drawing switches

    Returns:
        svgwrite Drawing
    """
    options = options or RenderOptions()
    xmin, ymin, xmax, ymax = bounding_box(ts)
    span = max(xmax - xmin, ymax - ymin, 1.0)
    pad = options.margin * span + (options.sausage_tau or 0.0)
    if options.raise_overlaps:
        pad += options.raise_step * ts.n
    xmin, ymin, xmax, ymax = _extent(ts, ball, ghosts, pad)
    stroke = 0.004 * max(xmax - xmin, ymax - ymin)

    dwg = svgwrite.Drawing(profile="full", size=options.size)
    dwg.attribs["viewBox"] = f"{xmin} {-ymax} {xmax - xmin} {ymax - ymin}"

    if options.farthest_cells > 0:
        cells = options.farthest_cells
        w = (xmax - xmin) / cells
        h = (ymax - ymin) / cells
        xs = xmin + (np.arange(cells) + 0.5) * w
        ys = ymin + (np.arange(cells) + 0.5) * h
        centers = np.column_stack([np.tile(xs, cells), np.repeat(ys, cells)])
        owner = trajectory_distances(centers, ts).argmax(axis=1)
        group = dwg.g(id="farthest", stroke="none", opacity=0.22)
        for (cx, cy), idx in zip(centers, owner):
            group.add(
                dwg.rect(
                    insert=(float(cx - w / 2), float(-(cy + h / 2))),
                    size=(float(w), float(h)),
                    fill=trajectory_color(int(idx)),
                )
            )
        dwg.add(group)

    if options.sausage_tau:
        source = ts[0]
        group = dwg.g(id="sausage", fill="none", opacity=0.15)
        if source.k == 0:
            c = source.start
            disk = dwg.circle(center=(c.x, -c.y), r=options.sausage_tau, fill=trajectory_color(0))
            group.add(disk)
        else:
            group.add(
                dwg.polyline(
                    points=_flip([p.as_tuple() for p in source.waypoints]),
                    stroke=trajectory_color(0),
                    stroke_width=2.0 * options.sausage_tau,
                    stroke_linecap="round",
                    stroke_linejoin="round",
                )
            )
        dwg.add(group)

    if ghosts is not None and len(ghosts):
        group = dwg.g(id="ghosts", fill="none", stroke="#999", opacity=0.6)
        for g in ghosts.trajectories:
            group.add(
                dwg.polyline(
                    points=_flip([p.as_tuple() for p in g.waypoints]),
                    stroke_width=stroke * 0.35,
                )
            )
        dwg.add(group)

    lifts = overlap_offsets(ts, options.raise_step) if options.raise_overlaps else None
    group = dwg.g(id="trajectories", fill="none")
    for i, t in enumerate(ts):
        pts = [p.as_tuple() for p in t.waypoints]
        if lifts is not None:
            pts = [(x, y + lift) for (x, y), lift in zip(pts, lifts[i])]
        color = trajectory_color(i)
        if t.k == 0:
            x, y = pts[0]
            group.add(dwg.circle(center=(x, -y), r=stroke * 1.5, fill=color))
            continue
        group.add(
            dwg.polyline(
                points=_flip(pts),
                stroke=color,
                stroke_width=stroke,
                stroke_linecap="round",
                stroke_linejoin="round",
            )
        )
    dwg.add(group)

    if ball is not None:
        group = dwg.g(id="ball")
        c = ball.center
        if ball.radius > 0:
            group.add(
                dwg.circle(
                    center=(c.x, -c.y),
                    r=ball.radius,
                    fill="none",
                    stroke="black",
                    stroke_width=stroke,
                )
            )
        else:
            group.add(dwg.circle(center=(c.x, -c.y), r=stroke * 1.5, fill="black"))
        dwg.add(group)
    return dwg


def render_svg(
    ts: TrajectorySet,
    ball: Optional[Ball] = None,
    ghosts: Optional[GhostSet] = None,
    options: Optional[RenderOptions] = None,
) -> str:
    """SVG document text for the given scene."""
    return build_drawing(ts, ball, ghosts, options).tostring()


def write_svg(
    path: Union[str, Path],
    ts: TrajectorySet,
    ball: Optional[Ball] = None,
    ghosts: Optional[GhostSet] = None,
    options: Optional[RenderOptions] = None,
) -> Path:
    """Render and save to ``path``."""
    path = Path(path)
    dwg = build_drawing(ts, ball, ghosts, options)
    dwg.saveas(str(path))
    return path

"""
Trajectory text format.

One trajectory per line as whitespace-separated ``x,y`` waypoints. Lines
starting with ``#`` are comments; a ``# tmtb-trajectories v1`` comment
declares the format version. Blank lines are ignored.
"""

import math
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Tuple, Union

from tmtb.core.exceptions import GeometryError, TrajectoryFileError
from tmtb.core.logging import get_logger
from tmtb.core.models import TrajectorySet
from tmtb.core.utils.tolerance import TOL_PT

logger = get_logger(__name__)

FORMAT_VERSION = 1
SUPPORTED_VERSIONS = (1,)
_HEADER = re.compile(r"^#\s*tmtb-trajectories\s+v(\d+)\s*$")
_TOKEN = re.compile(r"\S+")

Waypoint = Tuple[float, float]


@dataclass
class TrajectoryFile:
    """Parsed contents of a trajectory file."""

    version: int = FORMAT_VERSION
    trajectories: List[List[Waypoint]] = field(default_factory=list)
    path: Optional[str] = None
    collapsed: int = 0

    def to_trajectory_set(self) -> TrajectorySet:
        if not self.trajectories:
            raise TrajectoryFileError("file contains no trajectories", path=self.path)
        try:
            return TrajectorySet.from_coords(self.trajectories)
        except GeometryError as exc:
            raise TrajectoryFileError(str(exc), path=self.path) from exc


def _parse_number(text: str, path: Optional[str], line: int, column: int, token: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise TrajectoryFileError("malformed number", path, line, column, token) from None
    if math.isnan(value):
        raise TrajectoryFileError("coordinate is not a number", path, line, column, token)
    if math.isinf(value):
        raise TrajectoryFileError("coordinate overflows to infinity", path, line, column, token)
    return value


def parse_trajectory_text(text: str, path: Optional[str] = None) -> TrajectoryFile:
    """
    Parse the trajectory text format.

    Args:
        text: File contents
        path: Source path, used in diagnostics

    Returns:
        TrajectoryFile with adjacent duplicate waypoints collapsed
    """
    result = TrajectoryFile(path=path)
    for line_no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            header = _HEADER.match(stripped)
            if header:
                result.version = int(header.group(1))
                if result.version not in SUPPORTED_VERSIONS:
                    raise TrajectoryFileError(
                        f"unsupported format version {result.version}", path, line_no
                    )
            continue

        waypoints: List[Waypoint] = []
        for match in _TOKEN.finditer(raw):
            token = match.group(0)
            column = match.start() + 1
            parts = token.split(",")
            if len(parts) != 2:
                raise TrajectoryFileError(
                    "expected a waypoint of the form x,y", path, line_no, column, token
                )
            x = _parse_number(parts[0], path, line_no, column, token)
            y = _parse_number(parts[1], path, line_no, column + len(parts[0]) + 1, token)
            if waypoints and math.hypot(x - waypoints[-1][0], y - waypoints[-1][1]) <= TOL_PT:
                result.collapsed += 1
                logger.warning(
                    "Collapsed duplicate waypoint",
                    extra={"context": {"path": path, "line": line_no, "column": column}},
                )
                continue
            waypoints.append((x, y))
        result.trajectories.append(waypoints)
    return result


def parse_trajectories(path: Union[str, Path]) -> TrajectorySet:
    """
    Read a trajectory file.

    Args:
        path: File path

    Returns:
        TrajectorySet
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise TrajectoryFileError(f"cannot read file: {exc.strerror}", path=str(path)) from exc
    return parse_trajectory_text(text, str(path)).to_trajectory_set()


def format_trajectories(ts: TrajectorySet, comment: Optional[str] = None) -> str:
    """Render ``ts`` in the text format using shortest round-trip decimals."""
    lines = [f"# tmtb-trajectories v{FORMAT_VERSION}"]
    if comment:
        lines.extend(f"# {part}" for part in comment.splitlines())
    for t in ts:
        lines.append(" ".join(f"{p.x!r},{p.y!r}" for p in t.waypoints))
    return "\n".join(lines) + "\n"


def write_trajectories(
    ts: TrajectorySet, path: Union[str, Path], comment: Optional[str] = None
) -> Path:
    """Write ``ts`` to ``path`` and return the path."""
    path = Path(path)
    path.write_text(format_trajectories(ts, comment))
    return path

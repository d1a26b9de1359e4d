"""
Result records and their line-delimited JSON store.
"""

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from tmtb.core.exceptions import SolverError
from tmtb.core.models import Ball, Point, TrajectorySet
from tmtb.core.utils import radius_slack
from tmtb.geometry.distance import dist_point_trajectory


@dataclass
class ResultRecord:
    """One solver run."""

    solver: str = ""
    center: List[float] = field(default_factory=lambda: [0.0, 0.0])
    radius: float = 0.0
    distances: List[float] = field(default_factory=list)
    wall_time: float = 0.0
    params: Dict[str, Any] = field(default_factory=dict)
    created_at: datetime = field(default_factory=lambda: datetime.now(timezone.utc))

    @classmethod
    def from_ball(
        cls,
        solver: str,
        ball: Ball,
        ts: TrajectorySet,
        wall_time: float,
        params: Optional[Dict[str, Any]] = None,
    ) -> "ResultRecord":
        """Measure every trajectory's distance from ``ball`` and build a record."""
        return cls(
            solver=solver,
            center=[ball.center.x, ball.center.y],
            radius=ball.radius,
            distances=[dist_point_trajectory(ball.center, t) for t in ts],
            wall_time=wall_time,
            params=dict(params or {}),
        )

    @property
    def ball(self) -> Ball:
        return Ball(Point.of(self.center), self.radius)

    @property
    def max_residual(self) -> float:
        """Largest distance beyond the radius; non-positive for a valid ball."""
        return max(self.distances) - self.radius if self.distances else 0.0

    def check(self) -> "ResultRecord":
        """Raise ``SolverError`` unless every trajectory is within the radius."""
        if self.max_residual > radius_slack(self.radius):
            worst = max(range(len(self.distances)), key=self.distances.__getitem__)
            raise SolverError(
                f"{self.solver} ball misses trajectory {worst} by {self.max_residual:.3e}"
            )
        return self

    def to_dict(self) -> Dict:
        """Convert record to dictionary, fields in fixed order."""
        return {
            "solver": self.solver,
            "center": list(self.center),
            "radius": self.radius,
            "distances": list(self.distances),
            "wall_time": self.wall_time,
            "params": dict(self.params),
            "created_at": self.created_at.isoformat(),
        }

    @classmethod
    def from_dict(cls, data: Dict) -> "ResultRecord":
        """Create record from dictionary."""
        record = cls()
        for key, value in data.items():
            if hasattr(record, key):
                if key == "created_at" and isinstance(value, str):
                    setattr(record, key, datetime.fromisoformat(value))
                else:
                    setattr(record, key, value)
        return record


class RecordStore:
    """Append-only JSON-lines file of result records."""

    def __init__(self, path: Union[str, Path]):
        """
        Initialize record store.

        Args:
            path: Records file; parent directories are created on demand
        """
        self.path = Path(path)

    def append(self, record: ResultRecord) -> None:
        """Append one record as a single JSON line."""
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, "a") as f:
            f.write(json.dumps(record.to_dict()) + "\n")

    def load(self) -> List[ResultRecord]:
        """Read every record in file order."""
        if not self.path.exists():
            return []
        records = []
        with open(self.path, "r") as f:
            for line in f:
                if line.strip():
                    records.append(ResultRecord.from_dict(json.loads(line)))
        return records

    def by_solver(self, solver: str) -> List[ResultRecord]:
        return [r for r in self.load() if r.solver == solver]

"""Command-line surface: file formats, records, figures and benchmarks."""

from tmtb.cli.io import TrajectoryFile, parse_trajectories, write_trajectories
from tmtb.cli.records import RecordStore, ResultRecord

__all__ = [
    "RecordStore",
    "ResultRecord",
    "TrajectoryFile",
    "parse_trajectories",
    "write_trajectories",
]

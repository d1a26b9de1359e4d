"""Geometric value types."""

from tmtb.core.models.geometry import Ball, Point, Segment, Trajectory, TrajectorySet

__all__ = ["Ball", "Point", "Segment", "Trajectory", "TrajectorySet"]

"""Shared helpers: tolerances and chunked parallel evaluation."""

from tmtb.core.utils.parallel import ChunkExecutor
from tmtb.core.utils.tolerance import ABS_TOL, REL_TOL, TOL_PT, exceeds, radius_slack

__all__ = ["ChunkExecutor", "ABS_TOL", "REL_TOL", "TOL_PT", "exceeds", "radius_slack"]

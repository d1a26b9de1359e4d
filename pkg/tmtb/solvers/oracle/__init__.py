"""Brute-force verification oracles."""

from tmtb.solvers.oracle.grid import GridSpec, grid_tmtb, restricted_radius

__all__ = ["GridSpec", "grid_tmtb", "restricted_radius"]

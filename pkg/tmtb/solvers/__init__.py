"""Solvers for the trajectory minimum touching ball."""

"""Randomized LP-type solver for single-segment trajectories and an axiom probe."""

from tmtb.solvers.lp.axioms import AxiomReport, AxiomViolation, axiom_probe
from tmtb.solvers.lp.segment_solver import (
    Basis,
    LPResult,
    lp_segment_mtb,
    lp_trajectory_mtb,
    mtb_small,
    violates,
)

__all__ = [
    "AxiomReport",
    "AxiomViolation",
    "axiom_probe",
    "Basis",
    "LPResult",
    "lp_segment_mtb",
    "lp_trajectory_mtb",
    "mtb_small",
    "violates",
]

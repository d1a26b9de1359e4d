"""Exact solver: enumerate bisector minima and equidistant points, keep the best."""

from tmtb.solvers.exact.candidates import (
    Candidate,
    CandidateKind,
    enumerate_candidates,
    pair_candidates,
    triple_candidates,
)
from tmtb.solvers.exact.features import Feature, FeatureKind, collect_features
from tmtb.solvers.exact.solver import (
    EssentialityEntry,
    ExactReport,
    essentiality_check,
    exact_tmtb,
    exact_tmtb_report,
)

__all__ = [
    "Candidate",
    "CandidateKind",
    "enumerate_candidates",
    "pair_candidates",
    "triple_candidates",
    "Feature",
    "FeatureKind",
    "collect_features",
    "EssentialityEntry",
    "ExactReport",
    "essentiality_check",
    "exact_tmtb",
    "exact_tmtb_report",
]

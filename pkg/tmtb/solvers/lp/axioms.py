"""
Empirical check of the LP-type axioms for the touching-ball objective.

``f(Y)`` is the exact optimal radius of a subset ``Y``. Monotonicity asks
``f(B) <= f(Y)`` for ``B`` inside ``Y``; locality asks that a constraint
raising ``f(Y)`` also raises ``f(B)`` whenever ``f(B) == f(Y)``. Both hold
for single-segment trajectories and can fail for longer ones.
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional

import numpy as np

from tmtb.core.logging import get_logger
from tmtb.core.models import TrajectorySet
from tmtb.solvers.exact import exact_tmtb

logger = get_logger(__name__)

DEFAULT_TOL = 1e-7


@dataclass(frozen=True)
class AxiomViolation:
    """One observed failure of monotonicity or locality."""

    axiom: str
    subset: FrozenSet[int]
    superset: FrozenSet[int]
    extra: Optional[int]
    f_subset: float
    f_superset: float
    f_subset_extra: Optional[float] = None
    f_superset_extra: Optional[float] = None

    def to_dict(self) -> Dict:
        return {
            "axiom": self.axiom,
            "subset": sorted(self.subset),
            "superset": sorted(self.superset),
            "extra": self.extra,
            "f_subset": self.f_subset,
            "f_superset": self.f_superset,
            "f_subset_extra": self.f_subset_extra,
            "f_superset_extra": self.f_superset_extra,
        }


@dataclass
class AxiomReport:
    trials: int
    seed: int
    violations: List[AxiomViolation] = field(default_factory=list)
    locality_tests: int = 0

    @property
    def is_clean(self) -> bool:
        return not self.violations

    def count(self, axiom: str) -> int:
        return sum(1 for v in self.violations if v.axiom == axiom)


class _Objective:
    """Memoised optimal radius of index subsets."""

    def __init__(self, ts: TrajectorySet):
        self.ts = ts
        self.cache: Dict[FrozenSet[int], float] = {frozenset(): 0.0}

    def __call__(self, subset: FrozenSet[int]) -> float:
        if subset not in self.cache:
            self.cache[subset] = exact_tmtb(self.ts.subset(sorted(subset))).radius
        return self.cache[subset]


def _minimal_subset(f: _Objective, y: FrozenSet[int], tol: float) -> FrozenSet[int]:
    target = f(y)
    b = set(y)
    for i in sorted(y):
        trial = frozenset(b - {i})
        if trial and abs(f(trial) - target) <= tol:
            b.discard(i)
    return frozenset(b)


def axiom_probe(
    ts: TrajectorySet, trials: int = 200, seed: int = 0, tol: float = DEFAULT_TOL
) -> AxiomReport:
    """
    Sample nested subsets and test monotonicity and locality.

    Half of the trials take ``B`` as a random subset of ``Y``; the other half
    shrink ``Y`` greedily to a minimal subset with the same radius, which is
    where locality can actually be exercised.

    Args:
        ts: Trajectory set (any segment count)
        trials: Number of sampled ``(B, Y, x)`` triples
        seed: Sampling seed
        tol: Absolute radius tolerance

    Returns:
        AxiomReport listing every violation found
    """
    rng = np.random.default_rng(seed)
    f = _Objective(ts)
    report = AxiomReport(trials=trials, seed=seed)
    n = ts.n

    for trial in range(trials):
        y_size = int(rng.integers(1, n + 1))
        y = frozenset(int(i) for i in rng.choice(n, size=y_size, replace=False))
        if trial % 2 == 0:
            b_size = int(rng.integers(1, y_size + 1))
            b = frozenset(int(i) for i in rng.choice(sorted(y), size=b_size, replace=False))
        else:
            b = _minimal_subset(f, y, tol)
        x = int(rng.integers(0, n))

        fb, fy = f(b), f(y)
        if fb > fy + tol:
            report.violations.append(AxiomViolation("monotonicity", b, y, None, fb, fy))
            continue

        if x in y or abs(fb - fy) > tol:
            continue
        report.locality_tests += 1
        fbx, fyx = f(b | {x}), f(y | {x})
        if fbx > fb + tol and fyx <= fy + tol:
            report.violations.append(AxiomViolation("locality", b, y, x, fb, fy, fbx, fyx))

    logger.info(
        "Axiom probe finished",
        extra={
            "context": {
                "n": n,
                "trials": trials,
                "locality_tests": report.locality_tests,
                "monotonicity_violations": report.count("monotonicity"),
                "locality_violations": report.count("locality"),
            }
        },
    )
    return report

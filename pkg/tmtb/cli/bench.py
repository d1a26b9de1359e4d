"""
Benchmark harness: median wall time per solver and instance size.
"""

import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np
import pandas as pd
from rich.table import Table

from tmtb.constructions import random_trajectory_set
from tmtb.core.config import Config
from tmtb.core.logging import get_logger
from tmtb.core.models import Ball, TrajectorySet
from tmtb.solvers.approx import estimate_tmtb
from tmtb.solvers.exact import exact_tmtb

logger = get_logger(__name__)

SOLVERS = ("approx", "exact")


@dataclass
class BenchConfig:
    """Instance sizes, parameters and solvers to time."""

    n_values: List[int] = field(default_factory=lambda: [25, 50, 100])
    k: int = 3
    eps: float = 0.25
    rho: float = 1e-6
    seeds: int = 3
    exact_max_n: int = 12
    extent: float = 10.0
    solvers: Sequence[str] = SOLVERS

    def __post_init__(self):
        if not self.n_values:
            raise ValueError("bench needs at least one n value")
        unknown = set(self.solvers) - set(SOLVERS)
        if unknown:
            raise ValueError(f"Unknown solvers: {sorted(unknown)}")

    @classmethod
    def from_config(cls, config: Config, **overrides) -> "BenchConfig":
        values = {
            "n_values": list(config.bench_n_values),
            "k": config.bench_k,
            "eps": config.eps,
            "rho": config.rho,
            "seeds": config.bench_seeds,
            "exact_max_n": config.exact_max_n,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


def _runners(config: BenchConfig) -> Dict[str, Callable[[TrajectorySet], Ball]]:
    return {
        "approx": lambda ts: estimate_tmtb(ts, config.eps, config.rho),
        "exact": exact_tmtb,
    }


def run_bench(config: BenchConfig) -> pd.DataFrame:
    """
    Time every solver on seeded random instances.

    Args:
        config: Benchmark configuration

    Returns:
        One row per (n, seed, solver) with wall time and radius
    """
    runners = _runners(config)
    rows = []
    for n in config.n_values:
        for seed in range(config.seeds):
            ts = random_trajectory_set(n, config.k, seed=seed, extent=config.extent)
            for solver in config.solvers:
                if solver == "exact" and n > config.exact_max_n:
                    continue
                started = time.perf_counter()
                ball = runners[solver](ts)
                seconds = time.perf_counter() - started
                rows.append(
                    {
                        "n": n,
                        "k": config.k,
                        "eps": config.eps,
                        "seed": seed,
                        "solver": solver,
                        "seconds": seconds,
                        "radius": ball.radius,
                    }
                )
                logger.debug(
                    "Bench run",
                    extra={"context": {"n": n, "seed": seed, "solver": solver, "seconds": seconds}},
                )
    return pd.DataFrame(rows, columns=["n", "k", "eps", "seed", "solver", "seconds", "radius"])


def summarize(frame: pd.DataFrame) -> pd.DataFrame:
    """Median seconds per (n, solver), one row per n and one column per solver."""
    if frame.empty:
        return pd.DataFrame()
    summary = frame.groupby(["n", "solver"])["seconds"].median().unstack("solver")
    return summary.sort_index()


def scaling_ratios(summary: pd.DataFrame) -> pd.DataFrame:
    """Median time at each n divided by the median at the previous n."""
    return summary / summary.shift(1)


def bench_table(summary: pd.DataFrame, title: Optional[str] = None) -> Table:
    """Aligned table of median wall times."""
    table = Table(title=title or "Median wall time (s)")
    table.add_column("n", justify="right")
    for solver in summary.columns:
        table.add_column(str(solver), justify="right")
    for n, row in summary.iterrows():
        cells = ["-" if np.isnan(v) else f"{v:.4f}" for v in row.to_numpy(dtype=float)]
        table.add_row(str(n), *cells)
    return table

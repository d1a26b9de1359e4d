"""
Configuration loader with support for YAML, JSON and environment variables.
"""

import json
import os
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml

from tmtb.core.exceptions import ParameterError


@dataclass
class Config:
    """Solver and runtime configuration."""

    # Approximation settings
    eps: float = 0.25
    rho: float = 1e-6
    miter_limit: float = 4.0

    # LP-type solver settings
    seed: int = 0
    lp_step_factor: int = 10

    # Grid oracle settings
    grid_width: float = 0.01
    grid_max_points: int = 100_000_000

    # Evaluation settings
    max_workers: int = 1
    chunk_size: int = 65536

    # Benchmark settings
    exact_max_n: int = 12
    bench_n_values: List[int] = field(default_factory=lambda: [25, 50, 100])
    bench_k: int = 3
    bench_seeds: int = 3

    # Logging settings
    log_level: str = "INFO"
    log_file: Optional[str] = None

    def __post_init__(self):
        if not 0 < self.eps <= 0.5:
            raise ParameterError(f"eps must lie in (0, 1/2], got {self.eps}")
        if self.rho < 0:
            raise ParameterError(f"rho must be non-negative, got {self.rho}")
        if self.grid_width <= 0:
            raise ParameterError(f"grid_width must be positive, got {self.grid_width}")
        if self.miter_limit < 1:
            raise ParameterError(f"miter_limit must be at least 1, got {self.miter_limit}")
        if self.max_workers < 1 or self.chunk_size < 1:
            raise ParameterError("max_workers and chunk_size must be positive")

    @classmethod
    def from_dict(cls, config_dict: Dict[str, Any]) -> "Config":
        """Create Config from dictionary, ignoring unknown keys."""
        return cls(**{k: v for k, v in config_dict.items() if k in cls.__annotations__})

    @classmethod
    def from_env(cls) -> "Config":
        """Load configuration from ``TMTB_*`` environment variables."""
        defaults = cls()
        config_dict: Dict[str, Any] = {
            "eps": float(os.getenv("TMTB_EPS", str(defaults.eps))),
            "rho": float(os.getenv("TMTB_RHO", str(defaults.rho))),
            "miter_limit": float(os.getenv("TMTB_MITER_LIMIT", str(defaults.miter_limit))),
            "seed": int(os.getenv("TMTB_SEED", str(defaults.seed))),
            "lp_step_factor": int(os.getenv("TMTB_LP_STEP_FACTOR", str(defaults.lp_step_factor))),
            "grid_width": float(os.getenv("TMTB_GRID_WIDTH", str(defaults.grid_width))),
            "grid_max_points": int(
                float(os.getenv("TMTB_GRID_MAX_POINTS", str(defaults.grid_max_points)))
            ),
            "max_workers": int(os.getenv("TMTB_MAX_WORKERS", str(defaults.max_workers))),
            "chunk_size": int(os.getenv("TMTB_CHUNK_SIZE", str(defaults.chunk_size))),
            "exact_max_n": int(os.getenv("TMTB_EXACT_MAX_N", str(defaults.exact_max_n))),
            "bench_k": int(os.getenv("TMTB_BENCH_K", str(defaults.bench_k))),
            "bench_seeds": int(os.getenv("TMTB_BENCH_SEEDS", str(defaults.bench_seeds))),
            "log_level": os.getenv("TMTB_LOG_LEVEL", defaults.log_level),
            "log_file": os.getenv("TMTB_LOG_FILE"),
        }
        n_values = os.getenv("TMTB_BENCH_N_VALUES")
        if n_values:
            config_dict["bench_n_values"] = [int(v) for v in n_values.split(",") if v.strip()]
        return cls.from_dict(config_dict)

    def to_dict(self) -> Dict[str, Any]:
        """Convert configuration to dictionary."""
        return asdict(self)


def load_config(config_file: Optional[str] = None) -> Config:
    """
    Load configuration from file or environment.

    Args:
        config_file: Path to configuration file (YAML or JSON)

    Returns:
        Config object
    """
    if config_file:
        path = Path(config_file)
        if not path.exists():
            raise FileNotFoundError(f"Configuration file not found: {config_file}")
        with open(path, "r") as f:
            if path.suffix in (".yaml", ".yml"):
                config_dict = yaml.safe_load(f) or {}
            elif path.suffix == ".json":
                config_dict = json.load(f)
            else:
                raise ValueError(f"Unsupported config format: {config_file}")

        return Config.from_dict(config_dict)

    return Config.from_env()

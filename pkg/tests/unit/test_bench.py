"""Test the benchmark harness."""

import math

import pandas as pd
import pytest
from rich.console import Console

from tmtb.cli.bench import BenchConfig, bench_table, run_bench, scaling_ratios, summarize
from tmtb.core.config import Config


def test_bench_config_validation():
    """Test configuration errors."""
    with pytest.raises(ValueError, match="at least one n"):
        BenchConfig(n_values=[])
    with pytest.raises(ValueError, match="Unknown solvers"):
        BenchConfig(solvers=("exact", "grid"))


def test_bench_config_from_config():
    """Test that None overrides keep configured values."""
    config = Config(bench_n_values=[10, 20], bench_k=2, bench_seeds=5)
    bench = BenchConfig.from_config(config, k=None, seeds=1, eps=0.5)
    assert bench.n_values == [10, 20]
    assert bench.k == 2
    assert bench.seeds == 1
    assert bench.eps == 0.5
    assert bench.exact_max_n == config.exact_max_n


def test_run_bench():
    """Test the rows produced for a small run."""
    config = BenchConfig(n_values=[3, 6], k=2, seeds=2, exact_max_n=4)
    frame = run_bench(config)
    assert list(frame.columns) == ["n", "k", "eps", "seed", "solver", "seconds", "radius"]
    assert len(frame) == 2 * 2 + 2
    assert set(frame[frame.n == 6].solver) == {"approx"}
    assert (frame.seconds >= 0).all()
    assert (frame.radius >= 0).all()

    exact = frame[frame.solver == "exact"].set_index("seed").radius
    approx = frame[(frame.solver == "approx") & (frame.n == 3)].set_index("seed").radius
    assert (approx <= 1.25 * exact + 1e-9).all()
    assert (approx >= exact - 1e-9).all()


def test_summarize():
    """Test the median table."""
    frame = pd.DataFrame(
        {
            "n": [10, 10, 10, 20, 20, 20],
            "solver": ["approx"] * 3 + ["approx", "exact", "approx"],
            "seconds": [1.0, 3.0, 2.0, 4.0, 9.0, 6.0],
        }
    )
    summary = summarize(frame)
    assert list(summary.index) == [10, 20]
    assert summary.loc[10, "approx"] == 2.0
    assert summary.loc[20, "approx"] == 5.0
    assert math.isnan(summary.loc[10, "exact"])

    ratios = scaling_ratios(summary)
    assert math.isnan(ratios.loc[10, "approx"])
    assert ratios.loc[20, "approx"] == 2.5


def test_summarize_empty():
    """Test that an empty frame gives an empty summary."""
    assert summarize(pd.DataFrame(columns=["n", "solver", "seconds"])).empty


def test_bench_table():
    """Test the rendered table."""
    summary = pd.DataFrame({"approx": [0.5, 1.0], "exact": [float("nan"), 2.0]}, index=[5, 10])
    console = Console(width=80, record=True)
    console.print(bench_table(summary, title="times"))
    text = console.export_text()
    assert "times" in text
    assert "0.5000" in text
    assert "2.0000" in text
    assert "-" in text

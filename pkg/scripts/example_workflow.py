#!/usr/bin/env python3
"""
Example: Touching-ball workflow

Builds the essential-trajectory construction, solves it with every solver,
checks which trajectories the optimum depends on and writes a figure.

Features demonstrated:
- Generating and writing trajectory files
- Exact, approximate and grid solvers
- Leave-one-out essentiality
- Result records and SVG output
- Using structured JSON logging
"""

import sys
import time
from pathlib import Path

from tmtb.cli.io import parse_trajectories, write_trajectories
from tmtb.cli.records import RecordStore, ResultRecord
from tmtb.cli.svg import RenderOptions, write_svg
from tmtb.constructions import lp_monster, monster_removals, random_segment_set
from tmtb.core.config import Config
from tmtb.core.logging import configure_logging, get_logger
from tmtb.solvers.approx import estimate_tmtb_report
from tmtb.solvers.exact import exact_tmtb
from tmtb.solvers.lp import lp_trajectory_mtb
from tmtb.solvers.oracle import grid_tmtb

OUT = Path("example_output")


def rule(title=None):
    print("\n" + "=" * 70)
    if title:
        print(title)
        print("=" * 70)


def solve_all(ts, store, logger, config):
    """Run the exact, approximate and grid solvers on one set."""
    rule("SOLVERS")
    solvers = {
        "exact": lambda: exact_tmtb(ts),
        "approx": lambda: estimate_tmtb_report(ts, config.eps, config.rho).ball,
        "oracle": lambda: grid_tmtb(ts, 0.05),
    }
    balls = {}
    for name, solve in solvers.items():
        started = time.perf_counter()
        ball = solve()
        elapsed = time.perf_counter() - started
        store.append(ResultRecord.from_ball(name, ball, ts, elapsed).check())
        balls[name] = ball
        print(f"{name:>7}: radius {ball.radius:.6f} at ({ball.center.x:.4f}, {ball.center.y:.4f})")
        logger.info("Solved", extra={"context": {"solver": name, "radius": ball.radius}})
    ratio = balls["approx"].radius / balls["exact"].radius
    print(f"\napprox / exact = {ratio:.4f} (bound {1 + config.eps})")
    return balls


def show_essentiality(n):
    """Remove each trajectory of the construction and re-solve."""
    rule(f"ESSENTIALITY (n={n})")
    report = monster_removals(n)
    print(f"full radius: {report.full_ball.radius:.6f}")
    for entry in report.entries:
        flag = "essential" if entry.essential else "-"
        print(f"  without T{entry.index}: {entry.without_radius:.6f}  {flag}")
    print(f"\nall essential: {report.all_essential}")


def compare_lp(logger):
    """LP-type and exact solvers on single segments."""
    rule("LP-TYPE ON SEGMENTS")
    ts = random_segment_set(15, seed=7)
    result = lp_trajectory_mtb(ts, seed=1)
    exact = exact_tmtb(ts)
    print(f"lp radius:    {result.ball.radius:.9f} (basis {len(result.basis)})")
    print(f"exact radius: {exact.radius:.9f}")
    logger.info("LP comparison", extra={"context": result.to_dict()})


def main():
    """Main entry point."""
    rule("TMTB - EXAMPLE WORKFLOW")
    config = Config.from_env()
    configure_logging(config.log_level, config.log_file)
    logger = get_logger(__name__)
    OUT.mkdir(exist_ok=True)

    try:
        print("\n[1/4] Writing the construction")
        path = write_trajectories(lp_monster(7), OUT / "monster7.txt", "example, n=7")
        ts = parse_trajectories(path)
        print(f"wrote {ts.n} trajectories to {path}")

        print("\n[2/4] Solving")
        balls = solve_all(ts, RecordStore(OUT / "records.jsonl"), logger, config)

        print("\n[3/4] Essentiality")
        show_essentiality(7)
        compare_lp(logger)

        print("\n[4/4] Figure")
        report = estimate_tmtb_report(ts, config.eps, config.rho)
        svg = write_svg(
            OUT / "monster7.svg",
            ts,
            balls["exact"],
            report.ghosts,
            RenderOptions(raise_overlaps=True, sausage_tau=report.sausage_tau),
        )
        print(f"wrote {svg}")
        rule("WORKFLOW COMPLETED")
        return 0
    except Exception as e:
        logger.error(f"Workflow failed: {e}", exc_info=True)
        print(f"\nError: {e}")
        return 1


if __name__ == "__main__":
    sys.exit(main())

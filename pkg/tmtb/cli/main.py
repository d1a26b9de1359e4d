"""
Command-line entry point.

Every solver subcommand reads a trajectory file, prints the ball with its
largest residual and wall time, and optionally appends a JSON record and
writes an SVG figure.
"""

import dataclasses
import sys
import time
from typing import Any, Callable, Dict, Optional

import click
import yaml
from rich.console import Console
from rich.table import Table

from tmtb import __version__
from tmtb.cli.bench import BenchConfig, bench_table, run_bench, scaling_ratios, summarize
from tmtb.cli.io import format_trajectories, parse_trajectories, write_trajectories
from tmtb.cli.records import RecordStore, ResultRecord
from tmtb.cli.svg import RenderOptions, write_svg
from tmtb.constructions import lp_monster
from tmtb.core.config import Config, load_config
from tmtb.core.exceptions import (
    GeometryError,
    ParameterError,
    SolverError,
    TMTBError,
    TrajectoryFileError,
)
from tmtb.core.logging import configure_logging, get_logger
from tmtb.core.models import Ball, TrajectorySet
from tmtb.core.utils import ChunkExecutor
from tmtb.solvers.approx import estimate_tmtb_report
from tmtb.solvers.exact import essentiality_check, exact_tmtb
from tmtb.solvers.lp import lp_trajectory_mtb
from tmtb.solvers.oracle import grid_tmtb

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_INVARIANT = 4

LP_REFUSAL = (
    "lp accepts only trajectories with at most one segment: for longer trajectories "
    "the combinatorial dimension of the minimum touching ball is unbounded, so the "
    "problem is not LP-type (use exact or approx instead)"
)


class CommandFailure(click.ClickException):
    """Click exception carrying one of the package exit codes."""

    def __init__(self, message: str, exit_code: int):
        super().__init__(message)
        self.exit_code = exit_code


class TMTBGroup(click.Group):
    """Group translating package errors into exit codes."""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except ParameterError as exc:
            raise click.UsageError(str(exc), ctx) from exc
        except (TrajectoryFileError, GeometryError) as exc:
            raise CommandFailure(str(exc), EXIT_INPUT) from exc
        except SolverError as exc:
            raise CommandFailure(str(exc), EXIT_INVARIANT) from exc
        except (click.exceptions.Abort, click.exceptions.Exit):
            raise
        except (TMTBError, RuntimeError) as exc:
            logger.error(
                "Command failed", exc_info=True, extra={"context": {"error": type(exc).__name__}}
            )
            raise CommandFailure(str(exc) or type(exc).__name__, EXIT_INVARIANT) from exc


def _config(ctx: click.Context, **overrides) -> Config:
    """Configuration with every non-None flag applied on top."""
    config: Config = ctx.obj["config"]
    changes = {k: v for k, v in overrides.items() if v is not None}
    return dataclasses.replace(config, **changes) if changes else config


def _executor(config: Config) -> ChunkExecutor:
    return ChunkExecutor(config.max_workers, config.chunk_size)


_OUTPUT_OPTIONS = (
    click.option(
        "--input", "input_path", required=True, type=click.Path(dir_okay=False),
        help="Trajectory file",
    ),
    click.option(
        "--record", "record_path", type=click.Path(dir_okay=False),
        help="Append a JSON result record to this file",
    ),
    click.option(
        "--svg-out", type=click.Path(dir_okay=False), help="Write the trajectories and ball as SVG"
    ),
    click.option("--raise-overlaps", is_flag=True, help="Lift overlapping runs in the SVG"),
)


def output_options(func: Callable) -> Callable:
    """Options shared by every solver subcommand."""
    for option in reversed(_OUTPUT_OPTIONS):
        func = option(func)
    return func


def _report(
    solver: str,
    ts: TrajectorySet,
    solve: Callable[[], Ball],
    params: Dict[str, Any],
    record_path: Optional[str],
    svg_out: Optional[str],
    raise_overlaps: bool,
) -> ResultRecord:
    started = time.perf_counter()
    ball = solve()
    wall_time = time.perf_counter() - started
    record = ResultRecord.from_ball(solver, ball, ts, wall_time, params).check()

    click.echo(f"solver: {solver}")
    click.echo(f"center: {ball.center.x!r} {ball.center.y!r}")
    click.echo(f"radius: {ball.radius!r}")
    click.echo(f"max_residual: {record.max_residual:.3e}")
    click.echo(f"wall_time: {wall_time:.6f}")

    if record_path:
        RecordStore(record_path).append(record)
    if svg_out:
        write_svg(svg_out, ts, ball, options=RenderOptions(raise_overlaps=raise_overlaps))
    logger.info(
        "Solver finished",
        extra={"context": {"solver": solver, "radius": ball.radius, "wall_time": wall_time}},
    )
    return record


@click.group(cls=TMTBGroup)
@click.version_option(__version__, prog_name="tmtb")
@click.option(
    "--config", "config_path", type=click.Path(exists=True, dir_okay=False),
    help="YAML or JSON configuration file",
)
@click.option("--log-level", default=None, help="Override the configured log level")
@click.pass_context
def cli(ctx: click.Context, config_path: Optional[str], log_level: Optional[str]):
    """Minimum balls touching every trajectory of a planar set."""
    try:
        config = load_config(config_path)
    except (OSError, ValueError, yaml.YAMLError) as exc:
        raise click.BadParameter(str(exc), ctx, param_hint="--config") from exc
    if log_level:
        config = dataclasses.replace(config, log_level=log_level.upper())
    try:
        configure_logging(config.log_level, config.log_file)
    except ValueError as exc:
        raise click.BadParameter(str(exc), ctx, param_hint="--log-level") from exc
    ctx.ensure_object(dict)
    ctx.obj["config"] = config


@cli.command()
@output_options
@click.pass_context
def exact(ctx, input_path, record_path, svg_out, raise_overlaps):
    """Exact solver over candidate centers."""
    config = _config(ctx)
    ts = parse_trajectories(input_path)
    _report(
        "exact", ts, lambda: exact_tmtb(ts, _executor(config)), {},
        record_path, svg_out, raise_overlaps,
    )


@cli.command()
@output_options
@click.option("--seed", type=int, default=None, help="Seed of the random scan order")
@click.pass_context
def lp(ctx, input_path, record_path, svg_out, raise_overlaps, seed):
    """LP-type solver for points and single segments."""
    config = _config(ctx, seed=seed)
    ts = parse_trajectories(input_path)
    if ts.k > 1:
        raise click.UsageError(LP_REFUSAL, ctx)
    _report(
        "lp",
        ts,
        lambda: lp_trajectory_mtb(ts, config.seed, config.lp_step_factor).ball,
        {"seed": config.seed},
        record_path,
        svg_out,
        raise_overlaps,
    )


@cli.command()
@output_options
@click.option("--eps", type=float, default=None, help="Relative error, in (0, 0.5]")
@click.option("--rho", type=float, default=None, help="Absolute radius floor, >= 0")
@click.pass_context
def approx(ctx, input_path, record_path, svg_out, raise_overlaps, eps, rho):
    """Two-stage (eps, rho)-approximation."""
    config = _config(ctx, eps=eps, rho=rho)
    ts = parse_trajectories(input_path)
    _report(
        "approx",
        ts,
        lambda: estimate_tmtb_report(ts, config.eps, config.rho, config.miter_limit).ball,
        {"eps": config.eps, "rho": config.rho},
        record_path,
        svg_out,
        raise_overlaps,
    )


@cli.command()
@output_options
@click.option("--grid-width", type=float, default=None, help="Grid pitch")
@click.pass_context
def oracle(ctx, input_path, record_path, svg_out, raise_overlaps, grid_width):
    """Brute-force grid scan."""
    config = _config(ctx, grid_width=grid_width)
    ts = parse_trajectories(input_path)
    _report(
        "oracle",
        ts,
        lambda: grid_tmtb(ts, config.grid_width, config.grid_max_points, _executor(config)),
        {"grid_width": config.grid_width},
        record_path,
        svg_out,
        raise_overlaps,
    )


@cli.command("gen-monster")
@click.option("--n", "n", type=int, required=True, help="Number of trajectories, > 4")
@click.option("--out", type=click.Path(dir_okay=False), help="Output file (stdout if omitted)")
def gen_monster(n, out):
    """Write the n-trajectory construction in which every trajectory is essential."""
    ts = lp_monster(n)
    comment = f"essential-trajectory construction, n={n}"
    if out:
        write_trajectories(ts, out, comment)
        click.echo(f"wrote {ts.n} trajectories to {out}")
    else:
        click.echo(format_trajectories(ts, comment), nl=False)


@cli.command()
@click.option("--input", "input_path", type=click.Path(dir_okay=False), help="Trajectory file")
@click.option("--monster", type=int, default=None, help="Render the n-trajectory construction")
@click.option("--drop", type=int, default=None, help="Remove trajectory I before solving")
@click.option(
    "--solver",
    type=click.Choice(["exact", "approx", "oracle", "none"]),
    default="exact",
    show_default=True,
)
@click.option("--farthest-cells", type=int, default=0, help="Shade an N x N farthest sampling")
@click.option("--sausage", is_flag=True, help="Draw the sausage and ghosts of trajectory 0")
@click.option("--raise-overlaps", is_flag=True, help="Lift overlapping runs")
@click.option("--eps", type=float, default=None)
@click.option("--rho", type=float, default=None)
@click.option("--svg-out", type=click.Path(dir_okay=False), required=True)
@click.pass_context
def render(
    ctx, input_path, monster, drop, solver, farthest_cells, sausage, raise_overlaps,
    eps, rho, svg_out,
):
    """Draw a trajectory set with its ball."""
    if (input_path is None) == (monster is None):
        raise click.UsageError("give exactly one of --input and --monster", ctx)
    if farthest_cells < 0:
        raise click.UsageError("--farthest-cells must be >= 0", ctx)
    config = _config(ctx, eps=eps, rho=rho)
    ts = parse_trajectories(input_path) if input_path else lp_monster(monster)
    if drop is not None:
        if not 0 <= drop < ts.n or ts.n < 2:
            raise click.UsageError(f"--drop must index one of {ts.n} trajectories", ctx)
        ts = ts.without(drop)

    report = None
    if sausage or solver == "approx":
        report = estimate_tmtb_report(ts, config.eps, config.rho, config.miter_limit)
    ball: Optional[Ball] = None
    if solver == "exact":
        ball = exact_tmtb(ts, _executor(config))
    elif solver == "approx":
        ball = report.ball
    elif solver == "oracle":
        ball = grid_tmtb(ts, config.grid_width, config.grid_max_points, _executor(config))
    ghosts = report.ghosts if sausage and report is not None else None
    sausage_tau = report.sausage_tau if ghosts is not None else None

    options = RenderOptions(
        raise_overlaps=raise_overlaps, farthest_cells=farthest_cells, sausage_tau=sausage_tau
    )
    write_svg(svg_out, ts, ball, ghosts, options)
    click.echo(f"wrote {svg_out}")


@cli.command()
@click.option("--n", "n_values", type=int, multiple=True, help="Instance size (repeatable)")
@click.option("--k", type=int, default=None, help="Segments per trajectory")
@click.option("--eps", type=float, default=None)
@click.option("--seeds", type=int, default=None, help="Seeds per size")
@click.option("--exact-max-n", type=int, default=None, help="Skip exact above this n")
@click.option("--csv-out", type=click.Path(dir_okay=False), help="Write raw timings as CSV")
@click.pass_context
def bench(ctx, n_values, k, eps, seeds, exact_max_n, csv_out):
    """Median wall time per solver over seeded random instances."""
    config = _config(ctx, eps=eps)
    try:
        bench_config = BenchConfig.from_config(
            config,
            n_values=list(n_values) or None,
            k=k,
            seeds=seeds,
            exact_max_n=exact_max_n,
        )
    except ValueError as exc:
        raise click.UsageError(str(exc), ctx) from exc

    frame = run_bench(bench_config)
    if csv_out:
        frame.to_csv(csv_out, index=False)
    summary = summarize(frame)
    console = Console()
    console.print(bench_table(summary))
    if len(summary) > 1:
        console.print(bench_table(scaling_ratios(summary).iloc[1:], "Ratio to previous n"))


@cli.command()
@click.option("--input", "input_path", required=True, type=click.Path(dir_okay=False))
@click.pass_context
def essentiality(ctx, input_path):
    """Leave-one-out radii: which trajectories the optimum depends on."""
    config = _config(ctx)
    ts = parse_trajectories(input_path)
    entries = essentiality_check(ts, _executor(config))

    table = Table(title=f"Essentiality ({ts.n} trajectories)")
    table.add_column("removed", justify="right")
    table.add_column("full radius", justify="right")
    table.add_column("radius without", justify="right")
    table.add_column("center without", justify="right")
    table.add_column("essential")
    for entry in entries:
        c = entry.without_ball.center
        table.add_row(
            str(entry.index),
            f"{entry.full_radius:.9g}",
            f"{entry.without_radius:.9g}",
            f"({c.x:.6g}, {c.y:.6g})",
            "yes" if entry.essential else "no",
        )
    Console().print(table)


def main(argv=None) -> int:
    """Console-script entry point."""
    try:
        cli.main(args=argv, prog_name="tmtb", standalone_mode=False)
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return 1
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

"""Test the command-line interface end to end."""

import json

import pytest
from click.testing import CliRunner

from tmtb import __version__
from tmtb.cli.io import parse_trajectories, parse_trajectory_text
from tmtb.cli.main import EXIT_INPUT, EXIT_INVARIANT, EXIT_OK, EXIT_USAGE, cli, main
from tmtb.constructions import lp_monster, random_segment_set
from tmtb.core.exceptions import TMTBError
from tmtb.solvers.exact import exact_tmtb


def run(*args):
    return CliRunner().invoke(cli, ["--log-level", "ERROR", *args])


def fields(output):
    """Collect ``key: value`` lines from command output."""
    values = {}
    for line in output.splitlines():
        key, sep, value = line.partition(": ")
        if sep and key in ("solver", "center", "radius", "max_residual", "wall_time"):
            values[key] = value
    return values


def test_version():
    """Test the version flag."""
    result = CliRunner().invoke(cli, ["--version"])
    assert result.exit_code == EXIT_OK
    assert __version__ in result.output


def test_exact_parallel(parallel_segments, trajectory_file):
    """Test the exact solver on two parallel segments."""
    result = run("exact", "--input", trajectory_file(parallel_segments))
    assert result.exit_code == EXIT_OK, result.output
    out = fields(result.output)
    assert out["solver"] == "exact"
    assert float(out["radius"]) == pytest.approx(1.0, abs=1e-9)
    x, y = (float(v) for v in out["center"].split())
    assert 0.0 <= x <= 1.0
    assert y == pytest.approx(1.0)
    assert float(out["max_residual"]) <= 1e-9
    assert float(out["wall_time"]) >= 0.0


def test_approx_within_bound(random_set, trajectory_file):
    """Test that the approximate radius is within (1 + eps) of the exact one."""
    ts = random_set(5, 3, seed=11)
    path = trajectory_file(ts)
    exact = float(fields(run("exact", "--input", path).output)["radius"])
    result = run("approx", "--input", path, "--eps", "0.25", "--rho", "1e-6")
    assert result.exit_code == EXIT_OK, result.output
    radius = float(fields(result.output)["radius"])
    assert exact - 1e-9 <= radius <= 1.25 * exact + 1e-9


def test_oracle_parallel(parallel_segments, trajectory_file):
    """Test the grid oracle command."""
    result = run("oracle", "--input", trajectory_file(parallel_segments), "--grid-width", "0.05")
    assert result.exit_code == EXIT_OK, result.output
    assert 1.0 - 1e-9 <= float(fields(result.output)["radius"]) <= 1.0 + 0.05
    assert fields(result.output)["solver"] == "oracle"


def test_lp_segments(trajectory_file):
    """Test the LP-type solver on single segments."""
    ts = random_segment_set(6, seed=4)
    result = run("lp", "--input", trajectory_file(ts), "--seed", "3")
    assert result.exit_code == EXIT_OK, result.output
    assert float(fields(result.output)["radius"]) == pytest.approx(
        exact_tmtb(ts).radius, abs=1e-6
    )


def test_lp_refuses_long_trajectories(random_set, trajectory_file):
    """Test that lp refuses trajectories with two segments."""
    result = run("lp", "--input", trajectory_file(random_set(3, 2, seed=1)))
    assert result.exit_code == EXIT_USAGE
    assert "not LP-type" in result.output


def test_malformed_file(text_file):
    """Test that a parse error exits with the input code."""
    result = run("exact", "--input", text_file("0,0 1,0\n0,0 1,x\n"))
    assert result.exit_code == EXIT_INPUT
    assert "line 2" in result.output


def test_missing_file(tmp_path):
    """Test that an unreadable file exits with the input code."""
    result = run("approx", "--input", str(tmp_path / "absent.txt"))
    assert result.exit_code == EXIT_INPUT


def test_bad_eps(parallel_segments, trajectory_file):
    """Test that an out-of-range parameter is a usage error."""
    result = run("approx", "--input", trajectory_file(parallel_segments), "--eps", "0.7")
    assert result.exit_code == EXIT_USAGE
    assert "eps" in result.output


def test_record_and_svg(parallel_segments, trajectory_file, tmp_path):
    """Test the record and figure outputs."""
    record = tmp_path / "out" / "records.jsonl"
    svg = tmp_path / "ball.svg"
    result = run(
        "exact",
        "--input",
        trajectory_file(parallel_segments),
        "--record",
        str(record),
        "--svg-out",
        str(svg),
    )
    assert result.exit_code == EXIT_OK, result.output
    data = json.loads(record.read_text().splitlines()[0])
    assert data["solver"] == "exact"
    assert data["radius"] == pytest.approx(1.0)
    assert data["distances"] == pytest.approx([1.0, 1.0])
    assert "<svg" in svg.read_text()


def test_config_file(parallel_segments, trajectory_file, tmp_path):
    """Test that a configuration file supplies defaults."""
    config = tmp_path / "config.yaml"
    config.write_text("eps: 0.5\nlog_level: ERROR\n")
    result = CliRunner().invoke(
        cli,
        ["--config", str(config), "approx", "--input", trajectory_file(parallel_segments)],
    )
    assert result.exit_code == EXIT_OK, result.output
    assert float(fields(result.output)["radius"]) <= 1.5


def test_bad_config_file(tmp_path):
    """Test that an unsupported configuration format is a usage error."""
    config = tmp_path / "config.txt"
    config.write_text("eps = 0.5\n")
    result = CliRunner().invoke(cli, ["--config", str(config), "gen-monster", "--n", "5"])
    assert result.exit_code == EXIT_USAGE


def test_bad_log_level():
    """Test an unknown log level."""
    result = CliRunner().invoke(cli, ["--log-level", "LOUD", "gen-monster", "--n", "5"])
    assert result.exit_code == EXIT_USAGE


def test_gen_monster_stdout():
    """Test that the construction is written to stdout in the text format."""
    result = run("gen-monster", "--n", "7")
    assert result.exit_code == EXIT_OK, result.output
    ts = parse_trajectory_text(result.output).to_trajectory_set()
    assert ts == lp_monster(7)


def test_gen_monster_file(tmp_path):
    """Test writing the construction to a file."""
    out = tmp_path / "monster.txt"
    result = run("gen-monster", "--n", "6", "--out", str(out))
    assert result.exit_code == EXIT_OK, result.output
    assert parse_trajectories(out) == lp_monster(6)
    assert "wrote 6 trajectories" in result.output


def test_gen_monster_too_small():
    """Test that n <= 4 is a usage error."""
    result = run("gen-monster", "--n", "4")
    assert result.exit_code == EXIT_USAGE


def test_render_monster_drop(tmp_path):
    """Test rendering the construction with one trajectory removed."""
    svg = tmp_path / "drop.svg"
    result = run("render", "--monster", "5", "--drop", "1", "--svg-out", str(svg))
    assert result.exit_code == EXIT_OK, result.output
    text = svg.read_text()
    assert text.count("<polyline") == 4
    assert text.count("<circle") == 1


def test_render_sausage(parallel_segments, trajectory_file, tmp_path):
    """Test the sausage and farthest layers."""
    svg = tmp_path / "sausage.svg"
    result = run(
        "render",
        "--input",
        trajectory_file(parallel_segments),
        "--solver",
        "approx",
        "--sausage",
        "--farthest-cells",
        "4",
        "--svg-out",
        str(svg),
    )
    assert result.exit_code == EXIT_OK, result.output
    text = svg.read_text()
    assert 'id="sausage"' in text
    assert 'id="ghosts"' in text
    assert text.count("<rect") == 16


@pytest.mark.parametrize(
    "args",
    [
        ["--svg-out", "x.svg"],
        ["--monster", "5", "--drop", "9", "--svg-out", "x.svg"],
        ["--monster", "5", "--farthest-cells", "-1", "--svg-out", "x.svg"],
    ],
)
def test_render_usage_errors(args):
    """Test render argument checks."""
    assert run("render", *args).exit_code == EXIT_USAGE


def test_essentiality(tmp_path):
    """Test the leave-one-out table on the construction."""
    path = tmp_path / "monster.txt"
    run("gen-monster", "--n", "5", "--out", str(path))
    result = run("essentiality", "--input", str(path))
    assert result.exit_code == EXIT_OK, result.output
    assert "Essentiality (5 trajectories)" in result.output
    assert result.output.count("yes") == 5


def test_bench(tmp_path):
    """Test a tiny benchmark run."""
    csv = tmp_path / "bench.csv"
    result = run(
        "bench",
        "--n", "3",
        "--n", "5",
        "--k", "1",
        "--seeds", "1",
        "--exact-max-n", "3",
        "--csv-out", str(csv),
    )
    assert result.exit_code == EXIT_OK, result.output
    assert "Median wall time" in result.output
    assert "Ratio to previous n" in result.output
    rows = csv.read_text().splitlines()
    assert rows[0] == "n,k,eps,seed,solver,seconds,radius"
    assert len(rows) == 1 + 3


def test_main_exit_codes(parallel_segments, trajectory_file, text_file, random_set, capsys):
    """Test the console-script wrapper."""
    good = trajectory_file(parallel_segments)
    assert main(["--log-level", "ERROR", "exact", "--input", good]) == EXIT_OK
    assert "radius: 1.0" in capsys.readouterr().out

    bad = text_file("not a waypoint\n")
    assert main(["--log-level", "ERROR", "exact", "--input", bad]) == EXIT_INPUT

    long = trajectory_file(random_set(3, 2, seed=0), name="long.txt")
    assert main(["--log-level", "ERROR", "lp", "--input", long]) == EXIT_USAGE


@pytest.mark.parametrize("error", [RuntimeError("lost contact"), TMTBError("bad state")])
def test_main_maps_unexpected_errors(
    parallel_segments, trajectory_file, monkeypatch, capsys, error
):
    """Test that uncaught solver failures exit with the invariant code."""

    def fail(*args, **kwargs):
        raise error

    monkeypatch.setattr("tmtb.cli.main.exact_tmtb", fail)
    good = trajectory_file(parallel_segments)
    assert main(["--log-level", "ERROR", "exact", "--input", good]) == EXIT_INVARIANT
    assert str(error) in capsys.readouterr().err

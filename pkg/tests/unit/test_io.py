"""Test the trajectory text format."""

import pytest

from tmtb.cli.io import (
    format_trajectories,
    parse_trajectories,
    parse_trajectory_text,
    write_trajectories,
)
from tmtb.constructions import lp_monster, random_trajectory_set
from tmtb.core.exceptions import TrajectoryFileError
from tmtb.core.models import TrajectorySet


def test_parse_two_segments():
    """Test a file with two two-point trajectories."""
    parsed = parse_trajectory_text("0,0 1,0\n0,2 1,2\n")
    assert parsed.trajectories == [[(0.0, 0.0), (1.0, 0.0)], [(0.0, 2.0), (1.0, 2.0)]]
    ts = parsed.to_trajectory_set()
    assert ts.n == 2
    assert ts.k == 1


def test_parse_comments_and_blank_lines():
    """Test that comments and blank lines are skipped."""
    text = "# tmtb-trajectories v1\n\n# a comment\n  1.5,-2  3e2,4\n\n"
    parsed = parse_trajectory_text(text)
    assert parsed.version == 1
    assert parsed.trajectories == [[(1.5, -2.0), (300.0, 4.0)]]


def test_parse_single_waypoint():
    """Test a stationary trajectory."""
    ts = parse_trajectory_text("3,4\n").to_trajectory_set()
    assert ts[0].k == 0
    assert ts[0].start.as_tuple() == (3.0, 4.0)


def test_parse_overflow():
    """Test that an overflowing coordinate is reported with its location."""
    with pytest.raises(TrajectoryFileError) as info:
        parse_trajectory_text("0,0 1,0\n0,0 1e400,2\n", path="in.txt")
    error = info.value
    assert error.line == 2
    assert error.column == 5
    assert error.token == "1e400,2"
    assert "infinity" in str(error)
    assert str(error).startswith("in.txt, line 2, column 5")


def test_parse_nan():
    """Test that NaN coordinates are rejected."""
    with pytest.raises(TrajectoryFileError, match="not a number"):
        parse_trajectory_text("0,nan\n")


@pytest.mark.parametrize("text", ["0,0 1;0\n", "0,0 1,2,3\n", "0,0 a,1\n"])
def test_parse_malformed_token(text):
    """Test malformed waypoints."""
    with pytest.raises(TrajectoryFileError) as info:
        parse_trajectory_text(text)
    assert info.value.line == 1
    assert info.value.column == 5


def test_parse_y_column():
    """Test that a bad y coordinate points at its own column."""
    with pytest.raises(TrajectoryFileError) as info:
        parse_trajectory_text("12,zz\n")
    assert info.value.column == 4


def test_parse_no_trajectories():
    """Test a file with only comments."""
    parsed = parse_trajectory_text("# nothing here\n")
    with pytest.raises(TrajectoryFileError, match="no trajectories"):
        parsed.to_trajectory_set()


def test_parse_unsupported_version():
    """Test the version header."""
    with pytest.raises(TrajectoryFileError, match="unsupported format version 2"):
        parse_trajectory_text("# tmtb-trajectories v2\n0,0\n")


def test_parse_collapses_duplicates():
    """Test that adjacent duplicate waypoints are collapsed."""
    parsed = parse_trajectory_text("0,0 0,0 1,1 1,1 0,0\n")
    assert parsed.collapsed == 2
    assert parsed.trajectories == [[(0.0, 0.0), (1.0, 1.0), (0.0, 0.0)]]


def test_format_round_trip():
    """Test that written files parse back to the same set."""
    ts = random_trajectory_set(4, 3, seed=17)
    text = format_trajectories(ts, comment="seed 17\nfour trajectories")
    assert text.splitlines()[:3] == [
        "# tmtb-trajectories v1",
        "# seed 17",
        "# four trajectories",
    ]
    assert parse_trajectory_text(text).to_trajectory_set() == ts


def test_write_and_read_file(tmp_path):
    """Test the file helpers."""
    ts = lp_monster(5)
    path = write_trajectories(ts, tmp_path / "monster.txt")
    assert parse_trajectories(path) == ts
    assert parse_trajectories(str(path)) == ts


def test_read_missing_file(tmp_path):
    """Test a path that does not exist."""
    with pytest.raises(TrajectoryFileError, match="cannot read file") as info:
        parse_trajectories(tmp_path / "missing.txt")
    assert info.value.path.endswith("missing.txt")


def test_stationary_set_format():
    """Test formatting of single-waypoint trajectories."""
    ts = TrajectorySet.from_coords([[(0.5, 0.25)], [(1, 2), (3, 4)]])
    lines = format_trajectories(ts).splitlines()
    assert lines[1:] == ["0.5,0.25", "1.0,2.0 3.0,4.0"]

"""End-to-end tests of the command-line executable.

Runs the built binary as a subprocess and checks record contents, exit
codes, and byte stability. The binary path comes from FAIRGAME_CLI when
ctest sets it, falling back to the default build tree.
"""

import json
import os
import subprocess
from pathlib import Path

import pytest

_default = Path(__file__).resolve().parents[2] / "build" / "fairgame"
CLI = os.environ.get("FAIRGAME_CLI", str(_default))

pytestmark = pytest.mark.skipif(
    not Path(CLI).is_file(), reason="CLI binary not built"
)


def run(*args, **kwargs):
    return subprocess.run(
        [CLI, *args], capture_output=True, text=True, timeout=120, **kwargs
    )


def records(result):
    assert result.returncode == 0, result.stderr
    return [json.loads(line) for line in result.stdout.splitlines()]


def test_enumerate_depth2():
    recs = records(run("enumerate", "--n", "3", "--depth", "2"))
    assert len(recs) == 3
    assert recs[0]["coords"] == ["0", "0", "0"]
    assert recs[-1]["coords"] == ["0", "1", "3"]
    assert all(r["kind"] == "vertex" for r in recs)
    assert recs[-1]["height"] == "5"


def test_enumerate_figure1_root():
    recs = records(
        run("enumerate", "--n", "4", "--root", "-1,1,2,2", "--depth", "1")
    )
    assert len(recs) == 4
    coords = {tuple(r["coords"]) for r in recs}
    assert ("1", "2", "2", "12") in coords


def test_enumerate_depth0_trivial():
    recs = records(run("enumerate", "--n", "3", "--depth", "0"))
    assert len(recs) == 1


def test_enumerate_rejects_non_solution_root():
    result = run("enumerate", "--n", "3", "--root", "1,2,3", "--depth", "1")
    assert result.returncode == 2
    assert result.stderr.strip()


def test_enumerate_requires_exactly_one_bound():
    assert run("enumerate", "--n", "3").returncode == 2
    assert (
        run("enumerate", "--n", "3", "--depth", "1", "--height", "9")
        .returncode
        == 2
    )


def test_roots_n3():
    recs = records(run("roots", "--n", "3"))
    assert [r["coords"] for r in recs] == [
        ["-1", "-1", "-1"],
        ["0", "0", "0"],
    ]


def test_roots_fixed_tuple():
    recs = records(run("roots", "--n", "4", "--a", "2"))
    coords = [tuple(r["coords"]) for r in recs]
    assert ("-2", "2", "8", "8") in coords
    assert ("-1", "1", "2", "2") in coords
    assert all(r["witness_a"] == ["2"] for r in recs)
    assert run("roots", "--n", "4", "--a", "1,2").returncode == 2


def test_count_max_45():
    (rec,) = records(run("count-max", "45"))
    assert rec["formula"] == "2"
    assert rec["listed"] == "2"
    assert rec["agree"] is True
    assert run("count-max", "13").returncode == 2


def test_c3_commands():
    (rec,) = records(run("c3", "--check", "13"))
    assert rec["member"] is False and rec["agree"] is True
    recs = records(run("c3", "--list", "13"))
    assert [r["c"] for r in recs] == ["0", "1", "3", "6", "9", "10"]
    (density,) = records(run("c3", "--density", "1000"))
    assert density["density"] == "293/1000"
    assert run("c3").returncode == 2


def test_lorentz_commands():
    (rec,) = records(run("lorentz", "--count", "100"))
    assert rec["points"] == "328"
    assert rec["solution_points"] == "164"
    (image,) = records(run("lorentz", "--map", "0,1,3"))
    assert image["w"] == ["-4", "-9", "10"]
    (pre,) = records(run("lorentz", "--unmap", "-4,-9,10"))
    assert pre["x"] == ["0", "1", "3"]
    assert run("lorentz", "--unmap", "1,1,1").returncode == 2


def test_simulate_reproducible():
    a = run("simulate", "--bag", "1,3,9", "--trials", "20000", "--seed", "5")
    b = run("simulate", "--bag", "1,3,9", "--trials", "20000", "--seed", "5")
    assert a.stdout == b.stdout
    (rec,) = records(a)
    assert rec["exact"] == "1/2"
    assert abs(float(rec["rate_decimal"]) - 0.5) < 0.02


def test_verify_mod3():
    result = run("verify", "mod3", "--height", "1000")
    assert result.returncode == 0
    (rec,) = [json.loads(l) for l in result.stdout.splitlines()]
    assert rec["violations"] == "0"
    assert int(rec["vertices_checked"]) > 0


def test_verify_unknown_suite_is_usage_error():
    assert run("verify", "bogus", "--height", "10").returncode == 2


def test_help_exits_zero():
    assert run("--help").returncode == 0


def test_csv_format():
    result = run("enumerate", "--n", "3", "--depth", "2", "--format", "csv")
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert lines[0].startswith("kind,depth,coords")
    assert lines[-1].split(",")[2] == "0;1;3"


def test_jobs_output_is_byte_stable():
    base = run("enumerate", "--n", "4", "--root", "-1,1,2,2", "--height", "500")
    par = run(
        "enumerate",
        "--n",
        "4",
        "--root",
        "-1,1,2,2",
        "--height",
        "500",
        "--jobs",
        "3",
    )
    assert base.returncode == 0 and par.returncode == 0
    assert base.stdout == par.stdout

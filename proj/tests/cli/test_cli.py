import json
import os
import random
import subprocess
from pathlib import Path

import pytest

HECKE = os.environ.get("HECKE_CLI", "hecke")


def run(*args, env=None):
    return subprocess.run([HECKE, *map(str, args)], capture_output=True, text=True, env=env)


def record(*args):
    p = run(*args)
    assert p.returncode == 0, p.stderr
    return json.loads(p.stdout)


@pytest.mark.parametrize(
    "args, expected",
    [
        (["trace", "--level", 1, "--weight", 12, "--index", 2], {"int": -24}),
        (["trace", "--level", 11, "--weight", 2, "--index", 1], {"int": 1}),
        (["trace", "--level", 4, "--weight", 3, "--char", 1, "--index", 7], {"int": 0}),
        (["classnum", "--D", 0], {"rat": "-1/12"}),
        (["classnum", "--D", -9], {"rat": "-3/2"}),
        (["trace-gamma1", "--level", 7, "--weight", 4, "--index", 2, "--space", "S"], {"int": -3}),
        (["trace-al", "--level", 11, "--ell", 11, "--weight", 2, "--index", 1], {"int": -1}),
    ],
)
def test_examples(args, expected):
    assert record(*args)["result"] == expected


def test_record_shape():
    r = record("trace", "--level", 19, "--weight", 3, "--char", 3, "--index", 4, "--breakdown", "--approx", 12)
    assert list(r) == ["query", "result", "approx", "breakdown", "wall_time"]
    assert r["query"] == {"level": 19, "weight": 3, "char": 3, "index": 4}
    assert r["result"]["m"] == 3
    assert set(r["breakdown"]) == {"elliptic", "boundary", "cusp", "delta"}
    assert isinstance(r["approx"], str)


def test_approx_never_replaces_exact():
    r = record("classnum", "--D", 3, "--approx", 20)
    assert r["result"] == {"rat": "1/3"}
    assert r["approx"].startswith("0.3333333333")


def test_text_format():
    p = run("trace", "--level", 1, "--weight", 12, "--index", 3, "--format", "text")
    assert p.stdout.strip() == "252"


def test_char_list_order():
    r = record("char", "list", "--level", 8)
    assert [c["index"] for c in r["characters"]] == [0, 1, 2, 3]
    assert [g["generator"] for g in r["generators"]] == [7, 5]
    assert r["characters"][1]["conductor"] == 4


def test_trace_form():
    p = run("trace-form", "--level", 1, "--weight", 12, "--precision", 4, "--format", "qseries")
    assert p.stdout.strip() == "q - 24*q^2 + 252*q^3 - 1472*q^4 + O(q^5)"
    r = record("trace-form", "--level", 4, "--weight", 6, "--precision", 6, "--parity", "odd")
    assert [c["int"] for c in r["coefficients"]] == [1, 0, -12, 0, 54, 0]


@pytest.mark.parametrize(
    "args",
    [
        ["trace", "--level", 0, "--weight", 2, "--index", 1],
        ["trace", "--level", 5, "--weight", 2, "--index", 1, "--char", 9],
        ["trace", "--level", 5, "--weight", 2, "--index", 1, "--char", "odd"],
        ["trace", "--weight", 2, "--index", 1],
        ["trace-al", "--level", 12, "--ell", 2, "--weight", 2, "--index", 1],
        ["trace-al", "--level", 11, "--ell", 11, "--weight", 3, "--index", 1],
        ["nonsense"],
        ["table", "--grid", "N=1..3,k=2"],
        ["table", "--grid", "N=1..3,k=3,n=1..2", "--chars", "all-valid-parity", "--format", "csv"],
    ],
)
def test_usage_errors_exit_2(args):
    assert run(*args).returncode == 2


def test_integrality_failure_exit_3():
    p = run("trace", "--level", 4, "--weight", 3, "--char", 1, "--index", 1, "--chi-eval", "naive")
    assert p.returncode == 3
    assert "integrality" in p.stderr


def test_determinism():
    args = ["trace", "--level", 36, "--weight", 4, "--char", 5, "--index", 9, "--breakdown", "--no-wall-time"]
    assert run(*args).stdout == run(*args).stdout
    t = ["table", "--grid", "N=1..8,k=2..4,n=1..5", "--chars", "all-valid-parity"]
    parallel = run(*t, "--jobs", 4)
    assert parallel.returncode == 0
    assert parallel.stdout == run(*t, "--jobs", 1).stdout


def cell_counts(stderr):
    # "table: 300 cells, 0 computed, 300 from cache, ..."
    parts = stderr.split(",")
    return int(parts[1].split()[0]), int(parts[2].split()[0])


def test_cache_resume(tmp_path):
    grid = ["table", "--grid", "N=1..10,k=2..6:2,n=1..10", "--format", "csv", "--cache", tmp_path]
    first = run(*grid)
    assert first.returncode == 0
    assert cell_counts(first.stderr) == (300, 0)
    second = run(*grid)
    assert cell_counts(second.stderr) == (0, 300)
    assert second.stdout == first.stdout
    assert first.stdout.splitlines()[0] == "group,N,k,chi,n,value"
    assert len(first.stdout.splitlines()) == 301


def test_cache_env_default(tmp_path):
    env = dict(os.environ, HECKE_CACHE_DIR=str(tmp_path))
    grid = ["table", "--grid", "N=3..4,k=2,n=1..3", "--group", "gamma1"]
    run(*grid, env=env)
    assert cell_counts(run(*grid, env=env).stderr) == (0, 6)


def test_cache_soundness(tmp_path):
    grid = ["table", "--grid", "N=1..20,k=2..5,n=1..12", "--chars", "all-valid-parity"]
    fresh = run(*grid).stdout.splitlines()
    run(*grid, "--cache", tmp_path)
    cached = run(*grid, "--cache", tmp_path).stdout.splitlines()
    rng = random.Random(7)
    for i in rng.sample(range(len(fresh)), 200):
        assert cached[i] == fresh[i]


def test_cache_engine_mismatch_recomputes(tmp_path):
    grid = ["table", "--grid", "N=5,k=2,n=1..4", "--cache", tmp_path]
    run(*grid)
    entry = sorted(Path(tmp_path).glob("*.json"))[0]
    data = json.loads(entry.read_text())
    data["engine"] = "some-older-engine"
    data["record"]["result"] = {"int": 12345}
    entry.write_text(json.dumps(data))
    p = run(*grid)
    assert cell_counts(p.stderr) == (1, 3)
    assert "12345" not in p.stdout


def test_selfcheck():
    ok = run("selfcheck", "--suite", "class-numbers", "--bounds", "D=300,kh=50")
    assert ok.returncode == 0
    assert json.loads(ok.stdout)["ok"] is True
    bad = run("selfcheck", "--suite", "character-sum", "--bounds", "N=8,k=4,n=4", "--mutate", "chi-naive")
    assert bad.returncode == 1
    assert json.loads(bad.stdout)["failures"]

"""End-to-end checks of the command-line front end.

Everything runs in-process through cli.main so exit codes and stream
separation are asserted exactly; one subprocess test covers the module
entry point wiring.
"""

import io
import subprocess
import sys
from pathlib import Path

import pytest

from dagsort import cli
from dagsort.analysis import hypercube_worst_case_closed

DEMO_FIXTURE = str(Path(__file__).resolve().parent.parent / "fixtures" / "demo12.dag")

GOLDEN_TRACE_TEXT = (
    "swap 9 7 label=10\n"
    "swap 7 8 label=9\n"
    "swap 8 5 label=8\n"
    "swap 5 3 label=6\n"
    "swap 3 2 label=4\n"
    "labels: 1 2 3 4 6 6 8 9 8 10 14 16\n"
)

CSV_HEADER = "topology,n,pattern,seed,insert_cmp,remove_cmp,total_cmp,bound,worst_case_formula"


def run_cli(argv, stdin="", monkeypatch=None, capsys=None):
    if monkeypatch is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    rc = cli.main(argv)
    out, err = capsys.readouterr()
    return rc, out, err


def test_sort_golden_hypercube2(monkeypatch, capsys):
    rc, out, err = run_cli(
        ["sort", "--topology", "hypercube:2"], "3 1 2 0", monkeypatch, capsys
    )
    assert rc == 0
    # stdout carries only the data line
    assert out == "0 1 2 3\n"
    assert (
        "n=4 topology=hypercube:2 insert_cmp=5 remove_cmp=11 total=16 bound=32"
        in err
    )


def test_sort_bare_hypercube_autosizes(monkeypatch, capsys):
    rc, out, err = run_cli(["sort"], "5 4 3 2 1", monkeypatch, capsys)
    assert rc == 0
    assert out == "1 2 3 4 5\n"
    assert "n=5 topology=hypercube:3 " in err


def test_sort_empty_input(monkeypatch, capsys):
    rc, out, err = run_cli(["sort"], "", monkeypatch, capsys)
    assert rc == 0
    assert out == ""
    assert "n=0 " in err


def test_sort_size_mismatch_exits_3(monkeypatch, capsys):
    rc, out, err = run_cli(
        ["sort", "--topology", "path:4"], "1 2 3 4 5", monkeypatch, capsys
    )
    assert rc == 3
    assert out == ""
    assert "error:" in err


def test_sort_garbage_input_exits_2(monkeypatch, capsys):
    rc, out, err = run_cli(["sort"], "12 x 9", monkeypatch, capsys)
    assert rc == 2
    assert out == ""


def test_sort_bad_topology_exits_2(monkeypatch, capsys):
    for spec in ("blob:9", "grid:2", "path:0", "path:99999999999"):
        rc, out, _ = run_cli(["sort", "--topology", spec], "1", monkeypatch, capsys)
        assert rc == 2, spec
        assert out == ""


def test_sort_reads_input_file(tmp_path, capsys):
    src = tmp_path / "values.txt"
    src.write_text("9 8 7\n")
    rc, out, _ = run_cli(["sort", "--input", str(src)], capsys=capsys)
    assert rc == 0
    assert out == "7 8 9\n"


def test_bench_csv_schema(capsys):
    rc, out, err = run_cli(
        [
            "bench",
            "--topology",
            "hypercube:1,hypercube:2,hypercube:3",
            "--pattern",
            "reverse,equal",
            "--seed",
            "5",
        ],
        capsys=capsys,
    )
    assert rc == 0
    assert err == ""
    lines = out.strip().split("\n")
    assert lines[0] == CSV_HEADER
    rows = [line.split(",") for line in lines[1:]]
    assert len(rows) == 6
    assert all(len(r) == 9 for r in rows)

    # seeds increment per row, patterns cycle within each topology
    assert [r[3] for r in rows] == [str(5 + i) for i in range(6)]
    assert [r[2] for r in rows] == ["reverse", "equal"] * 3

    # reverse-sorted input drives insertion to its exact worst case
    for dims, row in zip((1, 2, 3), rows[::2]):
        worst = hypercube_worst_case_closed(dims)
        assert int(row[4]) == worst
        assert row[8] == str(worst)

    # equal labels still pay one comparison per edge on the way in
    for dims, row in zip((1, 2, 3), rows[1::2]):
        assert int(row[4]) == dims * (1 << (dims - 1))


def test_bench_bare_family_with_sizes(capsys):
    rc, out, _ = run_cli(
        ["bench", "--topology", "star", "--sizes", "4,8"], capsys=capsys
    )
    assert rc == 0
    lines = out.strip().split("\n")
    rows = [line.split(",") for line in lines[1:]]
    assert [r[0] for r in rows] == ["star:4", "star:8"]
    assert [r[1] for r in rows] == ["4", "8"]
    # worst_case_formula column stays empty off the hypercube family
    assert all(r[8] == "" for r in rows)
    # bound column matches n * L * (din + dout) for a star
    assert [int(r[7]) for r in rows] == [4 * 1 * 4, 8 * 1 * 8]


def test_bench_bare_family_without_sizes_exits_2(capsys):
    rc, out, _ = run_cli(["bench", "--topology", "star"], capsys=capsys)
    assert rc == 2
    assert out == ""


def test_bench_unknown_pattern_exits_2(capsys):
    rc, _, err = run_cli(
        ["bench", "--topology", "path:4", "--pattern", "zigzag"], capsys=capsys
    )
    assert rc == 2
    assert "zigzag" in err


def test_verify_passes(capsys):
    rc, out, _ = run_cli(["verify", "--runs", "20"], capsys=capsys)
    assert rc == 0
    lines = out.strip().split("\n")
    assert len(lines) == 5
    assert all(line.startswith("PASS ") for line in lines)
    names = {line.split(" ", 1)[1] for line in lines}
    assert names == {
        "ordered-after-sift",
        "multiset-conservation",
        "raise-equivalence",
        "entropy-bound",
        "golden-trace",
    }


def test_trace_text_golden(capsys):
    rc, out, err = run_cli(
        [
            "trace",
            "--input",
            DEMO_FIXTURE,
            "--vertex",
            "9",
            "--new-label",
            "3",
            "--format",
            "text",
        ],
        capsys=capsys,
    )
    assert rc == 0
    assert err == ""
    assert out == GOLDEN_TRACE_TEXT


def test_trace_dot_snapshots(capsys):
    argv = ["trace", "--input", DEMO_FIXTURE, "--vertex", "9", "--new-label", "3"]
    rc, out, _ = run_cli(argv, capsys=capsys)
    assert rc == 0
    # one snapshot before each exchange plus the final state
    assert out.count("digraph sift_") == 6
    for i in range(6):
        assert f"digraph sift_{i} {{" in out
    # current vertex is gray, its next target black
    assert 'style=filled, fillcolor=gray' in out
    assert 'style=filled, fillcolor=black, fontcolor=white' in out

    rc2, out2, _ = run_cli(argv, capsys=capsys)
    assert rc2 == 0 and out2 == out


def test_trace_out_directory(tmp_path, capsys):
    out_dir = tmp_path / "snaps"
    rc, out, err = run_cli(
        [
            "trace",
            "--input",
            DEMO_FIXTURE,
            "--vertex",
            "9",
            "--new-label",
            "3",
            "--out",
            str(out_dir),
        ],
        capsys=capsys,
    )
    assert rc == 0
    assert out == ""
    assert "wrote 6 snapshots" in err
    files = sorted(p.name for p in out_dir.iterdir())
    assert files == [f"sift_{i:03d}.dot" for i in range(6)]
    assert (out_dir / "sift_000.dot").read_text().startswith("digraph sift_0 {")


def test_trace_not_lowering_exits_4(capsys):
    rc, _, err = run_cli(
        ["trace", "--input", DEMO_FIXTURE, "--vertex", "9", "--new-label", "12"],
        capsys=capsys,
    )
    assert rc == 4
    assert "does not lower" in err


def test_trace_unordered_input_exits_4(tmp_path, capsys):
    bad = tmp_path / "bad.dag"
    bad.write_text("2 1\n0 1\nlabels: 5 1\n")
    rc, _, err = run_cli(
        ["trace", "--input", str(bad), "--vertex", "1", "--new-label", "0"],
        capsys=capsys,
    )
    assert rc == 4
    assert "not ordered" in err


def test_trace_bad_arguments_exit_2(tmp_path, capsys):
    missing = str(tmp_path / "nope.dag")
    cases = [
        ["trace", "--input", missing, "--vertex", "0", "--new-label", "0"],
        ["trace", "--input", DEMO_FIXTURE, "--vertex", "99", "--new-label", "0"],
        ["trace", "--input", DEMO_FIXTURE, "--vertex", "9", "--new-label", "abc"],
    ]
    for argv in cases:
        rc, out, _ = run_cli(argv, capsys=capsys)
        assert rc == 2, argv
        assert out == ""


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "dagsort.cli", "sort", "--topology", "hypercube:2"],
        input="3 1 2 0",
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "0 1 2 3\n"
    assert "total=16 bound=32" in proc.stderr


def test_make_pattern_shapes():
    import random

    rng = random.Random(0)
    assert cli.make_pattern("sorted", 4, rng) == [0, 1, 2, 3]
    assert cli.make_pattern("reverse", 4, rng) == [4, 3, 2, 1]
    assert cli.make_pattern("equal", 3, rng) == [7, 7, 7]
    assert len(cli.make_pattern("random", 9, rng)) == 9
    with pytest.raises(ValueError):
        cli.make_pattern("zigzag", 4, rng)

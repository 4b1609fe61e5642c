from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from ssdgraph.cli import main

from .conftest import SAMPLES


def run(*argv: str) -> tuple[int, str]:
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_decompose_nine():
    code, out = run("decompose", str(SAMPLES / "nine_vertex.txt"))
    assert code == 0
    assert out.splitlines() == [
        "s v1 v5 v6 v7 v8",
        "s v1 v2 v3 v4 v7 v8",
        "v1 v2 v3 v4 v5 v6 v7 v8",
    ]


def test_minrs_by_label_and_id():
    assert run("minrs", str(SAMPLES / "nine_vertex.txt"), "--root", "s") == (0, "v2 v3 v4\nv5 v6\n")
    assert run("minrs", str(SAMPLES / "nine_vertex.txt"), "--root", "0")[1] == "v2 v3 v4\nv5 v6\n"


def test_classify_json():
    code, out = run("classify", str(SAMPLES / "two_cycle.txt"))
    assert code == 0
    assert json.loads(out) == {"kind": "Both", "minrs_witnesses": [["1"], ["0"]]}
    code, out = run("classify", str(SAMPLES / "nine_vertex.txt"))
    assert json.loads(out)["kind"] == "MinRsDisjoint"


def test_enumerate_count_and_limit():
    assert run("enumerate", str(SAMPLES / "cycle5.txt"), "--count-only") == (0, "6\n")
    code, out = run("enumerate", str(SAMPLES / "complete4.txt"), "--limit", "3")
    assert code == 0 and len(out.splitlines()) == 3
    code, out = run("--json", "enumerate", str(SAMPLES / "cycle5.txt"), "--count-only")
    assert json.loads(out) == {"count": 6}


def test_enumerate_lists_sorted_sets():
    code, out = run("enumerate", str(SAMPLES / "cycle5.txt"))
    assert sorted(out.splitlines()) == sorted(["0 1 2 3 4", "0", "1", "2", "3", "4"])


def test_hamiltonian_commands():
    assert run("hamiltonian", str(SAMPLES / "cycle5.txt")) == (0, "0 1 2 3 4\n")
    assert run("hamiltonian", str(SAMPLES / "nine_vertex.txt"))[0] == 2
    assert run("augment", str(SAMPLES / "cycle5.txt")) == (0, "0 2\n")
    code, out = run("hamiltonian-search", str(SAMPLES / "nine_vertex.txt"), "--budget", "1000")
    assert (code, out) == (2, "exhausted\n")
    code, out = run("--json", "hamiltonian-search", str(SAMPLES / "complete4.txt"))
    assert code == 0 and json.loads(out)["status"] == "found"


def test_dominator_tree_lines():
    code, out = run("dominator-tree", str(SAMPLES / "nine_vertex.txt"), "--root", "s")
    assert code == 0
    assert out.splitlines() == ["v1 s", "v2 v1", "v3 v2", "v4 v3", "v5 v1", "v6 v5", "v7 v1", "v8 v7"]
    code, out = run("dominator-tree", str(SAMPLES / "nine_vertex.txt"), "--transpose")
    assert "v8 v1" in out.splitlines()


def test_bench_reports():
    code, out = run("bench", str(SAMPLES / "cycle5.txt"), "--repetitions", "0")
    report = json.loads(out)
    assert code == 0 and report["decompose_seconds"] == [] and report["delay"] is None
    code, out = run("bench", str(SAMPLES / "nine_vertex.txt"), "--repetitions", "2", "--outputs", "10")
    report = json.loads(out)
    assert len(report["decompose_seconds"]) == 2
    assert report["classification"] == "MinRsDisjoint"
    assert report["maxpss_count"] == 3
    assert report["delay"]["outputs"] == report["solutions_emitted"] == 10


def test_diagnoses_exit_2():
    assert run("classify", str(SAMPLES / "path3.txt"))[0] == 2
    assert run("minrs", str(SAMPLES / "nine_vertex.txt"), "--root", "nobody")[0] == 2
    assert run("augment", str(SAMPLES / "two_cycle.txt"))[0] == 2


def test_errors_exit_1(tmp_path):
    assert run("classify", str(tmp_path / "missing.txt"))[0] == 1
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1\n2 2\n")
    assert run("decompose", str(bad))[0] == 1
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 1


def test_output_is_byte_stable():
    first = run("enumerate", str(SAMPLES / "nine_vertex.txt"))
    second = run("enumerate", str(SAMPLES / "nine_vertex.txt"))
    assert first == second


def test_selftest(monkeypatch):
    monkeypatch.setenv("SSD_SEED", "99")
    code, out = run("selftest", "--count", "30")
    assert code == 0
    assert json.loads(out) == {"seed": 99, "graphs": 30, "failures": 0}


def test_console_entry_point_reads_stdin():
    proc = subprocess.run(
        [sys.executable, "-m", "ssdgraph.cli", "classify", "-"],
        input=b"0 1\n1 2\n2 0\n",
        capture_output=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["kind"] == "MaxPssDisjoint"

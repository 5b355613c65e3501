"""End-to-end command-line behavior."""

import json

import numpy as np
import pytest

from anylouvain import datasets, read_partition
from anylouvain.cli import main


@pytest.fixture()
def karate_file(tmp_path):
    import importlib.resources as resources
    src = resources.files("anylouvain").joinpath("data/karate.edges")
    dst = tmp_path / "karate.edges"
    dst.write_text(src.read_text())
    return str(dst)


def test_detect_writes_partition_and_summary(karate_file, tmp_path, capsys):
    out = tmp_path / "part.tsv"
    summ = tmp_path / "summary.json"
    rc = main(["detect", karate_file, "--criterion", "ng", "--seed", "1",
               "--precision", "5e-3", "--output", str(out),
               "--summary-out", str(summ)])
    assert rc == 0
    _, labels = datasets.karate_club()
    flat = read_partition(out, labels)
    blob = json.loads(summ.read_text())
    assert blob["kappa_final"] == len(np.unique(flat))
    assert 3 <= blob["kappa_final"] <= 5
    assert "criterion: ng" in capsys.readouterr().err


def test_detect_levels_out(karate_file, tmp_path):
    lev = tmp_path / "levels.json"
    rc = main(["detect", karate_file, "--levels-out", str(lev),
               "--output", str(tmp_path / "p.tsv")])
    assert rc == 0
    blob = json.loads(lev.read_text())
    assert blob["levels"][0]["n"] == 34
    assert len(blob["levels"][-1]["membership"]) == 34


def test_detect_eval_fixed_point(karate_file, tmp_path, capsys):
    out = tmp_path / "part.tsv"
    summ = tmp_path / "summary.json"
    assert main(["detect", karate_file, "--criterion", "du", "--seed", "3",
                 "--output", str(out), "--summary-out", str(summ)]) == 0
    capsys.readouterr()
    assert main(["eval", karate_file, str(out), "--criterion", "du"]) == 0
    lines = capsys.readouterr().out.splitlines()
    vals = [float(line.split("=")[1]) for line in lines]
    assert vals[0] == pytest.approx(vals[1], rel=1e-9)
    assert vals[0] == pytest.approx(json.loads(summ.read_text())["quality"],
                                    rel=1e-9)


def test_eval_one_community_ng_zero(tmp_path, capsys):
    graph = tmp_path / "g.edges"
    graph.write_text("a b\nb c\nc a\n")
    part = tmp_path / "p.tsv"
    part.write_text("a\t0\nb\t0\nc\t0\n")
    assert main(["eval", str(graph), str(part), "--criterion", "ng"]) == 0
    out = capsys.readouterr().out
    assert float(out.splitlines()[0].split("=")[1]) == pytest.approx(0.0)


def test_detect_empty_input_fails(tmp_path, capsys):
    empty = tmp_path / "empty.edges"
    empty.write_text("")
    out = tmp_path / "p.tsv"
    rc = main(["detect", str(empty), "--output", str(out)])
    assert rc == 1
    assert not out.exists()
    assert "error" in capsys.readouterr().err


def test_invalid_criterion_rejected_before_io(tmp_path, capsys):
    rc = main(["detect", str(tmp_path / "does-not-exist.edges"),
               "--criterion", "nope"])
    assert rc == 1
    assert "unknown criterion" in capsys.readouterr().err


def test_oz_alpha_rejected_before_io(tmp_path, capsys):
    missing = str(tmp_path / "does-not-exist.edges")
    assert main(["detect", missing, "--criterion", "oz"]) == 1
    assert "alpha" in capsys.readouterr().err
    assert main(["detect", missing, "--criterion", "oz",
                 "--alpha", "1.5"]) == 1
    assert "alpha" in capsys.readouterr().err


def test_not_pluggable_criteria_rejected(karate_file, capsys):
    for cid, why in (("mg", "not pluggable"), ("sm", "not pluggable"),
                     ("md", "not pluggable")):
        rc = main(["detect", karate_file, "--criterion", cid])
        assert rc == 1
        assert why in capsys.readouterr().err


def test_wc_weighted_input_rejected(tmp_path, capsys):
    graph = tmp_path / "w.edges"
    graph.write_text("a b 2.5\nb c 1\n")
    rc = main(["detect", str(graph), "--criterion", "wc"])
    assert rc == 1
    assert "unweighted" in capsys.readouterr().err


def test_optimum_small_graph(tmp_path, capsys):
    graph = tmp_path / "tri2.edges"
    graph.write_text("a b\nb c\nc a\nd e\ne f\nf d\n")
    out = tmp_path / "opt.tsv"
    rc = main(["optimum", str(graph), "--criterion", "ng",
               "--output", str(out)])
    assert rc == 0
    assert "communities = 2" in capsys.readouterr().out
    flat = read_partition(out, ["a", "b", "c", "d", "e", "f"])
    assert flat[0] == flat[1] == flat[2]
    assert flat[3] == flat[4] == flat[5]
    assert flat[0] != flat[3]


def test_optimum_refuses_large_graphs(karate_file, capsys):
    rc = main(["optimum", karate_file, "--criterion", "ng"])
    assert rc == 1
    assert "capped" in capsys.readouterr().err


def test_bench_deterministic_table(karate_file, capsys):
    args = ["bench", karate_file, "--criteria", "ng,du", "--runs", "2",
            "--seed", "5"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    second = capsys.readouterr().out
    # identical seeds => identical kappa/quality columns (times may differ)
    strip = lambda text: [line.split()[3:] for line in text.splitlines()[1:]]
    assert strip(first) == strip(second)
    assert len(first.splitlines()) == 3


def test_bench_single_run_zero_stddev(karate_file, capsys):
    assert main(["bench", karate_file, "--criteria", "ng",
                 "--runs", "1"]) == 0
    row = capsys.readouterr().out.splitlines()[1].split()
    assert float(row[2]) == 0.0  # time stddev
    assert float(row[4]) == 0.0  # kappa stddev


def test_bench_all_expands_to_experiment_set(karate_file, capsys):
    assert main(["bench", karate_file, "--criteria", "all",
                 "--runs", "1"]) == 0
    out = capsys.readouterr().out
    for cid in ("ng", "zc", "di", "du", "bm", "g", "pd"):
        assert any(line.startswith(cid) for line in out.splitlines())


def test_bench_reports_per_row_errors(tmp_path, capsys):
    graph = tmp_path / "w.edges"
    graph.write_text("a b 2\nb c 1\n")
    assert main(["bench", str(graph), "--criteria", "ng,wc,du",
                 "--runs", "1"]) == 0
    out = capsys.readouterr().out
    lines = out.splitlines()
    assert any(line.startswith("wc") and "error" in line for line in lines)
    assert any(line.startswith("ng") and "error" not in line
               for line in lines)
    assert any(line.startswith("du") and "error" not in line
               for line in lines)


def test_stdin_input(karate_file, capsys, monkeypatch):
    import io as _io
    data = open(karate_file).read()
    monkeypatch.setattr("sys.stdin", _io.StringIO(data))
    rc = main(["detect", "-", "--criterion", "ng", "--seed", "0"])
    assert rc == 0
    out = capsys.readouterr().out
    assert len(out.splitlines()) == 34  # partition on stdout

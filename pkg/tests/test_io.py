"""Edge-list parsing, partition round trips, run summaries."""

import io
import json

import numpy as np
import pytest

from anylouvain import (RunConfig, datasets, detect, read_edge_list,
                        read_partition, relational_total, write_partition)
from anylouvain.errors import NegativeWeight, ParseError, UnknownLabel
from anylouvain.io import write_summary


def parse(text):
    return read_edge_list(io.StringIO(text))


def test_simple_path():
    g, labels = parse("a b\nb c\n")
    assert g.n == 3
    assert g.edge_count == 2
    assert labels == ["a", "b", "c"]


def test_duplicate_edges_summed():
    g, _ = parse("a b 2\na b 3\n")
    assert g.edge_count == 1
    assert g.total_weight == pytest.approx(5.0)


def test_comments_blank_lines_weights():
    g, labels = parse("# header\n\na b 1.5\n  # indented comment\n  \nb b 2\n")
    assert g.n == 2
    assert g.loop[labels.index("b")] == pytest.approx(2.0)
    assert g.consts.two_m == pytest.approx(2 * 1.5 + 2)


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as err:
        parse("a b\nonly-one-token\n")
    assert "line 2" in str(err.value)
    with pytest.raises(ParseError):
        parse("a b notanumber\n")
    with pytest.raises(ParseError):
        parse("a b 1 extra\n")
    with pytest.raises(NegativeWeight):
        parse("a b -2\n")


def test_karate_file_shape():
    g, labels = datasets.karate_club()
    assert (g.n, g.edge_count) == (34, 78)
    assert len(labels) == 34


def test_label_order_independent():
    g1, l1 = parse("a b\nb c\nc a 2\n")
    g2, l2 = parse("c a 2\nb c\na b\n")
    # same multiset of weighted degrees regardless of line order
    assert sorted(g1.degrees) == sorted(g2.degrees)
    assert sorted(l1) == sorted(l2)


def test_partition_round_trip():
    labels = ["n1", "n2", "n3"]
    flat = np.array([1, 0, 1])
    buf = io.StringIO()
    write_partition(buf, flat, labels)
    buf.seek(0)
    back = read_partition(buf, labels)
    assert np.array_equal(back, flat)


def test_partition_round_trip_empty():
    buf = io.StringIO()
    write_partition(buf, np.zeros(0, dtype=int), [])
    assert buf.getvalue() == ""


def test_detected_partition_reevaluates_identically(tmp_path):
    g, labels = datasets.karate_club()
    h = detect(g, RunConfig(criterion="ng", seed=4))
    path = tmp_path / "karate.part"
    write_partition(path, h.flat, labels)
    back = read_partition(path, labels)
    assert relational_total("ng", g, back) == pytest.approx(h.quality)


def test_read_partition_errors():
    labels = ["a", "b"]
    with pytest.raises(UnknownLabel):
        read_partition(io.StringIO("a 0\nzz 1\n"), labels)
    with pytest.raises(UnknownLabel):
        read_partition(io.StringIO("a 0\n"), labels)          # b missing
    with pytest.raises(UnknownLabel):
        read_partition(io.StringIO("a 0\na 1\nb 0\n"), labels)  # a twice
    with pytest.raises(ParseError):
        read_partition(io.StringIO("a 0 9\nb 1\n"), labels)


def test_summary_fields_and_json():
    g, _ = datasets.karate_club()
    cfg = RunConfig(criterion="du", seed=7, precision=5e-3)
    h = detect(g, cfg)
    s = write_summary(h, cfg)
    assert s.criterion == "du"
    assert s.kappa_final == h.kappa_final
    assert s.quality == h.quality
    assert [lv.kappa for lv in s.levels] == [lv.kappa for lv in h.levels]
    assert s.levels[0].n == 34
    assert s.levels[0].m == 78
    qs = [lv.quality for lv in s.levels]
    assert all(b >= a for a, b in zip(qs, qs[1:]))
    blob = json.loads(s.to_json())
    assert blob["criterion"] == "du"
    assert blob["levels"][0]["n"] == 34
    assert "communities" in s.to_text()

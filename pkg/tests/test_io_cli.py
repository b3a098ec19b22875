from __future__ import annotations

import json
import random

import pytest
from faults import random_representation
from hypothesis import given, settings
from hypothesis import strategies as st

from spstring.cli import main
from spstring.construct import construct_representation
from spstring.corpus import cycle, sp_all, sp_random, theta
from spstring.errors import GraphFormatError, RepresentationFormatError
from spstring.geometry import L, ML, GroundedCurve, Representation
from spstring.graph import Graph
from spstring.io import (
    format_graph,
    format_graph_json,
    format_representation,
    parse_graph,
    parse_representation,
    read_representation,
    write_graph,
)
from spstring.oracle import fig5_fixture, oracle_heaviness
from spstring.svg import render_svg

# ---------------------------------------------------------------------------
# graph files
# ---------------------------------------------------------------------------


def test_parse_edge_list_with_comments():
    g = parse_graph("# a triangle\n3 3\n0 1\n1 2 # last edge next\n\n0 2\n")
    assert g == cycle(3)


def test_parse_json_graph():
    assert parse_graph('{"n": 3, "edges": [[0, 1], [1, 2], [2, 0]]}') == cycle(3)


@pytest.mark.parametrize(
    "text, line",
    [
        ("", 1),
        ("3\n", 1),
        ("3 x\n", 1),
        ("3 2\n0 1\n", 2),
        ("3 2\n0 1\n1 9\n", 3),
        ("3 2\n0 1\n1 0\n", 3),
        ("3 2\n0 1\n2 2\n", 3),
        ("3 1\n0 1 2\n", 2),
        ('{"n": 3,\n "edges": [[0, 1],]}', 2),
    ],
)
def test_graph_parse_errors_carry_line(text, line):
    with pytest.raises(GraphFormatError) as info:
        parse_graph(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_json_graph_shape_errors():
    for text in ('{"n": 3}', '{"n": -1, "edges": []}', '{"n": 3, "edges": [[0, 1, 2]]}', "[1, 2]"):
        with pytest.raises(GraphFormatError):
            parse_graph(text)


def test_graph_round_trip_on_corpus():
    for g in sp_all(8) + [theta(4, 4, 2), fig5_fixture(), sp_random(40, 3)]:
        assert parse_graph(format_graph(g)) == g
        assert parse_graph(format_graph_json(g)) == g


# ---------------------------------------------------------------------------
# representation files
# ---------------------------------------------------------------------------


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_representation_round_trip(seed):
    rep = random_representation(random.Random(seed))
    text = format_representation(rep)
    again = parse_representation(text)
    assert again == rep
    assert format_representation(again) == text


def test_representation_round_trip_on_built_output():
    for g in sp_all(8) + [fig5_fixture()]:
        rep = construct_representation(g)
        assert parse_representation(format_representation(rep)) == rep


def test_representation_records():
    rep = Representation.of([GroundedCurve(0, ML, 4, 1, 1), GroundedCurve(1, L, 2, 2, 5, anchor_y=3)])
    data = json.loads(format_representation(rep))
    assert data[0] == {"vertex": 0, "orientation": "ML", "anchor_x": 4, "depth_y": 1, "tip_x": 1}
    assert data[1]["anchor_y"] == 3


@pytest.mark.parametrize(
    "text",
    [
        "{}",
        "[1]",
        '[{"vertex": 0}]',
        '[{"vertex": 0, "orientation": "Z", "anchor_x": 0, "depth_y": 1, "tip_x": 1}]',
        '[{"vertex": 0, "orientation": "L", "anchor_x": 0.5, "depth_y": 1, "tip_x": 1}]',
        '[{"vertex": 0, "orientation": "L", "anchor_x": 0, "depth_y": 1, "tip_x": 1, "color": 1}]',
        '[{"vertex": 0, "orientation": "L", "anchor_x": 0, "depth_y": 1, "tip_x": 1},'
        ' {"vertex": 0, "orientation": "L", "anchor_x": 2, "depth_y": 2, "tip_x": 3}]',
        "[\n{",
    ],
)
def test_bad_representation_files(text):
    with pytest.raises(RepresentationFormatError):
        parse_representation(text)


# ---------------------------------------------------------------------------
# svg
# ---------------------------------------------------------------------------


def test_svg_empty_has_ground_line_only():
    svg = render_svg(Representation.of([]))
    assert svg.count("<line") == 1 and "<polyline" not in svg


def test_svg_two_crossing_curves():
    rep = Representation.of([GroundedCurve(0, L, 1, 2, 4), GroundedCurve(1, L, 3, 5, 6)])
    svg = render_svg(rep, scale=10, mark_crossings=True)
    assert svg.count("<polyline") == 2 and svg.count("<circle") == 1
    assert svg.startswith("<svg") and svg.endswith("</svg>\n")


def test_svg_deterministic_and_scaled():
    rep = construct_representation(fig5_fixture())
    a, b = render_svg(rep), render_svg(rep)
    assert a == b and a.count("<polyline") == 21
    assert 'width="' in render_svg(rep, scale=3)
    assert render_svg(rep, scale=3) != a


# ---------------------------------------------------------------------------
# command line
# ---------------------------------------------------------------------------


@pytest.fixture
def graph_file(tmp_path):
    def make(g: Graph, name: str = "g.txt"):
        p = tmp_path / name
        write_graph(g, p)
        return str(p)

    return make


def test_check_exit_codes(graph_file, capsys):
    assert main(["check", graph_file(theta(4, 4, 2))]) == 0
    assert main(["check", graph_file(theta(4, 4, 4))]) == 1
    out = capsys.readouterr().out
    assert "witness P-node" in out and "poles 0 1" in out
    k4 = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert main(["check", graph_file(k4)]) == 2
    assert "NotSeriesParallel" in capsys.readouterr().out


def test_check_not_biconnected_and_transitive(graph_file, capsys):
    assert main(["check", graph_file(Graph.from_edges(3, [(0, 1), (1, 2)]))]) == 2
    assert "biconnected: no" in capsys.readouterr().out
    assert main(["check", graph_file(Graph.from_edges(5, [(0, 1), (0, 2), (2, 1), (0, 3), (3, 4), (4, 1)]))]) == 2
    assert "transitive edges: 0-1" in capsys.readouterr().out


def test_check_matches_oracle_on_small_corpus(graph_file):
    for g in sp_all(9) + [theta(4, 4, 4), theta(5, 4, 4, 2)]:
        expected = 0 if oracle_heaviness(g, max_n=24).k <= 2 else 1
        assert main(["check", graph_file(g)]) == expected


def test_parse_error_exit_2(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("3 2\n0 1\n")
    assert main(["check", str(p)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_build_verify_pipeline(graph_file, tmp_path, capsys):
    gpath = graph_file(cycle(12))
    rep_path, svg_path = tmp_path / "c.json", tmp_path / "c.svg"
    assert main(["build", gpath, "--out", str(rep_path), "--svg", str(svg_path), "--scale", "8"]) == 0
    assert len(read_representation(rep_path)) == 12
    assert svg_path.read_text().startswith("<svg")
    assert main(["verify", gpath, str(rep_path)]) == 0
    assert "adjacency_ok: yes" in capsys.readouterr().out


def test_build_to_stdout(graph_file, capsys):
    assert main(["build", graph_file(cycle(4))]) == 0
    assert len(parse_representation(capsys.readouterr().out)) == 4


def test_build_too_heavy_writes_nothing(graph_file, tmp_path):
    out = tmp_path / "r.json"
    assert main(["build", graph_file(theta(4, 4, 4)), "--out", str(out)]) == 1
    assert not out.exists()


def test_verify_corrupted_file(graph_file, tmp_path, capsys):
    g = cycle(6)
    rep = construct_representation(g)
    c = next(c for c in rep.curves if c.orientation == L and c.tip_x > c.anchor_x + 1)
    bad = Representation.of([GroundedCurve(x.vertex, x.orientation, x.anchor_x, x.depth_y, x.anchor_x + 1) if x is c else x for x in rep.curves])
    p = tmp_path / "bad.json"
    p.write_text(format_representation(bad))
    assert main(["verify", graph_file(g), str(p)]) == 1
    assert "missing crossings" in capsys.readouterr().out


def test_verify_vertex_mismatch(graph_file, tmp_path):
    p = tmp_path / "r.json"
    p.write_text(format_representation(construct_representation(cycle(4))))
    assert main(["verify", graph_file(cycle(5)), str(p)]) == 2


def test_gen_commands(tmp_path, capsys):
    assert main(["gen", "cycle", "8"]) == 0
    assert parse_graph(capsys.readouterr().out) == cycle(8)
    out = tmp_path / "t.txt"
    assert main(["gen", "theta", "4", "4", "4", "--out", str(out)]) == 0
    assert parse_graph(out.read_text()) == theta(4, 4, 4)
    assert main(["gen", "sp-random", "20", "--seed", "5", "--out", str(out)]) == 0
    assert parse_graph(out.read_text()) == sp_random(20, 5)
    d = tmp_path / "all"
    assert main(["gen", "sp-all", "6", "--out", str(d)]) == 0
    assert len(list(d.iterdir())) == len(sp_all(6))
    assert main(["gen", "cycle"]) == 2


def test_gen_fixture_then_build(tmp_path):
    g, r = tmp_path / "f.txt", tmp_path / "f.json"
    assert main(["gen", "fig5", "--out", str(g)]) == 0
    assert main(["check", str(g)]) == 0
    assert main(["build", str(g), "--out", str(r)]) == 0
    assert main(["verify", str(g), str(r)]) == 0
    assert main(["verify", str(g), str(r), "--mode", "Lonly"]) == 1


def test_bench_and_oracle(graph_file, capsys):
    assert main(["bench", "cycle", "10", "2000", "4000"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].split()[:4] == ["family", "n", "seconds", "ratio"] and len(out) == 4
    assert out[3].split()[3] != "-"
    assert main(["oracle", graph_file(theta(4, 4, 4))]) == 1
    assert main(["oracle", graph_file(cycle(20)), "--max-n", "10"]) == 2

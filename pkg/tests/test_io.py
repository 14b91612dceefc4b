import pytest
from hypothesis import given, settings

from ctm_ramsey.extremal import gen_affine4, gen_ctm_lower_bound
from ctm_ramsey.graph import Color, ColoredGraph, random_coloring, with_random_white
from ctm_ramsey.io import ParseError, parse_graph, parse_witness, render_graph, render_witness
from ctm_ramsey.packing import CtmWitness, make_matching

from conftest import colorings


@settings(max_examples=100)
@given(colorings(min_vertices=1, max_vertices=12))
def test_graph_round_trip(g):
    assert parse_graph(render_graph(g)) == g


@settings(max_examples=50)
@given(colorings(min_vertices=2, max_vertices=8, num_colors=3))
def test_graph_round_trip_white(g):
    assert parse_graph(render_graph(g)) == g


@pytest.mark.parametrize(
    "g",
    [gen_ctm_lower_bound(3), gen_affine4(5), with_random_white(random_coloring(20, 1), 3, 1), random_coloring(1, 0)],
)
def test_generated_round_trip(g):
    text = render_graph(g)
    assert parse_graph(text) == g
    assert render_graph(parse_graph(text)) == text


def test_render_format():
    g = ColoredGraph.from_edges(3, {Color.RED: [(0, 2)]})
    assert render_graph(g) == "ctm-graph v1 3 2\n0 1 B\n0 2 R\n1 2 B\n"
    assert render_graph(gen_affine4(2)).splitlines()[1] == "0 1 1"


def test_witness_round_trip():
    w = CtmWitness(make_matching(Color.BLUE, [(5, 3, 4), (0, 1, 2)]), 0)
    text = render_witness(w)
    assert text == "ctm-witness v1 B 2\n3 4 5\n0 1 2\n"
    assert parse_witness(text).tm == w.tm


@pytest.mark.parametrize(
    "text",
    [
        "",
        "ctm-graph v2 2 2\n0 1 R\n",
        "ctm-graph v1 2 5\n0 1 R\n",
        "ctm-graph v1 3 2\n0 1 R\n0 2 R\n",
        "ctm-graph v1 3 2\n0 1 R\n0 1 R\n1 2 B\n",
        "ctm-graph v1 2 2\n0 1 W\n",
        "ctm-graph v1 2 2\n1 0 R\n",
        "ctm-graph v1 2 2\n0 1\n",
        "ctm-graph v1 2 4\n0 1 R\n",
        "ctm-graph v1 x 2\n",
    ],
)
def test_bad_graphs(text):
    with pytest.raises(ParseError):
        parse_graph(text)


@pytest.mark.parametrize(
    "text",
    ["", "ctm-witness v1 W 1\n0 1 2\n", "ctm-witness v1 R 2\n0 1 2\n", "ctm-witness v1 R 1\n0 1\n", "ctm-witness v1 R 1\na b c\n"],
)
def test_bad_witnesses(text):
    with pytest.raises(ParseError):
        parse_witness(text)

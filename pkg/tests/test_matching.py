import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from ctm_ramsey.graph import Color, ColoredGraph, maximum_matching

from conftest import colorings, graph_from_red
from oracles import brute_max_matching


def _check(g, c, m):
    ends = [v for e in m.edges for v in e]
    assert len(ends) == len(set(ends))
    assert all(g.color(u, v) == c for u, v in m.edges)


def test_empty_color_class():
    g = ColoredGraph.monochromatic(6, Color.BLUE)
    assert len(maximum_matching(g, Color.RED)) == 0


def test_k4_perfect_matching():
    g = ColoredGraph.monochromatic(6, Color.RED)
    m = maximum_matching(g, Color.RED, within=[1, 2, 4, 5])
    assert len(m) == 2 and m.vertices() == {1, 2, 4, 5}


def test_five_cycle():
    g = graph_from_red(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    expected = brute_max_matching(g.table.tolist(), Color.RED)
    assert expected == 2
    assert len(maximum_matching(g, Color.RED)) == expected


def test_odd_cycle_blossom_needed():
    # two triangles joined by a path: greedy warm start can leave an augmenting path through a blossom
    red = [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 6), (6, 7)]
    g = graph_from_red(8, red)
    assert len(maximum_matching(g, Color.RED)) == brute_max_matching(g.table.tolist(), Color.RED) == 4


@settings(max_examples=300)
@given(colorings(max_vertices=10), st.sampled_from([Color.RED, Color.BLUE]))
def test_matches_exhaustive_search(g, c):
    m = maximum_matching(g, c)
    _check(g, c, m)
    assert len(m) == brute_max_matching(g.table.tolist(), c)


@settings(max_examples=100)
@given(colorings(min_vertices=3, max_vertices=10), st.data())
def test_within_restriction(g, data):
    within = data.draw(st.sets(st.integers(0, g.n_vertices - 1)))
    m = maximum_matching(g, Color.RED, within)
    assert m.vertices() <= within
    assert len(m) == brute_max_matching(g.table.tolist(), Color.RED, within)


def test_all_graphs_on_six_vertices():
    pairs = list(itertools.combinations(range(6), 2))
    for mask in range(0, 1 << len(pairs), 7):  # every 7th of the 32768 graphs
        red = [p for i, p in enumerate(pairs) if mask >> i & 1]
        g = graph_from_red(6, red)
        assert len(maximum_matching(g, Color.RED)) == brute_max_matching(g.table.tolist(), Color.RED)

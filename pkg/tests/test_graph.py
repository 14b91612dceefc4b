import numpy as np
import pytest
from hypothesis import given, settings

from ctm_ramsey.errors import PreconditionError
from ctm_ramsey.extremal import gen_ctm_lower_bound
from ctm_ramsey.graph import (
    Color,
    ColoredGraph,
    components,
    random_coloring,
    white_profile,
    with_random_white,
)

from conftest import colorings
from oracles import brute_components


def test_components_all_red_k5():
    g = ColoredGraph.monochromatic(5, Color.RED)
    assert components(g, Color.RED).components == ((0, 1, 2, 3, 4),)
    assert components(g, Color.BLUE).components == ((0,), (1,), (2,), (3,), (4,))


def test_components_lower_bound_n2():
    assert components(gen_ctm_lower_bound(2), Color.RED).sizes() == [5, 5, 1]


@given(colorings(max_vertices=10))
def test_components_match_union_find(g):
    table = g.table.tolist()
    for c in (Color.RED, Color.BLUE):
        got = [list(comp) for comp in components(g, c).components]
        assert got == brute_components(table, c)


@given(colorings(min_vertices=2, max_vertices=10))
def test_one_color_class_is_connected(g):
    assert len(components(g, Color.RED)) == 1 or len(components(g, Color.BLUE)) == 1


@given(colorings(max_vertices=10))
def test_no_edge_between_components(g):
    for c in (Color.RED, Color.BLUE):
        index = components(g, c).index_of()
        assert sorted(index) == list(range(g.n_vertices))
        for u, v in g.edges(c):
            assert index[u] == index[v]


def test_white_profile():
    g = ColoredGraph.monochromatic(4, Color.RED)
    assert white_profile(g).max_white_degree == 0
    one = ColoredGraph.from_edges(4, {Color.WHITE: [(0, 1)]}, default=Color.RED, num_colors=3)
    prof = white_profile(one)
    assert prof.per_vertex == (1, 1, 0, 0) and prof.max_white_degree == 1
    star = ColoredGraph.from_edges(5, {Color.WHITE: [(0, 1), (0, 2), (0, 3)]}, default=Color.BLUE, num_colors=3)
    assert white_profile(star).max_white_degree == 3


def test_validation():
    with pytest.raises(PreconditionError):
        ColoredGraph(np.zeros((2, 3)))
    with pytest.raises(PreconditionError):
        ColoredGraph(np.array([[0, 0], [1, 0]]))
    with pytest.raises(PreconditionError):
        ColoredGraph(np.full((3, 3), 2))  # white in a 2-colored graph
    with pytest.raises(PreconditionError):
        ColoredGraph(np.zeros((4097, 1)))
    with pytest.raises(PreconditionError):
        ColoredGraph.from_edges(3, {0: [(1, 1)]})


def test_graph_is_immutable():
    g = random_coloring(6, 1)
    with pytest.raises(ValueError):
        g.table[0, 1] = 1
    with pytest.raises(ValueError):
        g.mask(Color.RED)[0, 1] = True


def test_random_coloring_is_deterministic():
    assert random_coloring(12, 7) == random_coloring(12, 7)
    assert random_coloring(12, 7) != random_coloring(12, 8)


@settings(max_examples=30)
@given(colorings(min_vertices=4, max_vertices=12))
def test_random_white_respects_degree_bound(g):
    for t in (1, 2, 3):
        h = with_random_white(g, t, seed=t)
        assert white_profile(h).max_white_degree < max(t, 1)
        non_white = h.table != Color.WHITE
        assert np.array_equal(h.table[non_white], g.table[non_white])


def test_induced_relabels_in_order():
    g = gen_ctm_lower_bound(2)
    h = g.induced([0, 5, 10])
    assert h.color(0, 1) == Color.BLUE and h.n_vertices == 3
    assert g.induced([0, 1, 2]).color(0, 2) == Color.RED

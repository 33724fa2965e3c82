import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from properindex import generators as gen
from properindex.basic import (color_by_contraction, color_traceable, color_tree,
                               spanning_tree_coloring)
from properindex.coloring import ColoringError, EdgeColoring, verify_3_proper
from properindex.graph import Graph
from properindex.structure import is_connected
from strategies import graphs


def test_tree_examples():
    c = color_tree(gen.path(4))
    assert c.colors[0] != c.colors[1] != c.colors[2] and c.num_colors == 2
    assert color_tree(gen.star(3)).num_colors == 3


def test_tree_errors():
    with pytest.raises(ColoringError):
        color_tree(gen.cycle(4))
    with pytest.raises(ColoringError):
        color_tree(gen.path(2))


@given(st.integers(0, 10**6), st.integers(3, 14))
def test_tree_coloring_is_proper_with_max_degree_colors(seed, n):
    t = gen.random_tree(n, random.Random(seed))
    c = color_tree(t)
    assert c.num_colors == t.max_degree
    for v in range(n):
        cols = [c.color(v, w) for w in t.neighbors(v)]
        assert len(cols) == len(set(cols))
    assert verify_3_proper(c).ok


@pytest.mark.parametrize("g", [gen.cycle(6), gen.complete(5), gen.path(5)])
def test_traceable_examples(g):
    c = color_traceable(g)
    assert c.palette == [1, 2] and verify_3_proper(c).ok


def test_traceable_rejects_star():
    with pytest.raises(ColoringError):
        color_traceable(gen.star(3))


@given(graphs(min_n=3, max_n=9, connected=True))
def test_spanning_tree_coloring_verifies(g):
    assert verify_3_proper(spanning_tree_coloring(g)).ok


def test_contraction_edge_in_p4():
    g = gen.path(4)
    c = color_by_contraction(g, [1, 2], EdgeColoring(gen.path(2), [1]))
    assert c.num_colors <= 1 + 2 and verify_3_proper(c).ok


def test_contraction_two_k4s():
    blocks = ((0, 1, 2, 3), (0, 4, 5, 6))
    g = Graph(7, [(a, b) for blk in blocks for a in blk for b in blk if a < b])
    k4 = gen.complete(4)
    inner = color_traceable(k4)
    c = color_by_contraction(g, [0, 1, 2, 3], inner)
    assert c.num_colors <= 2 + 3 and verify_3_proper(c).ok


def test_contraction_whole_graph():
    g = gen.complete(4)
    inner = color_traceable(g)
    c = color_by_contraction(g, range(4), inner)
    assert c.num_colors == inner.num_colors and verify_3_proper(c).ok


def test_contraction_errors():
    g = gen.path(5)
    with pytest.raises(ColoringError):
        color_by_contraction(g, [0, 2], EdgeColoring(Graph(2), []))
    k4 = gen.complete(4)
    bad = EdgeColoring(k4, [1] * 6)
    with pytest.raises(ColoringError):
        color_by_contraction(gen.complete(5), [0, 1, 2, 3], bad)  # not 3-proper


@given(graphs(min_n=3, max_n=9, connected=True), st.data())
def test_contraction_bound(g, data):
    # H = a BFS ball, which is connected
    root = data.draw(st.integers(0, g.n - 1))
    size = data.draw(st.integers(1, g.n))
    h, frontier = [root], [root]
    while frontier and len(h) < size:
        nxt = [w for v in frontier for w in g.neighbors(v) if w not in h]
        for w in nxt:
            if w not in h and len(h) < size:
                h.append(w)
        frontier = nxt
    gh, _ = g.induced(h)
    assert is_connected(gh)
    inner = spanning_tree_coloring(gh) if gh.n >= 2 else EdgeColoring(gh, [])
    c = color_by_contraction(g, h, inner)
    assert c.num_colors <= inner.num_colors + g.n - gh.n
    assert verify_3_proper(c).ok

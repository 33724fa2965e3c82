"""Hypothesis strategies for small graphs and colorings."""

import itertools

from hypothesis import strategies as st

from properindex.coloring import EdgeColoring
from properindex.graph import Graph
from properindex.structure import is_connected


@st.composite
def graphs(draw, min_n=1, max_n=7, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    if connected and n > 1:
        # random spanning tree first, then extra edges
        order = draw(st.permutations(range(n)))
        tree = [(order[i], order[draw(st.integers(0, i - 1))]) for i in range(1, n)]
        extra = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs)))
        g = Graph(n, {tuple(sorted(e)) for e in tree + extra})
        assert is_connected(g)
        return g
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, chosen)


@st.composite
def colorings(draw, min_n=3, max_n=6, max_colors=4):
    g = draw(graphs(min_n, max_n, connected=True))
    t = draw(st.integers(1, max_colors))
    cols = draw(st.lists(st.integers(1, t), min_size=g.m, max_size=g.m))
    return EdgeColoring(g, cols)

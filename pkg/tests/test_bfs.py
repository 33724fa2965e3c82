import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from properindex import generators as gen
from properindex.bfs import TYPE_I, TYPE_II, bfs_tree, classify_neighbor
from properindex.graph import Graph
from strategies import graphs


def test_p3_from_middle():
    t = bfs_tree(gen.path(3), 1)
    assert t.first_level == [0, 2]
    assert t.level == {1: 0, 0: 1, 2: 1}
    assert t.is_leaf(0) and t.is_leaf(2)


def test_c4_levels():
    for r in range(4):
        t = bfs_tree(gen.cycle(4), r)
        assert sorted(t.level.values()) == [0, 1, 1, 2]


def test_types_follow_last_first_level_child():
    g = Graph(6, [(0, 1), (0, 2), (1, 3), (2, 4), (4, 5)])
    t = bfs_tree(g, 0)
    assert t.first_level == [1, 2]
    assert t.subtree_type == {1: TYPE_I, 3: TYPE_I, 2: TYPE_II, 4: TYPE_II, 5: TYPE_II}
    assert t.alpha[5] == 2


def test_component_restriction_and_errors():
    g = gen.shared_vertex_cliques(3, [4, 4, 4])
    t = bfs_tree(g, 1, [1, 2, 3])
    assert set(t.level) == {1, 2, 3}
    with pytest.raises(ValueError):
        bfs_tree(g, 0, [1, 2, 3])
    with pytest.raises(ValueError):
        bfs_tree(g, 1, [1, 2, 4])


def test_classify_neighbor():
    g = Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3)])
    t = bfs_tree(g, 0)
    assert classify_neighbor(t, 1, 2) == "same_level"
    assert classify_neighbor(t, 1, 0) == "level_minus_1"
    assert classify_neighbor(t, 1, 3) == "level_plus_1"


def test_dump_rows():
    t = bfs_tree(gen.path(3), 1)
    assert [r["vertex"] for r in t.dump()] == [1, 0, 2]
    assert t.dump()[0]["type"] is None


@given(graphs(min_n=2, max_n=10, connected=True), st.data())
def test_bfs_invariants(g, data):
    root = data.draw(st.integers(0, g.n - 1))
    t = bfs_tree(g, root)
    for v, p in t.parent.items():
        assert g.has_edge(v, p) and t.level[v] == t.level[p] + 1
    for u, v in g.edges:
        assert abs(t.level[u] - t.level[v]) <= 1
    seq = t.vertices
    assert all(t.level[a] <= t.level[b] for a, b in zip(seq, seq[1:]))
    nonroot = [v for v in seq if v != root]
    assert all(t.order[t.parent[a]] <= t.order[t.parent[b]] for a, b in zip(nonroot, nonroot[1:]))
    for v in t.children:
        assert t.children[v] == sorted(t.children[v])
    alphas_ii = {t.alpha[v] for v in nonroot if t.subtree_type[v] == TYPE_II}
    assert len(alphas_ii) <= 1
    if nonroot:
        assert alphas_ii == {t.first_level[-1]}

import itertools
import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from properindex import generators as gen
from properindex.formats import (ParseError, parse_graph, parse_graph6, render_graph,
                                 render_graph6)
from properindex.graph import CapExceeded, Graph, GraphError
from properindex.structure import (cut_vertices, hamiltonian_path, hamiltonian_path_exists,
                                   is_connected, is_tree, is_two_connected,
                                   min_max_degree_spanning_tree)
from strategies import graphs


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


# -- graph ------------------------------------------------------------------------

def test_graph_rejects_self_loop_and_range():
    with pytest.raises(GraphError):
        Graph(2, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(2, [(0, 2)])


def test_graph_rejects_parallel_edges():
    with pytest.raises(GraphError):
        Graph(3, [(2, 0), (0, 2)])


def test_graph_sorts_edges_and_adjacency():
    g = Graph(3, [(2, 0), (1, 0)])
    assert g.edges == ((0, 1), (0, 2))
    assert g.neighbors(0) == (1, 2)
    assert g.degrees() == [2, 1, 1]


@given(graphs(max_n=8))
def test_adjacency_matches_edges(g):
    for v in range(g.n):
        assert list(g.neighbors(v)) == sorted(g.neighbors(v))
        for w in g.neighbors(v):
            assert g.has_edge(v, w) and (min(v, w), max(v, w)) in g.edges
    assert sum(g.degrees()) == 2 * g.m


# -- parsing -------------------------------------------------------------------------

def test_parse_edge_list_path():
    g = parse_graph("3\n0 1\n1 2")
    assert g.n == 3 and set(g.edges) == {(0, 1), (1, 2)}


def test_parse_graph6_k4_matches_networkx():
    g = parse_graph("C~")
    ref = nx.from_graph6_bytes(b"C~")
    assert nx.is_isomorphic(to_nx(g), ref)
    assert g.n == 4 and g.m == 6


def test_parse_self_loop_names_line():
    with pytest.raises(ParseError) as err:
        parse_graph("2\n0 0")
    assert err.value.line == 2


def test_parse_out_of_range_vertex():
    with pytest.raises(ParseError) as err:
        parse_graph("3\n0 1\n1 5\n")
    assert err.value.line == 3


@pytest.mark.parametrize("text", ["", "x\n", "3\n0\n", "3\n0 a\n"])
def test_parse_malformed(text):
    with pytest.raises(ParseError):
        parse_graph(text)


def test_json_roundtrip_and_autodetect():
    g = gen.wheel(5)
    assert parse_graph(render_graph(g, "json")) == g


@given(graphs(max_n=12))
def test_graph6_agrees_with_networkx(g):
    text = render_graph6(g)
    assert text == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert parse_graph6(text) == g


ALL_FAMILIES = [gen.path(5), gen.cycle(4), gen.complete(6), gen.complete_bipartite(3, 4),
                gen.wheel(6), gen.star(4), gen.shared_vertex_cliques(3, [4, 4, 4]),
                gen.join_empty_clique(17, 3), gen.chain_tight(5, 3)]


@pytest.mark.parametrize("g", ALL_FAMILIES)
@pytest.mark.parametrize("fmt", ["el", "g6", "json"])
def test_render_parse_roundtrip(g, fmt):
    assert parse_graph(render_graph(g, fmt), fmt) == g
    assert parse_graph(render_graph(g, fmt)) == g


# -- generators -------------------------------------------------------------------------

def test_shared_vertex_cliques_example():
    g = gen.shared_vertex_cliques(3, [4, 4, 4])
    assert (g.n, g.m, g.min_degree) == (10, 18, 3)
    assert g.degree(0) == 9


@pytest.mark.parametrize("p,sizes", [(3, [4, 4, 4]), (3, [4, 5, 6]), (4, [5, 4, 4, 7])])
def test_shared_vertex_cliques_degrees(p, sizes):
    g = gen.shared_vertex_cliques(p, sizes)
    assert g.n == 1 + sum(s - 1 for s in sizes)
    start = 1
    for s in sizes:
        block = range(start, start + s - 1)
        assert all(g.degree(v) == s - 1 for v in block)
        assert all(g.has_edge(0, v) for v in block)
        start += s - 1


@pytest.mark.parametrize("p,sizes", [(2, [4, 4]), (3, [4, 3, 4]), (3, [4, 4])])
def test_shared_vertex_cliques_rejects(p, sizes):
    with pytest.raises(gen.FamilyError):
        gen.shared_vertex_cliques(p, sizes)


def test_join_empty_clique_example():
    g = gen.join_empty_clique(17, 3)
    assert g.n == 20 and g.m == 17 * 3 + 3
    ref = nx.compose(nx.complete_bipartite_graph(17, 3), nx.complete_graph(range(17, 20)))
    assert nx.is_isomorphic(to_nx(g), ref)


def test_named_families_match_networkx():
    pairs = [(gen.path(6), nx.path_graph(6)), (gen.cycle(4), nx.cycle_graph(4)),
             (gen.complete(5), nx.complete_graph(5)),
             (gen.complete_bipartite(3, 4), nx.complete_bipartite_graph(3, 4)),
             (gen.wheel(5), nx.wheel_graph(6)), (gen.star(4), nx.star_graph(4))]
    for g, ref in pairs:
        assert nx.is_isomorphic(to_nx(g), ref)


def test_generate_dispatch():
    assert gen.generate("cycle", 4) == gen.cycle(4)
    with pytest.raises(gen.FamilyError):
        gen.generate("petersen")


@given(st.integers(0, 10**6), st.integers(4, 14))
def test_threshold_neighborhoods_nest_by_weight(seed, n):
    spec = gen.random_threshold_spec(n, random.Random(seed))
    g = gen.threshold(spec)
    w = spec.weights
    for u, v in itertools.permutations(range(n), 2):
        if u != v and w[u] >= w[v]:
            assert set(g.neighbors(v)) - {u} <= set(g.neighbors(u)) - {v}
    for u, v in itertools.combinations(range(n), 2):
        assert g.has_edge(u, v) == (w[u] + w[v] >= spec.threshold)


@given(st.integers(0, 10**6), st.integers(3, 7), st.integers(3, 7))
def test_chain_spec_nests(seed, s, t):
    spec = gen.random_chain_spec(s, t, random.Random(seed))
    g = gen.chain(spec)
    assert nx.is_bipartite(to_nx(g))
    nbs = [set(g.neighbors(u)) for u in spec.side_u]
    assert all(a <= b for a, b in zip(nbs, nbs[1:]))
    assert g.min_degree >= 3


def test_chain_rejects_non_nested():
    spec = gen.ChainSpec((0, 1), (2, 3), (frozenset({2}), frozenset({3})))
    with pytest.raises(gen.FamilyError):
        gen.chain(spec)


def test_nonisomorphic_tree_counts():
    # counts of unlabeled trees, cross-checked against networkx
    for n in range(1, 11):
        ours = gen.nonisomorphic_trees(n)
        assert len(ours) == sum(1 for _ in nx.nonisomorphic_trees(n)) if n > 1 else len(ours) == 1
        assert all(is_tree(t) for t in ours)


@given(st.integers(0, 10**6), st.integers(2, 12))
def test_random_tree_is_tree(seed, n):
    assert is_tree(gen.random_tree(n, random.Random(seed)))


@given(st.integers(0, 10**6), st.integers(6, 11))
def test_random_nontraceable_is_two_connected(seed, n):
    g = gen.random_two_connected_nontraceable(n, random.Random(seed))
    assert is_two_connected(g) and not hamiltonian_path_exists(g)


# -- structure ----------------------------------------------------------------------------

@pytest.mark.parametrize("g,conn,two", [
    (gen.complete(4), True, True),
    (gen.path(4), True, False),
    (Graph(4, [(0, 1), (2, 3)]), False, False),
])
def test_connectivity_examples(g, conn, two):
    assert is_connected(g) == conn
    assert is_two_connected(g) == two


@given(graphs(max_n=9))
def test_connectivity_agrees_with_networkx(g):
    h = to_nx(g)
    assert is_connected(g) == (g.n > 0 and nx.is_connected(h))
    if g.n >= 3:
        assert is_two_connected(g) == nx.is_biconnected(h)
    if is_connected(g):
        assert sorted(cut_vertices(g)) == sorted(nx.articulation_points(h))


def test_hamiltonian_examples():
    assert hamiltonian_path_exists(gen.complete_bipartite(3, 3))
    assert not hamiltonian_path_exists(gen.star(3))
    assert hamiltonian_path_exists(gen.cycle(5))


def naive_traceable(g):
    return any(all(g.has_edge(a, b) for a, b in zip(p, p[1:]))
               for p in itertools.permutations(range(g.n)))


@given(graphs(min_n=1, max_n=8))
def test_hamiltonian_agrees_with_permutations(g):
    p = hamiltonian_path(g)
    assert (p is not None) == naive_traceable(g)
    if p is not None:
        assert sorted(p) == list(range(g.n))
        assert all(g.has_edge(a, b) for a, b in zip(p, p[1:]))


def test_hamiltonian_cap_refuses():
    with pytest.raises(CapExceeded):
        hamiltonian_path_exists(gen.cycle(21))


def test_min_max_degree_spanning_tree_examples():
    t = min_max_degree_spanning_tree(gen.cycle(7))
    assert is_tree(t) and t.max_degree == 2
    t = min_max_degree_spanning_tree(gen.complete(4))
    assert is_tree(t) and t.max_degree == 2
    star = gen.star(4)
    assert min_max_degree_spanning_tree(star) == star


def brute_min_tree_degree(g):
    best = None
    for es in itertools.combinations(g.edges, g.n - 1):
        t = Graph(g.n, es)
        if is_tree(t):
            best = t.max_degree if best is None else min(best, t.max_degree)
    return best


@given(graphs(min_n=2, max_n=7, connected=True))
def test_min_max_degree_tree_is_optimal_on_small_graphs(g):
    t = min_max_degree_spanning_tree(g)
    assert is_tree(t) and set(t.edges) <= set(g.edges)
    assert t.max_degree == brute_min_tree_degree(g)


def test_min_max_degree_tree_rejects_disconnected():
    with pytest.raises(ValueError):
        min_max_degree_spanning_tree(Graph(4, [(0, 1), (2, 3)]))

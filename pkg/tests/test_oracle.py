import itertools
import random

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from properindex import generators as gen
from properindex.coloring import EdgeColoring, verify_3_proper
from properindex.graph import CapExceeded, Graph
from properindex.oracle import px3_exact, px3_lower_bound_refute
from properindex.structure import hamiltonian_path_exists, min_max_degree_spanning_tree
from strategies import graphs


def naive_px3(g):
    """Smallest t for which some coloring in {1..t}^E verifies (no symmetry breaking)."""
    for t in itertools.count(1):
        for cols in itertools.product(range(1, t + 1), repeat=g.m):
            if verify_3_proper(EdgeColoring(g, cols)).ok:
                return t


def test_k4():
    assert px3_exact(gen.complete(4)).value == 2


def test_star():
    r = px3_exact(gen.star(3))
    assert r.value == 3 and r.refuted_palette == 2


def test_shared_vertex_cliques():
    r = px3_exact(gen.shared_vertex_cliques(3, [4, 4, 4]))
    assert r.value == 3
    assert verify_3_proper(r.witness_coloring).ok


def test_refute_shared_vertex_cliques_exhaustive():
    r = px3_lower_bound_refute(gen.shared_vertex_cliques(3, [4, 4, 4]), 2)
    assert r.exhaustive and r.proved_ge and r.checked == 2 ** 17


def test_refute_join_sampled():
    r = px3_lower_bound_refute(gen.join_empty_clique(17, 3), 2, budget=100, seed=1)
    assert not r.exhaustive and r.sampled_failures == 100


def test_refute_c6_fails():
    r = px3_lower_bound_refute(gen.cycle(6), 2)
    assert r.exhaustive and not r.proved_ge


def test_cap_refusal_and_errors():
    with pytest.raises(CapExceeded):
        px3_exact(gen.complete(7))
    with pytest.raises(ValueError):
        px3_exact(Graph(4, [(0, 1), (2, 3)]))
    with pytest.raises(ValueError):
        px3_exact(gen.path(2))


@settings(max_examples=25)
@given(graphs(min_n=3, max_n=5, connected=True))
def test_matches_naive_enumeration(g):
    assume(g.m <= 7)
    assert px3_exact(g).value == naive_px3(g)


@given(graphs(min_n=3, max_n=7, connected=True))
def test_result_invariants(g):
    r = px3_exact(g, cap_edges=21)
    assert verify_3_proper(r.witness_coloring).ok
    assert r.witness_coloring.num_colors == r.value
    assert 2 <= r.value <= min_max_degree_spanning_tree(g).max_degree
    assert r.refuted_palette == r.value - 1
    if hamiltonian_path_exists(g):
        assert r.value == 2


@given(st.integers(0, 10**6), st.integers(3, 8))
def test_tree_value_is_max_degree(seed, n):
    t = gen.random_tree(n, random.Random(seed))
    assert px3_exact(t).value == t.max_degree


@given(graphs(min_n=4, max_n=7, connected=True), st.integers(0, 10**6))
def test_monotone_under_spanning_subgraphs(g, seed):
    h = gen.random_connected_spanning_subgraph(g, random.Random(seed), keep=0.4)
    assert px3_exact(g, cap_edges=21).value <= px3_exact(h, cap_edges=21).value


def test_backends_agree_on_values(backend):
    for g in (gen.star(4), gen.cycle(6), gen.wheel(5), gen.complete_bipartite(2, 4)):
        assert px3_exact(g, backend=backend).value == px3_exact(g).value

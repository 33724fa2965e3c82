import itertools

import networkx as nx
import pytest
from hypothesis import given

from properindex import generators as gen
from properindex.domination import (find_connected_s_dominating_set, gamma_c_exact,
                                    greedy_connected_dominating_set,
                                    min_connected_dominating_set, verify_dominating)
from properindex.graph import CapExceeded
from properindex.structure import is_connected
from strategies import graphs


def brute_min_cds(g, s=None):
    """Smallest connected (s-)dominating set by plain subset enumeration."""
    for k in range(1, g.n + 1):
        for D in itertools.combinations(range(g.n), k):
            Ds = set(D)
            if not is_connected(g, Ds):
                continue
            need = 1 if s is None else s
            if all(len(Ds & set(g.neighbors(v))) >= need for v in range(g.n) if v not in Ds):
                return Ds
    return None


def test_k4_single_vertex():
    c = verify_dominating(gen.complete(4), {0}, 3)
    assert c.dominating and c.connected and c.s_way and not c.s_dominating


def test_shared_cliques_v0():
    assert verify_dominating(gen.shared_vertex_cliques(3, [4, 4, 4]), {0}, 3).connected_s_way


def test_c6_not_dominating():
    assert not verify_dominating(gen.cycle(6), {0, 1}, 3).dominating


def test_greedy_examples():
    assert greedy_connected_dominating_set(gen.star(4)) == {0}
    assert greedy_connected_dominating_set(gen.path(5)) == {1, 2, 3}


@given(graphs(min_n=2, max_n=8, connected=True))
def test_greedy_is_cds_and_not_below_minimum(g):
    D = greedy_connected_dominating_set(g)
    c = verify_dominating(g, D, 1)
    assert c.dominating and c.connected
    assert len(D) >= gamma_c_exact(g)


def test_gamma_c_examples():
    assert gamma_c_exact(gen.star(5)) == 1
    assert gamma_c_exact(gen.cycle(6)) == 4
    assert gamma_c_exact(gen.complete_bipartite(3, 3)) == 2


def test_gamma_c_cap():
    with pytest.raises(CapExceeded):
        gamma_c_exact(gen.path(13))


@given(graphs(min_n=2, max_n=8, connected=True))
def test_gamma_c_matches_networkx_bruteforce(g):
    h = nx.Graph(list(g.edges))
    h.add_nodes_from(range(g.n))
    best = min(k for k in range(1, g.n + 1) for D in itertools.combinations(range(g.n), k)
               if nx.is_dominating_set(h, D) and nx.is_connected(h.subgraph(D)))
    assert gamma_c_exact(g) == best
    D = min_connected_dominating_set(g)
    assert len(D) == best and verify_dominating(g, D, 1).connected


def test_threshold_top_three():
    import random
    spec = gen.random_threshold_spec(9, random.Random(3))
    g = gen.threshold(spec)
    D = find_connected_s_dominating_set(g, 3)
    assert D is not None and len(D) == 3
    assert verify_dominating(g, D, 3).connected_s_dominating


def test_chain_tight_needs_six():
    g = gen.chain_tight(6, 3)
    D = find_connected_s_dominating_set(g, 3)
    assert verify_dominating(g, D, 3).connected_s_dominating
    assert len(D) == len(brute_min_cds(g, 3))


def test_c5_vacuous_whole_set():
    D = find_connected_s_dominating_set(gen.cycle(5), 3, cap=5)
    assert D == set(range(5))
    assert find_connected_s_dominating_set(gen.cycle(5), 3, cap=4) is None


@given(graphs(min_n=2, max_n=8, connected=True))
def test_s_dominating_search_is_minimal(g):
    D = find_connected_s_dominating_set(g, 3)
    ref = brute_min_cds(g, 3)
    assert (D is None) == (ref is None)
    if D is not None:
        assert len(D) == len(ref)
        assert verify_dominating(g, D, 3).connected_s_dominating


@given(graphs(min_n=1, max_n=8))
def test_s_dominating_implies_s_way(g):
    for D in itertools.combinations(range(g.n), min(3, g.n)):
        c = verify_dominating(g, D, 3)
        if c.s_dominating:
            assert c.s_way

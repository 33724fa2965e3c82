import random
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from properindex import generators as gen
from properindex.coloring import verify_3_proper
from properindex.ears import (Ear, EarDecomposition, EarError, color_ear, color_ear_detailed,
                              even_cycle, nonincreasing_ear_decomposition,
                              validate_decomposition)
from properindex.graph import CapExceeded, Graph


def is_cycle_in(g, cyc):
    return len(set(cyc)) == len(cyc) and all(
        g.has_edge(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1]))


def theta(*lengths):
    """Two hubs 0 and 1 joined by internally disjoint paths of the given lengths."""
    edges, nxt = [], 2
    for ln in lengths:
        prev = 0
        for _ in range(ln - 1):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
        edges.append((prev, 1))
    return Graph(nxt, edges)


def test_even_cycle_examples():
    c = even_cycle(gen.cycle(6))
    assert sorted(c) == list(range(6))
    c = even_cycle(gen.complete(4))
    assert len(c) == 4 and is_cycle_in(gen.complete(4), c)
    g = Graph(5, list(gen.cycle(5).edges) + [(0, 2)])
    c = even_cycle(g)
    assert len(c) == 4 and is_cycle_in(g, c) and {0, 2} <= set(c)


def test_even_cycle_errors():
    with pytest.raises(EarError):
        even_cycle(gen.cycle(5))
    with pytest.raises(EarError):
        even_cycle(gen.path(5))


@given(st.integers(0, 10**6), st.integers(4, 12))
def test_even_cycle_random(seed, n):
    rng = random.Random(seed)
    g = gen.random_connected(n, rng, p=0.5, min_degree=2)
    from properindex.structure import is_two_connected
    if not is_two_connected(g) or (g.m == g.n and n % 2):
        return
    c = even_cycle(g)
    assert len(c) % 2 == 0 and is_cycle_in(g, c)


def test_theta_decomposition_shape():
    g = theta(2, 2, 2)
    dec = nonincreasing_ear_decomposition(g)
    assert len(dec.cycle) == 4 and dec.lengths == [2] and dec.t == 1
    assert validate_decomposition(g, dec) == []


def test_cap_refusal():
    with pytest.raises(CapExceeded):
        nonincreasing_ear_decomposition(gen.cycle(18))


def test_validator_catches_problems():
    g = gen.complete_bipartite(2, 5)
    dec = nonincreasing_ear_decomposition(g)
    assert validate_decomposition(g, dec) == []
    short = EarDecomposition(dec.cycle, dec.ears[:-1])
    assert "decomposition does not cover every edge" in validate_decomposition(g, short)
    odd = EarDecomposition(dec.cycle[:3], dec.ears)
    assert validate_decomposition(g, odd)
    g2 = theta(2, 2, 4, 2)
    dec2 = nonincreasing_ear_decomposition(g2)
    assert validate_decomposition(g2, dec2) == []
    assert dec2.lengths == [4, 2]
    swapped = EarDecomposition(dec2.cycle, dec2.ears[::-1])
    assert "ear lengths increase" in validate_decomposition(g2, swapped)


def test_traceable_gets_two_colors():
    for g in (gen.cycle(6), gen.complete(5), gen.wheel(5), theta(2, 2, 2)):
        r = color_ear_detailed(g)
        assert r.decomposition is None and r.coloring.num_colors == 2
        assert verify_3_proper(r.coloring).ok


@pytest.mark.parametrize("r", [4, 5, 6, 7, 8])
def test_equality_case_k2r(r):
    g = gen.complete_bipartite(2, r)
    res = color_ear_detailed(g)
    dec = res.decomposition
    assert len(dec.cycle) == 4 and all(x == 2 for x in dec.lengths[:res.t])
    assert res.coloring.num_colors == g.n // 2 == res.expected_colors
    assert verify_3_proper(res.coloring).ok


def test_ear_coloring_structure():
    g = theta(4, 4, 3, 3, 2)  # non-traceable
    res = color_ear_detailed(g)
    c = res.coloring
    dec = res.decomposition
    for i in range(2, res.t + 1):
        ear = dec.ears[i - 1]
        ends = {c.color(*e) for e in ear.end_edges}
        assert ends == {i // 2 + 2}
        inner = [c.color(*e) for e in ear.internal_edges]
        assert all(a != b for a, b in zip(inner, inner[1:]))
    assert verify_3_proper(c).ok


def test_rejects_non_two_connected():
    with pytest.raises(EarError):
        color_ear(gen.star(4))


@settings(max_examples=40)
@given(st.integers(0, 10**6), st.integers(6, 12))
def test_random_nontraceable(seed, n):
    g = gen.random_two_connected_nontraceable(n, random.Random(seed))
    res = color_ear_detailed(g)
    dec = res.decomposition
    assert dec is not None and res.t >= 2
    assert validate_decomposition(g, dec) == []
    k = res.coloring.num_colors
    assert k == -(-(res.t + 3) // 2) <= n // 2
    assert len(dec.cycle) + sum(x - 1 for x in dec.lengths[:res.t]) == n
    assert verify_3_proper(res.coloring).ok


def test_decomposition_json():
    dec = nonincreasing_ear_decomposition(gen.complete_bipartite(2, 4))
    obj = dec.to_json()
    assert obj["t"] == dec.t and len(obj["ears"]) == len(dec.ears)
    assert Ear((0, 5, 1)).internal == (5,)

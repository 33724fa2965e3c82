"""The acceptance battery, shared by the test suite and ``properindex suite``.

Each ``criterion_*`` function returns a :class:`CriterionResult`; ``scale``
below 1 shrinks the random sweeps for a quick smoke run.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from . import generators as gen
from .coloring import EdgeColoring, proper_s_tree, verify_3_proper
from .domination import (gamma_c_exact, greedy_connected_dominating_set,
                         min_connected_dominating_set, verify_dominating)
from .ears import color_ear_detailed, validate_decomposition
from .graph import Graph
from .oracle import px3_exact, px3_lower_bound_refute
from .three_dom import (chain_dominating_set, color_three_dom, recognize_chain,
                        recognize_threshold, threshold_dominating_set)
from .three_way import color_three_way, witness_triple


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0
    failures: list = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"criterion {self.number} [{status}] {self.name}: {self.detail} ({self.seconds:.1f}s)"


def _timed(number, name, fn, limit):
    t0 = time.perf_counter()
    passed, detail, failures = fn()
    secs = time.perf_counter() - t0
    if secs > limit:
        passed = False
        detail += f"; exceeded time limit {limit}s"
    return CriterionResult(number, name, passed, detail, secs, failures[:10])


def _n(count, scale):
    return max(1, int(round(count * scale)))


# -- 1 ----------------------------------------------------------------------------

def criterion_1(backend=None) -> CriterionResult:
    def run():
        bad = []
        cases = 0
        for n in range(4, 8):
            for name, g in (("P", gen.path(n)), ("C", gen.cycle(n)), ("W", gen.wheel(n)),
                            ("K", gen.complete(n)), ("Knn", gen.complete_bipartite(n, n))):
                cases += 1
                r = px3_exact(g, cap_edges=g.m, backend=backend)
                if r.value != 2 or not verify_3_proper(r.witness_coloring, backend).ok:
                    bad.append(f"{name}{n}: {r.value}")
        return not bad, f"{cases - len(bad)}/{cases} families give px3=2", bad

    return _timed(1, "named families have px3 = 2", run, 60)


# -- 2 ----------------------------------------------------------------------------

def criterion_2(backend=None) -> CriterionResult:
    def run():
        bad = []
        count = 0
        for n in range(4, 9):
            for t in gen.nonisomorphic_trees(n):
                count += 1
                if px3_exact(t, backend=backend).value != t.max_degree:
                    bad.append(t.edges)
        return not bad, f"{count - len(bad)}/{count} non-isomorphic trees (n=4..8) match max degree", bad

    return _timed(2, "px3 of a tree is its max degree", run, 300)


# -- 3 ----------------------------------------------------------------------------

def criterion_3(backend=None) -> CriterionResult:
    def run():
        g = gen.shared_vertex_cliques(3, [4, 4, 4])
        tr = color_three_way(g, {0})
        colors = tr.coloring.num_colors
        ok_color = colors == 3 and verify_3_proper(tr.coloring, backend).ok
        ref = px3_lower_bound_refute(g, 2, backend=backend)
        ok_ref = ref.exhaustive and ref.proved_ge and ref.checked == 2 ** (g.m - 1)
        detail = (f"construction uses {colors} colors (verified={ok_color}); "
                  f"{ref.checked} canonical 2-colorings of {g.m} edges all fail={ref.proved_ge}")
        return ok_color and ok_ref, detail, [] if ok_color and ok_ref else [detail]

    return _timed(3, "three-way bound is tight on shared-vertex cliques", run, 600)


# -- 4 and 5 ----------------------------------------------------------------------

def delta3_sweep(count: int, seed: int = 2024, n_max: int = 10) -> list[Graph]:
    """Random connected graphs with minimum degree >= 3 and n <= n_max."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(5, n_max)
        pick = len(out) % 3
        try:
            if pick == 0:
                g = gen.random_regular(n - n % 2, 3, rng)
            elif pick == 1:
                g = gen.random_connected(n, rng, p=rng.uniform(0.35, 0.55), min_degree=3)
            else:
                g = gen.random_connected(n, rng, p=rng.uniform(0.55, 0.85), min_degree=3)
        except gen.FamilyError:
            continue
        out.append(g)
    return out


def criterion_4(scale: float = 1.0, backend=None) -> CriterionResult:
    def run():
        graphs = delta3_sweep(_n(120, scale))
        bad = []
        for g in graphs:
            D = greedy_connected_dominating_set(g)
            if not verify_dominating(g, D, 3).connected_s_way:
                bad.append((g.edges, "greedy set is not 3-way"))
                continue
            tr = color_three_way(g, D)
            c = tr.coloring
            ok = verify_3_proper(c, backend).ok and c.num_colors <= tr.inner_colors + 3
            for v in range(g.n):
                if v not in tr.D:
                    witness_triple(tr, v)
            if not ok:
                bad.append((g.edges, sorted(D)))
        return not bad, f"{len(graphs) - len(bad)}/{len(graphs)} graphs verified", bad

    return _timed(4, "three-way construction is sound on random graphs", run, 600)


def criterion_5(scale: float = 1.0, backend=None) -> CriterionResult:
    def run():
        graphs = delta3_sweep(_n(120, scale))
        bad = []
        for g in graphs:
            gc = gamma_c_exact(g)
            D = min_connected_dominating_set(g)
            tr = color_three_way(g, D, "spanning_tree_delta")
            c = tr.coloring
            if (tr.inner_colors > len(D) - 1 or c.num_colors > gc + 2
                    or not verify_3_proper(c, backend).ok):
                bad.append((g.edges, gc, c.num_colors))
        return not bad, f"{len(graphs) - len(bad)}/{len(graphs)} within gamma_c + 2", bad

    return _timed(5, "colors stay within gamma_c + 2", run, 600)


# -- 6 ----------------------------------------------------------------------------

def criterion_6(scale: float = 1.0, seed: int = 7, backend=None) -> CriterionResult:
    def run():
        rng = random.Random(seed)
        bad = []
        k = _n(60, scale)
        for _ in range(k):
            n = rng.randint(4, 14)
            g = gen.threshold(gen.random_threshold_spec(n, rng))
            spec = recognize_threshold(g)
            res = color_three_dom(g, threshold_dominating_set(spec))
            if res.coloring.num_colors > 3 or not verify_3_proper(res.coloring, backend).ok:
                bad.append(("threshold", g.edges))
        for _ in range(k):
            s = rng.randint(3, 8)
            t = rng.randint(3, 14 - s)
            g = gen.chain(gen.random_chain_spec(s, t, rng))
            spec = recognize_chain(g)
            res = color_three_dom(g, chain_dominating_set(spec))
            if res.coloring.num_colors > 3 or not verify_3_proper(res.coloring, backend).ok:
                bad.append(("chain", g.edges))
        big = gen.join_empty_clique(17, 3)
        res = color_three_dom(big, threshold_dominating_set(recognize_threshold(big)))
        ok_big = res.coloring.num_colors == 3 and verify_3_proper(res.coloring, backend).ok
        ref = px3_lower_bound_refute(big, 2, budget=100, seed=seed, backend=backend)
        if not ok_big:
            bad.append("rK1+K3 construction")
        if ref.sampled_failures != 100:
            bad.append(f"only {ref.sampled_failures}/100 random 2-colorings failed")
        detail = (f"{2 * k} threshold/chain graphs colored; r=17 join: 3 colors verified={ok_big}, "
                  f"{ref.sampled_failures}/100 sampled 2-colorings fail (sampling, not a proof)")
        return not bad, detail, bad

    return _timed(6, "threshold and chain graphs need at most 3 colors", run, 900)


# -- 7 ----------------------------------------------------------------------------

def criterion_7(scale: float = 1.0, seed: int = 11, backend=None) -> CriterionResult:
    def run():
        rng = random.Random(seed)
        bad = []
        k = _n(60, scale)
        ts = []
        for _ in range(k):
            n = rng.randint(6, 12)
            g = gen.random_two_connected_nontraceable(n, rng)
            r = color_ear_detailed(g)
            probs = validate_decomposition(g, r.decomposition)
            nc = r.coloring.num_colors
            ts.append(r.t)
            if (probs or nc != -(-(r.t + 3) // 2) or nc > n // 2
                    or not verify_3_proper(r.coloring, backend).ok):
                bad.append((g.edges, probs, nc))
        return not bad, f"{k - len(bad)}/{k} graphs verified, t in {sorted(set(ts))}", bad

    return _timed(7, "ear coloring of 2-connected non-traceable graphs", run, 900)


# -- 8 ----------------------------------------------------------------------------

def brute_force_tree_triples(c: EdgeColoring) -> set:
    """Triples spanned by some proper tree, by enumerating every proper forest."""
    g = c.graph
    edges = list(g.edges)
    cols = c.colors
    m = len(edges)
    comps: set = set()
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    used = {}

    def record():
        groups: dict = {}
        for v in range(g.n):
            groups.setdefault(find(v), []).append(v)
        for vs in groups.values():
            if len(vs) >= 3:
                comps.add(frozenset(vs))

    def rec(i):
        if i == m:
            record()
            return
        rec(i + 1)
        u, v = edges[i]
        col = cols[i]
        if (u, col) in used or (v, col) in used:
            return
        ru, rv = find(u), find(v)
        if ru == rv:
            return
        parent[ru] = rv
        used[(u, col)] = used[(v, col)] = True
        rec(i + 1)
        del used[(u, col)], used[(v, col)]
        parent[ru] = ru

    rec(0)
    out = set()
    for s in comps:
        out.update(itertools.combinations(sorted(s), 3))
    return out


def criterion_8(scale: float = 1.0, seed: int = 5, backend=None) -> CriterionResult:
    def run():
        rng = random.Random(seed)
        bad = []
        k = _n(500, scale)
        for _ in range(k):
            n = rng.randint(3, 6)
            g = gen.random_connected(n, rng, p=rng.uniform(0.3, 0.9))
            t = rng.randint(1, 4)
            c = EdgeColoring(g, [rng.randint(1, t) for _ in range(g.m)])
            brute = brute_force_tree_triples(c)
            for s in itertools.combinations(range(n), 3):
                fast = proper_s_tree(c, s, backend) is not None
                if fast != (s in brute):
                    bad.append((g.edges, c.colors, s))
        pairs = _n(100, scale)
        mono_bad = 0
        for _ in range(pairs):
            n = rng.randint(4, 7)
            G = gen.random_connected(n, rng, p=rng.uniform(0.4, 0.9))
            H = gen.random_connected_spanning_subgraph(G, rng, keep=rng.uniform(0.2, 0.8))
            a = px3_exact(G, cap_edges=G.m, backend=backend).value
            b = px3_exact(H, cap_edges=H.m, backend=backend).value
            if a > b:
                mono_bad += 1
                bad.append(("monotonicity", G.edges, H.edges, a, b))
        detail = (f"{k} colorings cross-checked against proper-forest enumeration; "
                  f"{pairs - mono_bad}/{pairs} spanning-subgraph pairs monotone")
        return not bad, detail, bad

    return _timed(8, "tree search and monotonicity cross-checks", run, 900)


ALL = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
       criterion_7, criterion_8)


def run_all(scale: float = 1.0, backend=None) -> list[CriterionResult]:
    out = []
    for fn in ALL:
        if fn in (criterion_1, criterion_2, criterion_3):
            out.append(fn(backend=backend))
        else:
            out.append(fn(scale=scale, backend=backend))
    return out

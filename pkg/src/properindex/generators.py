"""Named graph families and seeded random generators.

Numbering conventions (relied on by callers and tests):

* ``wheel(n)``: hub 0, rim ``1..n`` in cyclic order (``n + 1`` vertices).
* ``star(k)``: center 0, leaves ``1..k``.
* ``complete_bipartite(a, b)``: sides ``0..a-1`` and ``a..a+b-1``.
* ``shared_vertex_cliques(p, sizes)``: the shared vertex is 0; clique ``j``
  uses 0 plus the next ``sizes[j] - 1`` ids.
* ``join_empty_clique(r, q)``: the independent set is ``0..r-1``, the clique
  ``r..r+q-1``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .graph import Graph


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class ThresholdSpec:
    """``uv`` is an edge iff ``weights[u] + weights[v] >= threshold``."""

    weights: tuple
    threshold: float


@dataclass(frozen=True)
class ChainSpec:
    """Bipartite graph with ``N(side_u[0]) ⊆ N(side_u[1]) ⊆ ...``.

    ``neighborhoods[i]`` is the neighbor set of ``side_u[i]`` (a subset of ``side_v``).
    """

    side_u: tuple
    side_v: tuple
    neighborhoods: tuple


def path(n: int) -> Graph:
    if n < 1:
        raise FamilyError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise FamilyError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise FamilyError("complete graph needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise FamilyError("complete bipartite graph needs both sides non-empty")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def wheel(n: int) -> Graph:
    if n < 3:
        raise FamilyError("wheel needs a rim of at least 3 vertices")
    rim = [(i, i % n + 1) for i in range(1, n + 1)]
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)] + rim)


def star(k: int) -> Graph:
    if k < 1:
        raise FamilyError("star needs at least one leaf")
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def threshold(spec: ThresholdSpec) -> Graph:
    w = spec.weights
    edges = [(u, v) for u, v in combinations(range(len(w)), 2) if w[u] + w[v] >= spec.threshold]
    return Graph(len(w), edges)


def chain(spec: ChainSpec) -> Graph:
    u_side, v_side = list(spec.side_u), list(spec.side_v)
    n = len(u_side) + len(v_side)
    if sorted(u_side + v_side) != list(range(n)):
        raise FamilyError("chain sides must partition 0..n-1")
    if len(spec.neighborhoods) != len(u_side):
        raise FamilyError("one neighborhood per U vertex")
    vset = set(v_side)
    prev: set = set()
    edges = []
    for u, nb in zip(u_side, spec.neighborhoods):
        nb = set(nb)
        if not nb <= vset:
            raise FamilyError("neighborhoods must lie in side_v")
        if not prev <= nb:
            raise FamilyError("neighborhoods must be nested")
        prev = nb
        edges += [(u, v) for v in nb]
    return Graph(n, edges)


def shared_vertex_cliques(p: int, sizes: Sequence[int]) -> Graph:
    """``p`` complete graphs with exactly one common vertex (vertex 0)."""
    if p < 3 or len(sizes) != p:
        raise FamilyError("need p >= 3 clique sizes")
    if any(s < 4 for s in sizes):
        raise FamilyError("every clique needs at least 4 vertices")
    edges = []
    nxt = 1
    for s in sizes:
        members = [0] + list(range(nxt, nxt + s - 1))
        nxt += s - 1
        edges += combinations(members, 2)
    return Graph(nxt, edges)


def join_empty_clique(r: int, q: int) -> Graph:
    """``rK_1 ∨ K_q``."""
    if r < 1 or q < 1:
        raise FamilyError("join needs r >= 1 and q >= 1")
    clique = range(r, r + q)
    edges = [(i, j) for i in range(r) for j in clique] + list(combinations(clique, 2))
    return Graph(r + q, edges)


def chain_tight(s: int, t: int) -> Graph:
    """Chain graph with ``N(u_1) = ... = N(u_{s-3}) = {v_1, v_2, v_3}`` and the last
    three ``u`` adjacent to all of ``V``.  ``U = 0..s-1``, ``V = s..s+t-1``."""
    if s < 4 or t < 3:
        raise FamilyError("need s >= 4 and t >= 3")
    v_side = tuple(range(s, s + t))
    nbs = tuple(frozenset(v_side[:3]) for _ in range(s - 3)) + (frozenset(v_side),) * 3
    return chain(ChainSpec(tuple(range(s)), v_side, nbs))


FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "wheel": wheel,
    "star": star,
    "threshold": threshold,
    "chain": chain,
    "shared_vertex_cliques": shared_vertex_cliques,
    "join_empty_clique": join_empty_clique,
    "chain_tight": chain_tight,
}


def generate(family: str, *args, **kwargs) -> Graph:
    try:
        fn = FAMILIES[family]
    except KeyError:
        raise FamilyError(f"unknown family {family!r}") from None
    return fn(*args, **kwargs)


# -- random families ---------------------------------------------------------------

def _relabel(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labelled tree via a Prüfer sequence."""
    if n <= 2:
        return path(n)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [i for i in range(n) if degree[i] == 1]
    edges.append((u, v))
    return Graph(n, edges)


def random_connected(n: int, rng: random.Random, p: float = 0.5, min_degree: int = 0,
                     tries: int = 10000) -> Graph:
    from .structure import is_connected

    for _ in range(tries):
        g = Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])
        if is_connected(g) and g.min_degree >= min_degree:
            return g
    raise FamilyError(f"no connected G({n}, {p}) with min degree {min_degree} found")


def random_regular(n: int, d: int, rng: random.Random, tries: int = 10000) -> Graph:
    """Random connected simple ``d``-regular graph by repeated pairing."""
    from .structure import is_connected

    if n * d % 2 or d >= n:
        raise FamilyError("no such regular graph")
    for _ in range(tries):
        stubs = [v for v in range(n) for _ in range(d)]
        rng.shuffle(stubs)
        pairs = {(min(a, b), max(a, b)) for a, b in zip(stubs[::2], stubs[1::2])}
        if len(pairs) == n * d // 2 and all(a != b for a, b in pairs):
            g = Graph(n, pairs)
            if is_connected(g):
                return g
    raise FamilyError("pairing failed")


def random_threshold_spec(n: int, rng: random.Random, min_degree: int = 3) -> ThresholdSpec:
    """Random threshold graph given by a creation sequence.

    Vertex ``i`` is added isolated (weight ``-i``) or dominating (weight ``+i``);
    threshold 1.  The last ``min_degree`` additions are dominating, so the
    minimum degree is at least ``min_degree``.
    """
    if n < min_degree + 1:
        raise FamilyError("too few vertices for the requested minimum degree")
    weights = [0] * n
    order = list(range(n))
    rng.shuffle(order)
    for step, v in enumerate(order):
        if step == 0:
            weights[v] = 0
            continue
        dominating = step >= n - min_degree or rng.random() < 0.5
        weights[v] = step if dominating else -step
    return ThresholdSpec(tuple(weights), 1)


def random_chain_spec(s: int, t: int, rng: random.Random, min_degree: int = 3) -> ChainSpec:
    """Random connected chain graph with minimum degree at least ``min_degree``.

    ``U = 0..s-1`` in nesting order, ``V = s..s+t-1``; each ``v`` enters the
    neighborhoods at a random index no later than ``s - min_degree`` and at
    least ``min_degree`` of them are in ``N(u_1)``.
    """
    if s < min_degree or t < min_degree:
        raise FamilyError("sides too small for the requested minimum degree")
    v_side = list(range(s, s + t))
    entry = {}
    early = set(rng.sample(v_side, min_degree))
    for v in v_side:
        entry[v] = 0 if v in early else rng.randrange(0, s - min_degree + 1)
    nbs = tuple(frozenset(v for v in v_side if entry[v] <= i) for i in range(s))
    return ChainSpec(tuple(range(s)), tuple(v_side), nbs)


def random_two_connected_nontraceable(n: int, rng: random.Random, extra: float = 0.15,
                                      tries: int = 1000) -> Graph:
    """Random 2-connected graph on ``n`` vertices with no Hamiltonian path.

    Built from a generalized theta graph (two hubs joined by at least four
    internally disjoint paths), sprinkled with chords, relabelled at random,
    and filtered by an exact traceability check.
    """
    from .structure import hamiltonian_path_exists, is_two_connected

    if n < 6:
        raise FamilyError("need n >= 6")
    for _ in range(tries):
        k = rng.randint(4, max(4, min(n - 2, 6)))
        interior = n - 2
        if interior < k:
            continue
        lengths = [1] * k
        for _ in range(interior - k):
            lengths[rng.randrange(k)] += 1
        edges = []
        nxt = 2
        for ln in lengths:
            chain_vs = [0] + list(range(nxt, nxt + ln)) + [1]
            nxt += ln
            edges += list(zip(chain_vs, chain_vs[1:]))
        present = {(min(a, b), max(a, b)) for a, b in edges}
        for e in combinations(range(n), 2):
            if e not in present and rng.random() < extra:
                present.add(e)
        g = _relabel(Graph(n, present), rng)
        if is_two_connected(g) and not hamiltonian_path_exists(g):
            return g
    raise FamilyError("could not sample a 2-connected non-traceable graph")


def random_connected_spanning_subgraph(g: Graph, rng: random.Random, keep: float = 0.6) -> Graph:
    """Drop edges at random while keeping the graph connected."""
    from .structure import is_connected

    edges = list(g.edges)
    rng.shuffle(edges)
    current = set(edges)
    for e in edges:
        if rng.random() < keep:
            continue
        trial = current - {e}
        if is_connected(Graph(g.n, trial)):
            current = trial
    return Graph(g.n, current)


def tree_canonical_form(t: Graph) -> str:
    """Isomorphism-invariant string of a tree (AHU encoding rooted at its center)."""
    if t.n == 1:
        return "()"
    deg = t.degrees()
    layer = [v for v in range(t.n) if deg[v] <= 1]
    left = t.n
    removed = set()
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            removed.add(v)
            for w in t.neighbors(v):
                if w not in removed:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    centers = [v for v in range(t.n) if v not in removed]

    def enc(v, parent):
        return "(" + "".join(sorted(enc(w, v) for w in t.neighbors(v) if w != parent)) + ")"

    return min(enc(c, -1) for c in centers)


def nonisomorphic_trees(n: int) -> list[Graph]:
    """All trees on ``n`` vertices up to isomorphism (grown leaf by leaf)."""
    if n < 1:
        return []
    level = {"()": Graph(1)}
    for k in range(2, n + 1):
        nxt: dict = {}
        for t in level.values():
            for v in range(t.n):
                g = Graph(k, list(t.edges) + [(v, k - 1)])
                nxt.setdefault(tree_canonical_form(g), g)
        level = nxt
    return [level[key] for key in sorted(level)]
